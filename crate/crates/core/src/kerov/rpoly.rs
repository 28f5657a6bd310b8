use std::collections::BTreeMap;

use crate::cumulants::CumulantVector;
use crate::exact::scalar::Scalar;
use crate::partitions::Partition;

/// A polynomial in `R_2, R_3, …`; the key `ρ` stands for `R_ρ = Π R_{ρ_k}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RPoly<S> {
    terms: BTreeMap<Partition, S>,
}

impl<S: Scalar> Default for RPoly<S> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<S: Scalar> RPoly<S> {
    pub fn zero() -> Self {
        RPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(S::one())
    }

    pub fn constant(c: S) -> Self {
        Self::monomial(Partition::empty(), c)
    }

    /// `R_k`.
    pub fn var(k: u32) -> Self {
        Self::monomial(Partition::row(k), S::one())
    }

    pub fn monomial(rho: Partition, c: S) -> Self {
        let mut p = Self::zero();
        p.add_term(rho, c);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Partition, S)>) -> Self {
        let mut p = Self::zero();
        for (rho, c) in terms {
            p.add_term(rho, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Partition, &S)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<Partition, S> {
        self.terms
    }

    pub fn coeff(&self, rho: &Partition) -> S {
        self.terms.get(rho).cloned().unwrap_or_else(S::zero)
    }

    pub fn add_term(&mut self, rho: Partition, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(rho) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().plus(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn plus(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (rho, c) in &rhs.terms {
            out.add_term(rho.clone(), c.clone());
        }
        out
    }

    pub fn minus(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (rho, c) in &rhs.terms {
            out.add_term(rho.clone(), c.negated());
        }
        out
    }

    pub fn negated(&self) -> Self {
        self.map(|c| c.negated())
    }

    pub fn scale(&self, k: &S) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        self.map(|c| c.times(k))
    }

    /// `c · R_σ · self`.
    pub fn mul_monomial(&self, sigma: &Partition, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut out = Self::zero();
        for (rho, a) in &self.terms {
            out.add_term(rho.union_partition(sigma), a.times(c));
        }
        out
    }

    pub fn times(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (sigma, c) in &rhs.terms {
            for (rho, a) in &self.terms {
                out.add_term(rho.union_partition(sigma), a.times(c));
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc.times(self))
    }

    pub fn max_weight(&self) -> Option<u32> {
        self.terms.keys().map(Partition::weight).max()
    }

    pub fn min_weight(&self) -> Option<u32> {
        self.terms.keys().map(Partition::weight).min()
    }

    /// Terms of weight `w`.
    pub fn homogeneous(&self, w: u32) -> Self {
        self.filter(|rho, _| rho.weight() == w)
    }

    pub fn filter(&self, keep: impl Fn(&Partition, &S) -> bool) -> Self {
        RPoly { terms: self.terms.iter().filter(|(r, c)| keep(r, c)).map(|(r, c)| (r.clone(), c.clone())).collect() }
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> RPoly<T> {
        RPoly::from_terms(self.terms.iter().map(|(r, c)| (r.clone(), f(c))))
    }

    pub fn try_map<T: Scalar, E>(&self, f: impl Fn(&S) -> Result<T, E>) -> Result<RPoly<T>, E> {
        let mut out = RPoly::zero();
        for (r, c) in &self.terms {
            out.add_term(r.clone(), f(c)?);
        }
        Ok(out)
    }

    /// Substitutes a polynomial for each `R_k`.
    pub fn compose(&self, image: impl Fn(u32) -> Self) -> Self {
        let mut cache: BTreeMap<u32, Self> = BTreeMap::new();
        let mut out = Self::zero();
        for (rho, c) in &self.terms {
            let mut acc = Self::constant(c.clone());
            for &k in rho.parts() {
                let img = cache.entry(k).or_insert_with(|| image(k));
                acc = acc.times(img);
            }
            out = out.plus(&acc);
        }
        out
    }

    /// Value at the free cumulants of a diagram.
    pub fn eval(&self, r: &CumulantVector<S>) -> S {
        self.terms.iter().fold(S::zero(), |acc, (rho, c)| acc.plus(&c.times(&r.product(rho))))
    }

    /// Largest index `k` with `R_k` present.
    pub fn max_index(&self) -> Option<u32> {
        self.terms.keys().filter_map(|r| r.parts().first().copied()).max()
    }
}
