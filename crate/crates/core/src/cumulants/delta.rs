//! The change of free cumulants when one node is added to a diagram.
//!
//! For a single row the difference `R_n(λ^{(i)}) − R_n(λ)` is a polynomial in
//! `x_i` and the `R_k(λ)` whose coefficients lie in `ℤ[1/α, β]`; products over
//! the parts of `ρ` give the general table. Coefficients are stored as field
//! elements in `α` and `β` and specialized by the caller.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_traits::One;

use crate::exact::field::FieldElem;
use crate::exact::poly::Var;
use crate::exact::rational::{binomial, binomial_int, Rational};
use crate::exact::scalar::Scalar;
use crate::partitions::{enumerate, Partition};

use super::moments::CumulantVector;

/// `R_ρ(λ^{(i)}) − R_ρ(λ) = Σ_k x_i^{|ρ|−k} Σ_σ b_{k,σ}(ρ) R_σ(λ)`.
#[derive(Clone, Debug, PartialEq)]
pub struct BTable {
    pub rho: Partition,
    /// `(k, σ) ↦ b_{k,σ}(ρ)`, nonzero entries only.
    pub rows: BTreeMap<(u32, Partition), FieldElem>,
}

type Terms = BTreeMap<(u32, Partition), FieldElem>;

fn frac(n: i64, d: i64) -> FieldElem {
    FieldElem::from_rational(&Rational::new(n.into(), d.into()))
}

fn int(n: BigInt) -> FieldElem {
    FieldElem::from_rational(&Rational::from_integer(n))
}

/// Terms of `R_n(λ^{(i)}) − R_n(λ)` keyed by (power of `x_i`, σ).
fn single_row(n: u32) -> Terms {
    let mut out = Terms::new();
    if n < 2 {
        return out;
    }
    let ni = n as i64;
    let minus_inv_alpha = -&FieldElem::alpha().inv().unwrap();
    let beta = FieldElem::beta();
    for t in 0..=n - 2 {
        // Σ_{|σ|=t} u_σ/(1−n+t) C(1−n+t, l(σ)) R_σ
        let top = 1 - ni + t as i64;
        let inner: Vec<(Partition, FieldElem)> = enumerate(t, 2)
            .into_iter()
            .filter_map(|sigma| {
                let c = binomial_int(top, sigma.len() as u64) * Rational::from_integer(sigma.stats().u)
                    / Rational::from_integer(top.into());
                (c != Rational::from_integer(0.into())).then(|| (sigma, FieldElem::from_rational(&c)))
            })
            .collect();
        for r in 1..=(n - t) / 2 {
            for s in 0..=n - t - 2 * r {
                let e = n - 2 * r - s - t;
                let c = int(binomial((n - t - 1) as u64, (2 * r + s - 1) as u64)
                    * binomial((r + s - 1) as u64, s as u64)
                    * binomial((n - 1) as u64, r as u64));
                let c = c * minus_inv_alpha.pow((r + s) as i32) * beta.pow(s as i32);
                for (sigma, w) in &inner {
                    let term = &c * w;
                    let slot = out.entry((e, sigma.clone())).or_insert_with(FieldElem::zero);
                    *slot = &*slot + &term;
                }
            }
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

fn multiply(a: &Terms, b: &Terms) -> Terms {
    let mut out = Terms::new();
    for ((e1, s1), c1) in a {
        for ((e2, s2), c2) in b {
            let slot = out.entry((e1 + e2, s1.union_partition(s2))).or_insert_with(FieldElem::zero);
            *slot = &*slot + &(c1 * c2);
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// Builds the table for `ρ` (parts ≥ 2).
pub fn add_node_delta(rho: &Partition) -> BTable {
    let mut acc = Terms::new();
    acc.insert((0, Partition::empty()), FieldElem::one());
    for &p in rho.parts() {
        let mut factor = single_row(p);
        factor.insert((0, Partition::row(p)), FieldElem::one());
        acc = multiply(&acc, &factor);
    }
    acc.remove(&(0, rho.clone()));
    let w = rho.weight();
    let rows = acc.into_iter().map(|((e, s), c)| ((w - e, s), c)).collect();
    BTable { rho: rho.clone(), rows }
}

impl BTable {
    /// Power of `x_i` attached to index `k`.
    pub fn x_power(&self, k: u32) -> u32 {
        self.rho.weight() - k
    }

    /// Entries with `|σ| = k − 2`.
    pub fn top_stratum(&self) -> Terms {
        self.rows.iter().filter(|((k, s), _)| s.weight() + 2 == *k).map(|(key, v)| (key.clone(), v.clone())).collect()
    }

    /// `Σ x^{|ρ|−k} b_{k,σ} R_σ` at a point, with `at` specializing `α`, `β`.
    pub fn evaluate<S: Scalar>(&self, x: &S, r: &CumulantVector<S>, at: impl Fn(&FieldElem) -> S) -> S {
        self.rows.iter().fold(S::zero(), |acc, ((k, sigma), c)| {
            acc.plus(&at(c).times(&x.power(self.x_power(*k))).times(&r.product(sigma)))
        })
    }

    /// Whether every coefficient lies in `ℤ[1/α, β]`.
    pub fn is_integral_in_inverse_alpha(&self) -> bool {
        self.rows.values().all(|c| {
            let k = c.denom().degree_in(Var::Alpha) as i32;
            (c * &FieldElem::alpha().pow(k)).as_poly().is_some_and(|p| p.denominator_lcm().is_one())
        })
    }
}

/// The closed form for the `|σ| = k − 2` stratum:
/// `(1/α) Σ_p m_p(ρ)(p−1) R_{ρ∖p} Σ_{k=2}^{p} x^{p−k} Σ_{|ν|=k−2} C(k−p−1, l(ν)) u_ν R_ν`.
pub fn top_stratum_closed_form(rho: &Partition) -> Terms {
    let mut out = Terms::new();
    let inv_alpha = FieldElem::alpha().inv().unwrap();
    let w = rho.weight();
    for (&p, &m) in rho.multiplicities().iter() {
        let rest = rho.surgery(crate::partitions::Surgery::Remove(p)).unwrap();
        let lead = &inv_alpha * &frac((m as i64) * (p as i64 - 1), 1);
        for k in 2..=p {
            for nu in enumerate(k - 2, 2) {
                let c = binomial_int(k as i64 - p as i64 - 1, nu.len() as u64) * Rational::from_integer(nu.stats().u);
                if c == Rational::from_integer(0.into()) {
                    continue;
                }
                let e = p - k;
                let key = (w - e, rest.union_partition(&nu));
                let slot = out.entry(key).or_insert_with(FieldElem::zero);
                *slot = &*slot + &(&lead * &FieldElem::from_rational(&c));
            }
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// Concurrent memo of tables keyed by `ρ`; writes are idempotent.
#[derive(Default, Debug)]
pub struct BTableCache {
    store: RwLock<HashMap<Partition, Arc<BTable>>>,
}

impl BTableCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, rho: &Partition) -> Arc<BTable> {
        if let Some(t) = self.store.read().unwrap().get(rho) {
            return Arc::clone(t);
        }
        let t = Arc::new(add_node_delta(rho));
        let mut w = self.store.write().unwrap();
        Arc::clone(w.entry(rho.clone()).or_insert(t))
    }

    pub fn len(&self) -> usize {
        self.store.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}
