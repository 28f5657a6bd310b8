//! The linear system determining `K_μ` from the two Pieri relations.
//!
//! Writing `K_μ = Σ a_ρ R_ρ`, the relations become
//!
//! ```text
//! Σ_ρ a_ρ Σ_{k,σ} b_{k,σ}(ρ) M_{|ρ|−k}   R_σ = 0
//! Σ_ρ a_ρ Σ_{k,σ} b_{k,σ}(ρ) M_{|ρ|−k+1} R_σ = 2(αR_2 − |μ| + 2) m_2 K_{μ∖2} + Σ_{r≥3} r m_r K_{μ↓(r)}
//! ```
//!
//! with the moments rewritten in free cumulants. An unknown of weight `s`
//! reaches the second equation in weight `≤ s−1` and the first in weight
//! `≤ s−2`, with equality only through the `|σ| = k−2` stratum. The system is
//! therefore block triangular: the unknowns of weight `s` are fixed by the rows
//! `τ ⊢ s−1` of the second equation and `τ ⊢ s−2` of the first, once every
//! heavier unknown is known. Each block goes through the exact solver; rows
//! left over at the end form the consistency certificate.
//!
//! The constant term never enters the equations. It is set to zero, the value
//! of the shifted-symmetric `ϑ_μ` at the empty diagram.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use crate::cumulants::BTableCache;
use crate::exact::field::FieldElem;
use crate::exact::poly::Var;
use crate::exact::rational::{binomial_int, Rational};
use crate::exact::scalar::Scalar;
use crate::partitions::{enumerate, enumerate_range, Partition, Surgery};

use super::rpoly::RPoly;
use super::KerovError;

type Specializer<S> = Box<dyn Fn(&FieldElem) -> S + Send + Sync>;

/// One weight block of a solve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockReport {
    pub weight: u32,
    pub rows: usize,
    pub unknowns: usize,
    pub rank: usize,
}

/// Certificate of a solve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveReport {
    pub mu: Partition,
    pub support: Vec<Partition>,
    pub blocks: Vec<BlockReport>,
    /// Number of residual monomials checked to vanish after the last block.
    pub residual_checked: usize,
}

/// Bounds on the unknown monomials `R_ρ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Support {
    pub max_part: u32,
    pub max_weight: u32,
}

impl Support {
    /// Parts in `[2, |μ|−l(μ)+2]`, weight at most `|μ|+l(μ)`.
    pub fn of(mu: &Partition) -> Self {
        let l = mu.len() as u32;
        Support { max_part: mu.weight() - l + 2, max_weight: mu.weight() + l }
    }

    /// One more in both bounds.
    pub fn relaxed(self) -> Self {
        Support { max_part: self.max_part + 1, max_weight: self.max_weight + 1 }
    }

    pub fn monomials(&self) -> Vec<Partition> {
        enumerate_range(2, self.max_weight, 2).into_iter().filter(|r| r.part(1) <= self.max_part).collect()
    }
}

/// Memoizing solver over a coefficient field `S`, with `α` and `β` given as
/// elements of `S` and the node tables specialized through `specialize`.
pub struct Kerov<S: Scalar> {
    alpha: S,
    beta: S,
    specialize: Specializer<S>,
    btables: BTableCache,
    lhs: RwLock<HashMap<Partition, Arc<[RPoly<S>; 2]>>>,
    moments: RwLock<Vec<RPoly<S>>>,
    memo: RwLock<HashMap<Partition, Arc<RPoly<S>>>>,
}

impl Kerov<FieldElem> {
    /// `α` and `β` independent indeterminates.
    pub fn symbolic() -> Self {
        Kerov::new(FieldElem::alpha(), FieldElem::beta(), |c| c.clone())
    }

    /// `α`, `β` replaced by the given field elements.
    pub fn specialized(alpha: FieldElem, beta: FieldElem) -> Self {
        let (a, b) = (alpha.clone(), beta.clone());
        Kerov::new(alpha, beta, move |c| {
            c.substitute(&|v| match v {
                Var::Alpha => a.clone(),
                Var::Beta => b.clone(),
                v => FieldElem::var(v),
            })
            .expect("node tables only have powers of α in denominators")
        })
    }
}

impl Kerov<Rational> {
    pub fn at(alpha: Rational, beta: Rational) -> Self {
        let point = [alpha.clone(), beta.clone(), Rational::from_integer(0.into()), Rational::from_integer(0.into())];
        Kerov::new(alpha, beta, move |c| c.eval(&point).expect("α ≠ 0"))
    }

    /// `α = −1/(ζη)`, `β = 1/ζ + 1/η`.
    pub fn at_zeta_eta(zeta: &Rational, eta: &Rational) -> Result<Self, KerovError> {
        let (a, b) = alpha_beta(zeta, eta)?;
        Ok(Kerov::at(a, b))
    }
}

/// `(α, β)` of a pair `(ζ, η)`.
pub fn alpha_beta<S: Scalar>(zeta: &S, eta: &S) -> Result<(S, S), KerovError> {
    let pole = || KerovError::Invariant("ζ and η must be nonzero".into());
    let a = zeta.times(eta).inverse().ok_or_else(pole)?.negated();
    let b = zeta.inverse().ok_or_else(pole)?.plus(&eta.inverse().ok_or_else(pole)?);
    Ok((a, b))
}

impl<S: Scalar> Kerov<S> {
    pub fn new(alpha: S, beta: S, specialize: impl Fn(&FieldElem) -> S + Send + Sync + 'static) -> Self {
        Kerov {
            alpha,
            beta,
            specialize: Box::new(specialize),
            btables: BTableCache::new(),
            lhs: RwLock::new(HashMap::new()),
            moments: RwLock::new(Vec::new()),
            memo: RwLock::new(HashMap::new()),
        }
    }

    pub fn alpha(&self) -> &S {
        &self.alpha
    }

    pub fn beta(&self) -> &S {
        &self.beta
    }

    /// `M_j` as a polynomial in free cumulants, from `(j+1) M_j = Σ C(j+1, l) u_ν R_ν`.
    pub fn moment(&self, j: u32) -> RPoly<S> {
        if let Some(m) = self.moments.read().unwrap().get(j as usize) {
            return m.clone();
        }
        let mut w = self.moments.write().unwrap();
        while w.len() <= j as usize {
            let n = w.len() as u32;
            let p = if n == 0 {
                RPoly::one()
            } else {
                let d = Rational::from_integer((n as i64 + 1).into());
                RPoly::from_terms(enumerate(n, 2).into_iter().map(|nu| {
                    let c = binomial_int(n as i64 + 1, nu.len() as u64) * Rational::from_integer(nu.stats().u) / &d;
                    (nu, S::from_rational(&c))
                }))
            };
            w.push(p);
        }
        w[j as usize].clone()
    }

    /// Images of `R_ρ` in both equations.
    fn lhs(&self, rho: &Partition) -> Arc<[RPoly<S>; 2]> {
        if let Some(v) = self.lhs.read().unwrap().get(rho) {
            return Arc::clone(v);
        }
        let table = self.btables.get(rho);
        let w = rho.weight();
        let mut out = [RPoly::zero(), RPoly::zero()];
        for ((k, sigma), b) in &table.rows {
            let c = (self.specialize)(b);
            for (eps, slot) in out.iter_mut().enumerate() {
                let m = self.moment(w - k + eps as u32);
                *slot = slot.plus(&m.mul_monomial(sigma, &c));
            }
        }
        let v = Arc::new(out);
        Arc::clone(self.lhs.write().unwrap().entry(rho.clone()).or_insert(v))
    }

    /// Right-hand side of the second equation for `μ`.
    fn rhs(&self, mu: &Partition) -> Result<RPoly<S>, KerovError> {
        let mut rhs = RPoly::zero();
        for (&r, &m) in mu.multiplicities().iter() {
            if r == 2 {
                let rest = self.kerov_k(&mu.surgery(Surgery::Remove(2))?)?;
                let shift = S::from_int(mu.weight() as i64 - 2);
                let factor = RPoly::monomial(Partition::row(2), self.alpha.clone()).minus(&RPoly::constant(shift));
                rhs = rhs.plus(&factor.times(&rest).scale(&S::from_int(2 * m as i64)));
            } else {
                let down = self.kerov_k(&mu.surgery(Surgery::Down(r))?)?;
                rhs = rhs.plus(&down.scale(&S::from_int(r as i64 * m as i64)));
            }
        }
        Ok(rhs)
    }

    /// Solves the system on the given support.
    pub fn solve(&self, mu: &Partition, support: Support, rhs: &RPoly<S>) -> Result<(RPoly<S>, SolveReport), KerovError> {
        let unknowns = support.monomials();
        let mut residual = [RPoly::zero(), rhs.clone()];
        let mut solution = RPoly::zero();
        let mut blocks = Vec::new();
        for s in (2..=support.max_weight).rev() {
            let cols: Vec<&Partition> = unknowns.iter().filter(|r| r.weight() == s).collect();
            if cols.is_empty() {
                continue;
            }
            let images: Vec<Arc<[RPoly<S>; 2]>> = cols.iter().map(|r| self.lhs(r)).collect();
            let mut rows: Vec<(usize, Partition)> = enumerate(s - 1, 2).into_iter().map(|t| (1, t)).collect();
            rows.extend(enumerate(s - 2, 2).into_iter().map(|t| (0, t)));
            let a: Vec<Vec<S>> =
                rows.iter().map(|(e, tau)| images.iter().map(|img| img[*e].coeff(tau)).collect()).collect();
            let b: Vec<Vec<S>> = rows.iter().map(|(e, tau)| vec![residual[*e].coeff(tau)]).collect();
            let sol = S::solve(&a, &b).map_err(|source| KerovError::Unsolvable { mu: mu.clone(), weight: s, source })?;
            blocks.push(BlockReport { weight: s, rows: rows.len(), unknowns: cols.len(), rank: sol.rank });
            for ((rho, img), x) in cols.iter().zip(&images).zip(sol.values()) {
                if x.is_zero() {
                    continue;
                }
                solution.add_term((*rho).clone(), x.clone());
                for e in 0..2 {
                    residual[e] = residual[e].minus(&img[e].scale(x));
                }
            }
        }
        let residual_checked = residual[0].len() + residual[1].len();
        for (e, r) in residual.iter().enumerate() {
            if let Some((tau, _)) = r.terms().next() {
                return Err(KerovError::Inconsistent {
                    mu: mu.clone(),
                    detail: format!("equation {} keeps the monomial R_{tau}", e + 1),
                });
            }
        }
        Ok((solution, SolveReport { mu: mu.clone(), support: unknowns, blocks, residual_checked }))
    }

    /// `K_μ`, memoized; `K_∅ = 1`.
    pub fn kerov_k(&self, mu: &Partition) -> Result<Arc<RPoly<S>>, KerovError> {
        if let Some(k) = self.memo.read().unwrap().get(mu) {
            return Ok(Arc::clone(k));
        }
        if mu.contains_part(1) {
            return Err(KerovError::PartOne(mu.clone()));
        }
        let k = if mu.is_empty() {
            RPoly::one()
        } else {
            let rhs = self.rhs(mu)?;
            self.solve(mu, Support::of(mu), &rhs)?.0
        };
        let k = Arc::new(k);
        Ok(Arc::clone(self.memo.write().unwrap().entry(mu.clone()).or_insert(k)))
    }

    /// Installs a known `K_μ`, used in place of solving; later solves that
    /// recurse through `μ` see this value.
    pub fn seed(&self, mu: &Partition, k: RPoly<S>) {
        self.memo.write().unwrap().insert(mu.clone(), Arc::new(k));
    }

    /// `K_μ` if already known.
    pub fn known(&self, mu: &Partition) -> Option<Arc<RPoly<S>>> {
        self.memo.read().unwrap().get(mu).cloned()
    }

    /// `K_μ` together with the certificate of its final solve.
    pub fn kerov_k_report(&self, mu: &Partition) -> Result<(RPoly<S>, SolveReport), KerovError> {
        if mu.contains_part(1) || mu.is_empty() {
            return Err(KerovError::PartOne(mu.clone()));
        }
        let rhs = self.rhs(mu)?;
        self.solve(mu, Support::of(mu), &rhs)
    }

    /// Solves once more with both support bounds raised by one and checks that
    /// the extra unknowns vanish.
    pub fn check_support(&self, mu: &Partition) -> Result<RPoly<S>, KerovError> {
        let k = self.kerov_k(mu)?;
        let rhs = self.rhs(mu)?;
        let (wide, _) = self.solve(mu, Support::of(mu).relaxed(), &rhs)?;
        if wide != *k {
            return Err(KerovError::Invariant(format!("relaxed support changes K_{mu}")));
        }
        Ok(wide)
    }

    /// `K_2, …, K_{r_max}` through the row chain, whose right-hand side is
    /// `r K_{r−1}` with `K_1 = αR_2`.
    pub fn kerov_rows(&self, r_max: u32) -> Result<Vec<RPoly<S>>, KerovError> {
        let mut prev = RPoly::monomial(Partition::row(2), self.alpha.clone());
        let mut out = Vec::new();
        for r in 2..=r_max {
            let mu = Partition::row(r);
            let (k, _) = self.solve(&mu, Support::of(&mu), &prev.scale(&S::from_int(r as i64)))?;
            out.push(k.clone());
            prev = k;
        }
        Ok(out)
    }
}
