//! Fitting the structure functions `f_{ij}` (R-side) and `g_{ij}` (Q-side).
//!
//! R-side: the coefficient of `R_ρ` in `K_r^{(i,j)}` is
//! `r (l(ρ)+2i−j−2)! f_{ij}(ρ) v_ρ / Π m_k(ρ)!` with `v_ρ = Π (ρ_k − 1)`.
//! Q-side: the coefficient of `Q_ρ` in the `Q`-expansion is
//! `r (2i−j−1)^{l(ρ)} g_{ij}(ρ) / Π m_k(ρ)!`.
//! In both cases `f`, `g` are unknown combinations of monomial symmetric
//! functions `m_ν`, `|ν| ≤ 4i−2j−2`, evaluated at the parts of `ρ`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::RangeInclusive;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::exact::field::FieldElem;
use crate::exact::linsolve::linsolve_rational;
use crate::exact::rational::{factorial, rat, Rational};
use crate::exact::ExactError;
use crate::partitions::{enumerate, enumerate_range, Partition};

use super::grading::grade_row;
use super::qc::{to_basis, Basis};
use super::rpoly::RPoly;
use super::solver::Kerov;
use super::KerovError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FitSide {
    /// `f_{ij}` against the `𝓡_ρ`.
    R,
    /// `g_{ij}` against the `𝓠_ρ`.
    Q,
}

/// `m_ν` evaluated at the vector `x` (missing entries are zero).
pub fn monomial_value(nu: &Partition, x: &[u32]) -> Rational {
    fn go(parts: &[u32], x: &[u32], used: &mut Vec<bool>) -> Rational {
        let Some((&p, rest)) = parts.split_first() else {
            return Rational::one();
        };
        let mut acc = Rational::zero();
        for k in 0..x.len() {
            if !used[k] {
                used[k] = true;
                acc += Rational::from_integer(x[k].pow(p).into()) * go(rest, x, used);
                used[k] = false;
            }
        }
        acc
    }
    if nu.len() > x.len() {
        return Rational::zero();
    }
    let mut v = go(nu.parts(), x, &mut vec![false; x.len()]);
    for &m in nu.multiplicities().values() {
        v /= Rational::from_integer(factorial(m as u64));
    }
    v
}

/// An inhomogeneous symmetric function `Σ c_ν m_ν`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MonomialExpansion {
    pub coeffs: BTreeMap<Partition, Rational>,
}

impl MonomialExpansion {
    pub fn new(coeffs: impl IntoIterator<Item = (Partition, Rational)>) -> Self {
        MonomialExpansion { coeffs: coeffs.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    /// Parses `"3*m2 + 4*m11 + 2*m1"`; parts are single digits.
    pub fn parse(s: &str, denominator: i64) -> Option<Self> {
        let mut out = BTreeMap::new();
        for term in s.split('+') {
            let (c, m) = term.trim().split_once("*m")?;
            let parts: Option<Vec<u32>> = m.chars().map(|ch| ch.to_digit(10)).collect();
            let c: i64 = c.trim().parse().ok()?;
            out.insert(Partition::new(parts?), Rational::new(c.into(), denominator.into()));
        }
        Some(MonomialExpansion { coeffs: out })
    }

    pub fn eval(&self, x: &[u32]) -> Rational {
        self.coeffs.iter().map(|(nu, c)| c * monomial_value(nu, x)).sum()
    }

    pub fn degree(&self) -> u32 {
        self.coeffs.keys().map(Partition::weight).max().unwrap_or(0)
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|(nu, c)| (nu.clone(), c * k)))
    }

    pub fn plus(&self, rhs: &Self) -> Self {
        let mut out = self.coeffs.clone();
        for (nu, c) in &rhs.coeffs {
            *out.entry(nu.clone()).or_insert_with(Rational::zero) += c;
        }
        Self::new(out)
    }

    /// Product with `m_1`: raising one part `p` of `ν` gives coefficient
    /// `m_{p+1}` of the result, appending a part `1` gives `m_1` of it.
    pub fn times_m1(&self) -> Self {
        let mut out: BTreeMap<Partition, Rational> = BTreeMap::new();
        for (nu, c) in &self.coeffs {
            let mut push = |kappa: Partition, mult: usize| {
                *out.entry(kappa).or_insert_with(Rational::zero) += c * rat(mult as i64);
            };
            for &p in nu.multiplicities().keys() {
                let mut parts = nu.parts().to_vec();
                let k = parts.iter().position(|&q| q == p).unwrap();
                parts[k] += 1;
                let kappa = Partition::new(parts);
                let mult = kappa.multiplicity(p + 1);
                push(kappa, mult);
            }
            let kappa = nu.union_partition(&Partition::row(1));
            let mult = kappa.multiplicity(1);
            push(kappa, mult);
        }
        Self::new(out)
    }

    /// `Σ c_ν m_ν` times the polynomial `Σ a_k m_1^k`.
    pub fn times_m1_poly(&self, a: &[Rational]) -> Self {
        let mut acc = MonomialExpansion::default();
        let mut power = self.clone();
        for c in a {
            acc = acc.plus(&power.scale(c));
            power = power.times_m1();
        }
        acc
    }
}

impl fmt::Display for MonomialExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut keys: Vec<&Partition> = self.coeffs.keys().collect();
        keys.sort_by_key(|nu| (std::cmp::Reverse(nu.weight()), std::cmp::Reverse((*nu).clone())));
        for (idx, nu) in keys.into_iter().enumerate() {
            let c = &self.coeffs[nu];
            let sign = if c.is_negative() { "-" } else { "+" };
            if idx > 0 {
                write!(f, " {sign} ")?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            let name = if nu.is_empty() {
                "1".to_string()
            } else {
                format!("m{}", nu.parts().iter().map(u32::to_string).collect::<String>())
            };
            if c.abs().is_one() {
                f.write_str(&name)?;
            } else if nu.is_empty() {
                write!(f, "{}", c.abs())?;
            } else {
                write!(f, "{}*{name}", c.abs())?;
            }
        }
        Ok(())
    }
}

/// A fitted structure function.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymFunFit {
    pub i: u32,
    pub j: u32,
    pub side: FitSide,
    pub function: MonomialExpansion,
    pub max_degree: u32,
    /// Rows `r` used in the fit.
    pub fitted_rows: Vec<u32>,
    /// Rows predicted correctly beyond the fitted ones.
    pub checked_rows: Vec<u32>,
}

/// Weight of `K_r^{(i,j)}`.
pub fn component_weight(r: u32, i: u32, j: u32) -> Option<u32> {
    (r as i64 - 2 * i as i64 + j as i64 + 1).try_into().ok()
}

fn mult_factorials(rho: &Partition) -> Rational {
    rho.multiplicities().values().map(|&m| Rational::from_integer(factorial(m as u64))).product()
}

/// The normalizing factor `N` with `coefficient = N · f(ρ)`; `None` if it vanishes.
fn normalization(side: FitSide, r: u32, i: u32, j: u32, rho: &Partition) -> Option<Rational> {
    let l = rho.len() as i64;
    let n = match side {
        FitSide::R => {
            let e = l + 2 * i as i64 - j as i64 - 2;
            if e < 0 {
                return None;
            }
            rat(r as i64) * Rational::from_integer(factorial(e as u64)) * Rational::from_integer(rho.stats().v)
                / mult_factorials(rho)
        }
        FitSide::Q => {
            let base = rat(2 * i as i64 - j as i64 - 1);
            rat(r as i64) * base.pow(l as i32) / mult_factorials(rho)
        }
    };
    (!n.is_zero()).then_some(n)
}

/// `K_r^{(i,j)}` for each `r`, in the basis matching `side`.
pub fn row_components(
    k: &Kerov<FieldElem>,
    i: u32,
    j: u32,
    side: FitSide,
    rows: impl IntoIterator<Item = u32>,
) -> Result<BTreeMap<u32, RPoly<Rational>>, KerovError> {
    let mut out = BTreeMap::new();
    for r in rows {
        let c = grade_row(&*k.kerov_k(&Partition::row(r))?, r).component(i, j);
        out.insert(r, if side == FitSide::Q { to_basis(&c, Basis::Q) } else { c });
    }
    Ok(out)
}

/// The component predicted by a structure function.
pub fn predict(function: &MonomialExpansion, side: FitSide, r: u32, i: u32, j: u32) -> RPoly<Rational> {
    let Some(w) = component_weight(r, i, j) else {
        return RPoly::zero();
    };
    let mut out = RPoly::zero();
    for rho in enumerate(w, 2) {
        if rho.is_empty() {
            continue;
        }
        if let Some(n) = normalization(side, r, i, j, &rho) {
            out.add_term(rho.clone(), n * function.eval(rho.parts()));
        }
    }
    out
}

/// Fits `f_{ij}` or `g_{ij}` on the components of `K_r`, `r ∈ fit`, and checks
/// the prediction for each `r ∈ check`.
pub fn fit_structure_function(
    components: &BTreeMap<u32, RPoly<Rational>>,
    i: u32,
    j: u32,
    side: FitSide,
    fit: RangeInclusive<u32>,
    check: &[u32],
) -> Result<SymFunFit, KerovError> {
    if (i, j) == (0, 0) || (side == FitSide::Q && (i, j) == (1, 1)) {
        return Err(KerovError::Invariant(format!("no structure function for ({i},{j}) on the {side:?} side")));
    }
    let max_degree = 4 * i - 2 * j - 2;
    let basis = enumerate_range(0, max_degree, 1);
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    let mut fitted_rows = Vec::new();
    for r in fit {
        let comp = components.get(&r).ok_or_else(|| KerovError::Invariant(format!("component of K_{r} missing")))?;
        let Some(w) = component_weight(r, i, j) else { continue };
        fitted_rows.push(r);
        for rho in enumerate(w, 2) {
            if rho.is_empty() {
                continue;
            }
            let Some(n) = normalization(side, r, i, j, &rho) else { continue };
            rows.push(basis.iter().map(|nu| monomial_value(nu, rho.parts())).collect::<Vec<_>>());
            rhs.push(comp.coeff(&rho) / n);
        }
    }
    let sol = linsolve_rational(&rows, &rhs).map_err(|e| match e {
        ExactError::Underdetermined { free_column } => KerovError::RankDeficient(format!(
            "rows {fitted_rows:?} leave the coefficient of m{} in {side:?}-side ({i},{j}) undetermined",
            basis[free_column].parts().iter().map(u32::to_string).collect::<String>()
        )),
        ExactError::Inconsistent { .. } => KerovError::Inconsistent {
            mu: Partition::empty(),
            detail: format!("no symmetric function of degree ≤ {max_degree} fits {side:?}-side ({i},{j}) on rows {fitted_rows:?}"),
        },
        e => KerovError::Exact(e),
    })?;
    let function = MonomialExpansion::new(basis.into_iter().zip(sol.values().iter().cloned()));
    for &r in check {
        let comp = components.get(&r).ok_or_else(|| KerovError::Invariant(format!("component of K_{r} missing")))?;
        if &predict(&function, side, r, i, j) != comp {
            return Err(KerovError::Inconsistent {
                mu: Partition::row(r),
                detail: format!("the fitted {side:?}-side ({i},{j}) function mispredicts K_{r}"),
            });
        }
    }
    Ok(SymFunFit { i, j, side, function, max_degree, fitted_rows, checked_rows: check.to_vec() })
}

/// Values printed in the literature, keyed like `"f22"`.
pub fn published(name: &str) -> Option<(u32, u32, FitSide, MonomialExpansion)> {
    let p = MonomialExpansion::parse;
    let deg4 = "15*m4 + 40*m31 + 60*m22 + 90*m211 + 144*m1111 + 60*m3 + 120*m21 + 180*m111 + 75*m2 + 100*m11 + 30*m1";
    Some(match name {
        "f11" => (1, 1, FitSide::R, MonomialExpansion::new([(Partition::empty(), Rational::new(1.into(), 2.into()))])),
        "f10" => (1, 0, FitSide::R, p("1*m2 + 2*m11 + 2*m1", 24)?),
        "g10" => (1, 0, FitSide::Q, p("1*m2 + 2*m11 + 2*m1", 24)?),
        "f22" => (2, 2, FitSide::R, p("3*m2 + 4*m11 + 2*m1", 24)?),
        "g22" => (2, 2, FitSide::Q, p("3*m2 + 2*m11 + 2*m1", 24)?),
        "f33" => (3, 3, FitSide::R, p(deg4, 1440)?),
        "g33" => (
            3,
            3,
            FitSide::Q,
            p("1*m4 + 2*m31 + 3*m22 + 3*m211 + 3*m1111 + 4*m3 + 6*m21 + 6*m111 + 5*m2 + 5*m11 + 2*m1", 96)?,
        ),
        "f21" => (
            2,
            1,
            FitSide::R,
            p("13*m4 + 40*m31 + 55*m22 + 95*m211 + 162*m1111 + 68*m3 + 150*m21 + 240*m111 + 103*m2 + 150*m11 + 48*m1", 1440)?,
        ),
        "g21" => (
            2,
            1,
            FitSide::Q,
            p("26*m4 + 68*m31 + 87*m22 + 123*m211 + 147*m1111 + 136*m3 + 246*m21 + 294*m111 + 206*m2 + 244*m11 + 96*m1", 2880)?,
        ),
        // K_r^{(2,0)} = C(r+1,3)/5760 Σ (l+2)! f 𝓡_ρ with r = m_1(ρ) + 3, i.e.
        // f_20 = (m_1+4)(m_1+2) f / 34560.
        "f20" => {
            let f = theorem10_f();
            (2, 0, FitSide::R, f.times_m1_poly(&[rat(8), rat(6), rat(1)]).scale(&Rational::new(1.into(), 34560.into())))
        }
        _ => return None,
    })
}

/// The symmetric function of Theorem 10.
pub fn theorem10_f() -> MonomialExpansion {
    MonomialExpansion::parse(
        "3*m4 + 8*m31 + 10*m22 + 16*m211 + 24*m1111 + 20*m3 + 36*m21 + 48*m111 + 35*m2 + 40*m11 + 18*m1",
        1,
    )
    .expect("well-formed")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_values() {
        let nu = Partition::new(vec![2, 1]);
        // m_21(3, 2) = 9·2 + 4·3
        assert_eq!(monomial_value(&nu, &[3, 2]), rat(30));
        assert_eq!(monomial_value(&Partition::new(vec![1, 1]), &[2, 2, 2]), rat(12));
        assert_eq!(monomial_value(&Partition::empty(), &[5]), rat(1));
    }

    #[test]
    fn m1_product_matches_evaluation() {
        let f = theorem10_f();
        let g = f.times_m1();
        for x in [vec![3, 2], vec![4, 2, 2], vec![2, 2, 2, 2, 3]] {
            let m1: u32 = x.iter().sum();
            assert_eq!(g.eval(&x), f.eval(&x) * rat(m1 as i64));
        }
    }
}
