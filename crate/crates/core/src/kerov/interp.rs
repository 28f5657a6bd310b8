//! An independent route to `K_μ`: fit `ϑ^λ_μ = Σ a_ρ R_ρ(λ)` over a pool of
//! diagrams at numeric parameter values, then interpolate the coefficients.
//!
//! Nothing here touches the node tables or the Pieri system of the solver;
//! the data are the Jack tables and the free cumulants of each diagram.

use crate::cumulants::free_cumulants;
use crate::exact::field::FieldElem;
use crate::exact::linsolve::linsolve_rational_multi;
use crate::exact::poly::{Monomial, MultiPoly, Var};
use crate::exact::rational::{rat, Rational};
use crate::exact::ExactError;
use crate::jack::{Mode, ThetaTower};
use crate::partitions::{enumerate_range, Partition};

use super::rpoly::RPoly;
use super::solver::Support;
use super::KerovError;

/// Candidate monomials: the solver's support plus the constant.
pub fn candidates(mu: &Partition) -> Vec<Partition> {
    let mut v = vec![Partition::empty()];
    v.extend(Support::of(mu).monomials());
    v
}

/// Every `λ` with `|μ| ≤ |λ| ≤ n`.
pub fn pool(mu: &Partition, n: u32) -> Vec<Partition> {
    enumerate_range(mu.weight(), n.max(mu.weight()), 1)
}

/// A pool that gives full column rank at a generic point: the smallest `n`
/// that works at `α = 2`.
pub fn default_pool(mu: &Partition) -> Result<Vec<Partition>, KerovError> {
    let cands = candidates(mu).len();
    let mut n = mu.weight();
    loop {
        let p = pool(mu, n);
        if p.len() >= cands && fit_at_point(mu, &Mode::Alpha(rat(2)), &p).is_ok() {
            return Ok(p);
        }
        n += 1;
        if n > mu.weight() + 16 {
            return Err(KerovError::RankDeficient(format!("no pool up to weight {n} determines K_{mu}")));
        }
    }
}

/// The coefficients `a_ρ` at one numeric parameter point.
pub fn fit_at_point(mu: &Partition, mode: &Mode<Rational>, pool: &[Partition]) -> Result<RPoly<Rational>, KerovError> {
    let cands = candidates(mu);
    let max_part = Support::of(mu).max_part as usize;
    let mut tower = ThetaTower::new(mode.clone());
    let mut rows = Vec::with_capacity(pool.len());
    let mut rhs = Vec::with_capacity(pool.len());
    for lambda in pool {
        let r = free_cumulants(lambda, max_part, mode)?;
        rows.push(cands.iter().map(|rho| r.product(rho)).collect::<Vec<_>>());
        rhs.push(vec![tower.vartheta(lambda, mu)?]);
    }
    let sol = linsolve_rational_multi(&rows, &rhs).map_err(|e| match e {
        ExactError::Underdetermined { free_column } => KerovError::RankDeficient(format!(
            "pool of {} diagrams leaves R_{} free for K_{mu}; use a larger pool",
            pool.len(),
            cands[free_column]
        )),
        ExactError::Inconsistent { row } => KerovError::Inconsistent {
            mu: mu.clone(),
            detail: format!("no polynomial in the candidate monomials fits ϑ at λ = {}", pool[row]),
        },
        e => KerovError::Exact(e),
    })?;
    Ok(RPoly::from_terms(cands.into_iter().zip(sol.values().iter().cloned())))
}

/// Degree bound in `(α, β)` for the coefficients of `K_μ`, from the support:
/// `2a + j = |ρ| + |μ| − l(μ) ≤ 2|μ|`.
fn degree_bound(mu: &Partition) -> u32 {
    2 * mu.weight()
}

/// Newton interpolation through `(x_k, y_k)`.
fn interpolate(xs: &[Rational], ys: &[Rational]) -> Vec<Rational> {
    let n = xs.len();
    let mut dd = ys.to_vec();
    for k in 1..n {
        for i in (k..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - k]);
        }
    }
    // expand Σ dd_k Π_{i<k} (x − x_i)
    let mut coeffs = vec![Rational::from_integer(0.into()); n];
    for k in (0..n).rev() {
        // coeffs ← coeffs·(x − x_k) + dd_k
        let mut next = vec![Rational::from_integer(0.into()); n];
        for (d, c) in coeffs.iter().enumerate() {
            if d + 1 < n {
                next[d + 1] += c;
            }
            next[d] -= c * &xs[k];
        }
        next[0] += &dd[k];
        coeffs = next;
    }
    coeffs
}

fn eval_univariate(c: &[Rational], x: &Rational) -> Rational {
    c.iter().rev().fold(Rational::from_integer(0.into()), |acc, a| acc * x + a)
}

/// Positive rationals `p/q` in order of increasing `p + q`.
pub fn alpha_points(count: usize) -> Vec<Rational> {
    let mut out = Vec::with_capacity(count);
    let mut s = 2i64;
    while out.len() < count {
        for p in 1..s {
            let q = s - p;
            if num_integer::gcd(p, q) == 1 && out.len() < count {
                out.push(Rational::new(p.into(), q.into()));
            }
        }
        s += 1;
    }
    out
}

/// `α`-mode oracle: points from [`alpha_points`] with `β = 1 − α`; the result is a
/// polynomial in `α` alone, to be compared with `K_μ` at `β = 1 − α`. One
/// point beyond the degree bound checks the interpolant.
pub fn interpolation_oracle_k(mu: &Partition, pool: &[Partition]) -> Result<RPoly<FieldElem>, KerovError> {
    let d = degree_bound(mu) as usize;
    let xs = alpha_points(d + 2);
    let fits = xs.iter().map(|a| fit_at_point(mu, &Mode::Alpha(a.clone()), pool)).collect::<Result<Vec<_>, _>>()?;
    let mut out = RPoly::zero();
    for rho in candidates(mu) {
        let ys: Vec<Rational> = fits.iter().map(|f| f.coeff(&rho)).collect();
        let c = interpolate(&xs[..=d], &ys[..=d]);
        if eval_univariate(&c, &xs[d + 1]) != ys[d + 1] {
            return Err(KerovError::Inconsistent {
                mu: mu.clone(),
                detail: format!("coefficient of R_{rho} is not a polynomial of degree ≤ {d} in α"),
            });
        }
        let p = MultiPoly::from_terms(c.into_iter().enumerate().map(|(e, q)| (Monomial::var(Var::Alpha, e as u16), q)));
        out.add_term(rho, FieldElem::from_poly(p));
    }
    Ok(out)
}

/// Sample points `ζ < 0 < η`, away from any special ratio.
pub fn zeta_eta_points(count: usize) -> Vec<(Rational, Rational)> {
    (0..count as i64)
        .map(|k| {
            let z = Rational::new((-(2 * k + 3)).into(), (k % 4 + 1).into());
            let e = Rational::new((3 * k + 1).into(), (k % 3 + 2).into());
            (z, e)
        })
        .collect()
}

/// Two-parameter oracle: each coefficient is reconstructed as a polynomial in
/// `(α, β)` of total degree at most `2|μ|` from fits at `(ζ, η)` points, with
/// three further points left over as a check.
pub fn interpolation_oracle_k_zeta_eta(mu: &Partition, pool: &[Partition]) -> Result<RPoly<FieldElem>, KerovError> {
    let d = degree_bound(mu);
    let monos: Vec<(u16, u16)> = (0..=d as u16).flat_map(|t| (0..=t).map(move |b| (t - b, b))).collect();
    let mut extra = 0;
    loop {
        let pts = zeta_eta_points(monos.len() + 3 + extra);
        let ab: Vec<(Rational, Rational)> = pts
            .iter()
            .map(|(z, e)| (-(z * e).recip(), z.recip() + e.recip()))
            .collect();
        let fits = pts
            .iter()
            .map(|(z, e)| fit_at_point(mu, &Mode::ZetaEta(z.clone(), e.clone()), pool))
            .collect::<Result<Vec<_>, _>>()?;
        let matrix: Vec<Vec<Rational>> = ab
            .iter()
            .map(|(a, b)| monos.iter().map(|&(i, j)| a.pow(i as i32) * b.pow(j as i32)).collect())
            .collect();
        let cands = candidates(mu);
        let rhs: Vec<Vec<Rational>> = fits.iter().map(|f| cands.iter().map(|rho| f.coeff(rho)).collect()).collect();
        match linsolve_rational_multi(&matrix, &rhs) {
            Ok(sol) => {
                let mut out = RPoly::zero();
                for (k, rho) in cands.into_iter().enumerate() {
                    let p = MultiPoly::from_terms(monos.iter().zip(&sol.solutions[k]).map(|(&(i, j), q)| {
                        let mut m = Monomial::one();
                        m.0[Var::Alpha.index()] = i;
                        m.0[Var::Beta.index()] = j;
                        (m, q.clone())
                    }));
                    out.add_term(rho, FieldElem::from_poly(p));
                }
                return Ok(out);
            }
            Err(ExactError::Underdetermined { .. }) if extra < 8 => extra += 4,
            Err(ExactError::Inconsistent { .. }) => {
                return Err(KerovError::Inconsistent {
                    mu: mu.clone(),
                    detail: format!("coefficients are not polynomials of degree ≤ {d} in (α, β)"),
                })
            }
            Err(e) => return Err(KerovError::Exact(e)),
        }
    }
}
