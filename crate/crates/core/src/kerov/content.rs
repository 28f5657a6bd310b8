//! `ϑ^λ_μ` as a polynomial in the power sums `p_k(C_λ)` of the contents and
//! the binomials `C(|λ|, b)`.
//!
//! The basis is `C(|λ|, b) p_ν(C_λ)` with `|ν| + l(ν) + b ≤ |μ|`. Each
//! coefficient is found numerically at several `(ζ, η)` and reconstructed as
//! a polynomial in `(α, β)` of total degree at most `|μ| + |μ| − l(μ)`.

use std::collections::BTreeMap;

use crate::exact::field::FieldElem;
use crate::exact::linsolve::linsolve_rational_multi;
use crate::exact::poly::{Monomial, MultiPoly, Var};
use crate::exact::rational::{binomial, Rational};
use crate::exact::ExactError;
use crate::jack::{Mode, ThetaTower};
use crate::partitions::{enumerate_range, Partition};

use super::interp::{pool, zeta_eta_points};
use super::KerovError;

/// A basis element `C(|λ|, b) p_ν(C_λ)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ContentMonomial {
    pub nu: Partition,
    pub b: u32,
}

impl ContentMonomial {
    pub fn degree(&self) -> u32 {
        self.nu.weight() + self.nu.len() as u32 + self.b
    }

    pub fn value(&self, lambda: &Partition, mode: &Mode<Rational>) -> Result<Rational, KerovError> {
        let mut v = Rational::from_integer(binomial(lambda.weight() as u64, self.b as u64));
        for &k in self.nu.parts() {
            v *= mode.content_power_sum(lambda, k)?;
        }
        Ok(v)
    }

    pub fn text(&self) -> String {
        let mut f = Vec::new();
        if !self.nu.is_empty() {
            f.push(format!("p{}", self.nu.parts().iter().map(u32::to_string).collect::<String>()));
        }
        if self.b > 0 {
            f.push(format!("C(n,{})", self.b));
        }
        if f.is_empty() {
            "1".into()
        } else {
            f.join("*")
        }
    }
}

/// All basis elements for `μ`.
pub fn content_basis(mu: &Partition) -> Vec<ContentMonomial> {
    let n = mu.weight();
    let mut out = Vec::new();
    for nu in enumerate_range(0, n, 1) {
        let d = nu.weight() + nu.len() as u32;
        if d > n {
            continue;
        }
        for b in 0..=n - d {
            out.push(ContentMonomial { nu: nu.clone(), b });
        }
    }
    out
}

/// The fitted expansion; coefficients are polynomials in `α`, `β`.
#[derive(Clone, Debug, PartialEq)]
pub struct ContentPoly {
    pub mu: Partition,
    pub terms: BTreeMap<ContentMonomial, FieldElem>,
}

impl ContentPoly {
    /// Conjecture 9: every coefficient has integer coefficients in `(α, β)`.
    pub fn is_integral(&self) -> bool {
        self.terms
            .values()
            .all(|c| c.as_poly().is_some_and(|p| p.terms().all(|(_, q)| q.is_integer())))
    }

    pub fn coeff(&self, m: &ContentMonomial) -> FieldElem {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// `p3`-style names with parenthesized polynomial coefficients, highest degree first.
    pub fn render(&self) -> String {
        let mut keys: Vec<&ContentMonomial> = self.terms.keys().collect();
        keys.sort_by_key(|m| (std::cmp::Reverse(m.degree()), std::cmp::Reverse((*m).clone())));
        let mut out = String::new();
        for (idx, m) in keys.into_iter().enumerate() {
            let c = self.terms[m].to_pretty_string();
            let single = self.terms[m].as_poly().is_some_and(|p| p.num_terms() == 1);
            let (neg, c) = match c.strip_prefix('-') {
                Some(rest) if single => (true, rest.to_string()),
                _ if single => (false, c),
                _ => (false, format!("({c})")),
            };
            out.push_str(match (idx, neg) {
                (0, false) => "",
                (0, true) => "-",
                (_, false) => " + ",
                (_, true) => " - ",
            });
            out.push_str(&format!("{c}*{}", m.text()));
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

/// The coefficients at one `(ζ, η)` from the pool `|μ| ≤ |λ| ≤ n`.
pub fn content_fit_at_point(
    mu: &Partition,
    zeta: &Rational,
    eta: &Rational,
    pool: &[Partition],
) -> Result<Vec<Rational>, KerovError> {
    let basis = content_basis(mu);
    let mode = Mode::ZetaEta(zeta.clone(), eta.clone());
    let mut tower = ThetaTower::new(mode.clone());
    let mut rows = Vec::with_capacity(pool.len());
    let mut rhs = Vec::with_capacity(pool.len());
    for lambda in pool {
        rows.push(basis.iter().map(|m| m.value(lambda, &mode)).collect::<Result<Vec<_>, _>>()?);
        rhs.push(vec![tower.vartheta(lambda, mu)?]);
    }
    let sol = linsolve_rational_multi(&rows, &rhs).map_err(|e| match e {
        ExactError::Underdetermined { free_column } => KerovError::RankDeficient(format!(
            "pool of {} diagrams leaves {} free in the content expansion of ϑ_{mu}",
            pool.len(),
            basis[free_column].text()
        )),
        ExactError::Inconsistent { row } => KerovError::Inconsistent {
            mu: mu.clone(),
            detail: format!("ϑ_{mu} is not in the span of the content basis (λ = {})", pool[row]),
        },
        e => KerovError::Exact(e),
    })?;
    Ok(sol.solutions.into_iter().next().unwrap_or_default())
}

/// Smallest pool giving full rank at the first sample point.
pub fn content_pool(mu: &Partition) -> Result<Vec<Partition>, KerovError> {
    let (z, e) = zeta_eta_points(1).remove(0);
    let need = content_basis(mu).len();
    for n in mu.weight()..=mu.weight() + 12 {
        let p = pool(mu, n);
        if p.len() >= need && content_fit_at_point(mu, &z, &e, &p).is_ok() {
            return Ok(p);
        }
    }
    Err(KerovError::RankDeficient(format!("no pool determines the content expansion of ϑ_{mu}")))
}

/// Fits the content expansion of `ϑ_μ`.
pub fn content_fit(mu: &Partition, pool: &[Partition]) -> Result<ContentPoly, KerovError> {
    let deg = (2 * mu.weight()).saturating_sub(mu.len() as u32) as u16;
    let monos: Vec<(u16, u16)> = (0..=deg).flat_map(|t| (0..=t).map(move |b| (t - b, b))).collect();
    let pts = zeta_eta_points(monos.len() + 3);
    let basis = content_basis(mu);
    let mut matrix = Vec::with_capacity(pts.len());
    let mut rhs = Vec::with_capacity(pts.len());
    for (z, e) in &pts {
        let a = -(z * e).recip();
        let b = z.recip() + e.recip();
        matrix.push(monos.iter().map(|&(i, j)| a.pow(i as i32) * b.pow(j as i32)).collect::<Vec<_>>());
        rhs.push(content_fit_at_point(mu, z, e, pool)?);
    }
    let sol = linsolve_rational_multi(&matrix, &rhs).map_err(|e| match e {
        ExactError::Inconsistent { .. } => KerovError::Inconsistent {
            mu: mu.clone(),
            detail: format!("content coefficients are not polynomials of degree ≤ {deg} in (α, β)"),
        },
        e => KerovError::Exact(e),
    })?;
    let mut terms = BTreeMap::new();
    for (k, m) in basis.into_iter().enumerate() {
        let p = MultiPoly::from_terms(monos.iter().zip(&sol.solutions[k]).map(|(&(i, j), q)| {
            let mut mono = Monomial::one();
            mono.0[Var::Alpha.index()] = i;
            mono.0[Var::Beta.index()] = j;
            (mono, q.clone())
        }));
        if !p.is_zero() {
            terms.insert(m, FieldElem::from_poly(p));
        }
    }
    Ok(ContentPoly { mu: mu.clone(), terms })
}
