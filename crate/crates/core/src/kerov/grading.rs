//! Splitting a polynomial with `(α, β)`-coefficients into components
//! `X^{(i,j)}`, the coefficient of `α^{N−i} β^j`, each expected to be
//! homogeneous of weight `W − 2i + j`.
//!
//! For `K_r` one has `N = r`, `W = r + 1`; for `K̃_μ`, `N = |μ|−l(μ)+1` and
//! `W = |μ|−l(μ)+2`.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::exact::field::{pretty_poly, FieldElem};
use crate::exact::poly::MultiPoly;
use crate::exact::rational::rat;
use crate::exact::rational::Rational;
use crate::partitions::Partition;

use super::rpoly::RPoly;

#[derive(Clone, Debug, PartialEq)]
pub struct GradedComponent {
    pub i: u32,
    pub j: u32,
    pub poly: RPoly<Rational>,
}

impl GradedComponent {
    pub fn weight(&self, top_weight: u32) -> i64 {
        top_weight as i64 - 2 * self.i as i64 + self.j as i64
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GradingViolation {
    pub rho: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Grading {
    pub top_alpha: u32,
    pub top_weight: u32,
    pub components: BTreeMap<(u32, u32), RPoly<Rational>>,
    pub violations: Vec<GradingViolation>,
}

impl Grading {
    pub fn component(&self, i: u32, j: u32) -> RPoly<Rational> {
        self.components.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn components(&self) -> Vec<GradedComponent> {
        self.components.iter().map(|(&(i, j), p)| GradedComponent { i, j, poly: p.clone() }).collect()
    }

    /// `Σ α^{N−i} β^j X^{(i,j)}`.
    pub fn reassemble(&self) -> RPoly<FieldElem> {
        let mut out = RPoly::zero();
        for (&(i, j), p) in &self.components {
            let m = &FieldElem::alpha().pow((self.top_alpha - i) as i32) * &FieldElem::beta().pow(j as i32);
            for (rho, c) in p.terms() {
                out.add_term(rho.clone(), &m * &FieldElem::from_rational(c));
            }
        }
        out
    }

    /// Coefficients that are not nonnegative integers, as `(i, j, ρ, c)`.
    pub fn negative_or_fractional(&self) -> Vec<(u32, u32, Partition, Rational)> {
        let mut out = Vec::new();
        for (&(i, j), p) in &self.components {
            for (rho, c) in p.terms() {
                if !c.is_integer() || c.is_negative() {
                    out.push((i, j, rho.clone(), c.clone()));
                }
            }
        }
        out
    }
}

/// Grades `poly`; anything outside the expected shape is reported, not dropped.
pub fn grade(poly: &RPoly<FieldElem>, top_alpha: u32, top_weight: u32) -> Grading {
    let mut components: BTreeMap<(u32, u32), RPoly<Rational>> = BTreeMap::new();
    let mut violations = Vec::new();
    let max_i = top_alpha.saturating_sub(1);
    for (rho, c) in poly.terms() {
        let Some(p) = c.as_poly() else {
            violations.push(GradingViolation { rho: rho.to_string(), detail: format!("coefficient {c} is not a polynomial") });
            continue;
        };
        for (m, q) in p.terms() {
            let [a, b, z, e] = m.0;
            if z != 0 || e != 0 || a as u32 > top_alpha {
                violations.push(GradingViolation { rho: rho.to_string(), detail: format!("monomial {} outside α^a β^b, a ≤ {top_alpha}", pretty_poly(&MultiPoly::monomial(m.clone(), rat(1)))) });
                continue;
            }
            let (i, j) = (top_alpha - a as u32, b as u32);
            let w = top_weight as i64 - 2 * i as i64 + j as i64;
            if rho.weight() as i64 != w {
                violations.push(GradingViolation { rho: rho.to_string(), detail: format!("component ({i},{j}) expects weight {w}") });
            }
            if j > i || i > max_i || 2 * i as i64 - j as i64 > top_weight as i64 - 2 {
                violations.push(GradingViolation { rho: rho.to_string(), detail: format!("index ({i},{j}) outside the expected range") });
            }
            if !q.is_zero() {
                components.entry((i, j)).or_default().add_term(rho.clone(), q.clone());
            }
        }
    }
    Grading { top_alpha, top_weight, components, violations }
}

/// Grading of `K_r`.
pub fn grade_row(k: &RPoly<FieldElem>, r: u32) -> Grading {
    grade(k, r, r + 1)
}

/// Grading of `K̃_μ`.
pub fn grade_tilde(k: &RPoly<FieldElem>, mu: &Partition) -> Grading {
    let d = mu.weight() - mu.len() as u32;
    grade(k, d + 1, d + 2)
}
