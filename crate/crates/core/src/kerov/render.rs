//! Text, JSON and CSV forms of polynomials in the cumulant generators.
//!
//! The text form groups terms by their `α^a β^b` monomial, `a` descending and
//! then `b` descending; inside a group, generators are ordered by weight
//! descending and reverse-lexicographically within a weight:
//! `a^3*b*(6*R4 + R2^2)`.

use std::collections::BTreeMap;
use std::str::FromStr;

use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::exact::field::FieldElem;
use crate::exact::poly::{Monomial, Var};
use crate::exact::rational::Rational;
use crate::partitions::Partition;

use super::qc::Basis;
use super::rpoly::RPoly;
use super::KerovError;

/// `R3*R2^2`; empty for the unit monomial.
pub fn generator_text(rho: &Partition, basis: Basis) -> String {
    rho.multiplicities()
        .iter()
        .rev()
        .map(|(&k, &m)| if m == 1 { format!("{}{k}", basis.symbol()) } else { format!("{}{k}^{m}", basis.symbol()) })
        .collect::<Vec<_>>()
        .join("*")
}

fn monomial_text(m: &Monomial) -> String {
    Var::ALL
        .iter()
        .filter_map(|&v| match m.exp(v) {
            0 => None,
            1 => Some(v.symbol().to_string()),
            e => Some(format!("{}^{e}", v.symbol())),
        })
        .collect::<Vec<_>>()
        .join("*")
}

fn join_factors(parts: &[&str]) -> String {
    let kept: Vec<&str> = parts.iter().copied().filter(|s| !s.is_empty()).collect();
    if kept.is_empty() {
        "1".into()
    } else {
        kept.join("*")
    }
}

/// `|c|` times the factors, with a unit coefficient omitted.
fn scaled_text(abs: &Rational, factors: &[&str]) -> String {
    let body = join_factors(factors);
    match (abs.is_one(), body.as_str()) {
        (true, _) => body,
        (false, "1") => abs.to_string(),
        (false, _) => format!("{abs}*{body}"),
    }
}

fn order_key(rho: &Partition) -> (std::cmp::Reverse<u32>, std::cmp::Reverse<Partition>) {
    (std::cmp::Reverse(rho.weight()), std::cmp::Reverse(rho.clone()))
}

/// The grouped text form. Coefficients that are not polynomials print as a
/// parenthesized fraction after the polynomial groups.
pub fn render_text(poly: &RPoly<FieldElem>, basis: Basis) -> String {
    if poly.is_zero() {
        return "0".into();
    }
    let mut groups: BTreeMap<std::cmp::Reverse<[u16; 4]>, Vec<(Partition, Rational)>> = BTreeMap::new();
    let mut rest: Vec<(Partition, &FieldElem)> = Vec::new();
    for (rho, c) in poly.terms() {
        match c.as_poly() {
            Some(p) => {
                for (m, q) in p.terms() {
                    groups.entry(std::cmp::Reverse(m.0)).or_default().push((rho.clone(), q.clone()));
                }
            }
            None => rest.push((rho.clone(), c)),
        }
    }
    let mut pieces: Vec<(bool, String)> = Vec::new();
    for (std::cmp::Reverse(exps), mut terms) in groups {
        terms.sort_by_key(|(rho, _)| order_key(rho));
        let mono = monomial_text(&Monomial(exps));
        if terms.len() == 1 || mono.is_empty() {
            for (rho, q) in terms {
                let g = generator_text(&rho, basis);
                pieces.push((q.is_negative(), scaled_text(&q.abs(), &[&mono, &g])));
            }
            continue;
        }
        let negate = terms.iter().all(|(_, q)| q.is_negative());
        let mut inner = String::new();
        for (idx, (rho, q)) in terms.iter().enumerate() {
            let q = if negate { -q } else { q.clone() };
            let g = generator_text(rho, basis);
            let t = scaled_text(&q.abs(), &[&g]);
            match (idx, q.is_negative()) {
                (0, true) => inner.push_str(&format!("-{t}")),
                (0, false) => inner.push_str(&t),
                (_, true) => inner.push_str(&format!(" - {t}")),
                (_, false) => inner.push_str(&format!(" + {t}")),
            }
        }
        pieces.push((negate, format!("{mono}*({inner})")));
    }
    for (rho, c) in rest {
        let g = generator_text(&rho, basis);
        pieces.push((false, join_factors(&[&format!("({})", c.to_pretty_string()), &g])));
    }
    let mut out = String::new();
    for (idx, (neg, t)) in pieces.into_iter().enumerate() {
        match (idx, neg) {
            (0, true) => out.push_str(&format!("-{t}")),
            (0, false) => out.push_str(&t),
            (_, true) => out.push_str(&format!(" - {t}")),
            (_, false) => out.push_str(&format!(" + {t}")),
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermDoc {
    pub rho: Vec<u32>,
    pub coef: String,
}

/// Serialized polynomial: `{mu, mode, basis, terms: [{rho, coef}]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyDoc {
    pub mu: Vec<u32>,
    pub mode: String,
    pub basis: Basis,
    pub terms: Vec<TermDoc>,
}

impl PolyDoc {
    pub fn new(mu: &Partition, mode: &str, basis: Basis, poly: &RPoly<FieldElem>) -> Self {
        let terms = poly
            .terms()
            .rev()
            .map(|(rho, c)| TermDoc { rho: rho.parts().to_vec(), coef: c.to_canonical_string() })
            .collect();
        PolyDoc { mu: mu.parts().to_vec(), mode: mode.to_string(), basis, terms }
    }

    pub fn poly(&self) -> Result<RPoly<FieldElem>, KerovError> {
        let mut out = RPoly::zero();
        for t in &self.terms {
            out.add_term(Partition::from_sorted(t.rho.clone())?, FieldElem::from_str(&t.coef)?);
        }
        Ok(out)
    }
}

/// `rho,coef` rows with the parts of `ρ` separated by spaces.
pub fn render_csv(poly: &RPoly<FieldElem>) -> String {
    let mut out = String::from("rho,coef\n");
    for (rho, c) in poly.terms().rev() {
        let parts: Vec<String> = rho.parts().iter().map(u32::to_string).collect();
        out.push_str(&format!("{},\"{}\"\n", parts.join(" "), c.to_canonical_string()));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(e: i32) -> FieldElem {
        FieldElem::alpha().pow(e)
    }

    #[test]
    fn grouping() {
        let p = RPoly::from_terms([
            (Partition::new(vec![4]), &(&a(3) * &FieldElem::beta()) * &FieldElem::from_int(6)),
            (Partition::new(vec![2, 2]), &(&a(3) * &FieldElem::beta()) - &(&a(3) * &FieldElem::from_int(2))),
            (Partition::new(vec![3]), &a(3) * &FieldElem::from_int(-4)),
        ]);
        assert_eq!(render_text(&p, Basis::R), "a^3*b*(6*R4 + R2^2) - a^3*(2*R2^2 + 4*R3)");
        assert_eq!(render_text(&RPoly::constant(FieldElem::from_rational(&Rational::new(3.into(), 2.into()))), Basis::Q), "3/2");
    }
}
