//! Named theorem and conjecture checks over the computed `K_r` and `K̃_μ`.
//! Failures are data: each claim reports a witness instead of aborting.

use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::exact::field::FieldElem;
use crate::exact::rational::{binomial, factorial, rat, stirling1_unsigned, Rational};
use crate::partitions::{enumerate, enumerate_range, Partition};

use super::fit::theorem10_f;
use super::grading::{grade_row, grade_tilde, Grading};
use super::qc::{c_in_r, script_r, script_sum, to_basis, Basis};
use super::rpoly::RPoly;
use super::solver::Kerov;
use super::tilde::kerov_tilde;
use super::KerovError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ClaimStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimResult {
    pub claim_id: String,
    pub paper_anchor: String,
    pub status: ClaimStatus,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<String>,
}

/// Claim identifiers with their anchors.
pub const CLAIMS: &[(&str, &str)] = &[
    ("thm7", "Theorem 7"),
    ("thm8", "Theorem 8"),
    ("thm9", "Theorem 9"),
    ("thm10", "Theorem 10"),
    ("conj1", "Conjecture 1"),
    ("conj2", "Conjecture 2"),
    ("conj5", "Conjecture 5"),
    ("stirling", "Section 11, linear terms of K_r^(i,i)"),
    ("closed33", "Section 13, K_r^(3,3) in C"),
    ("closed22", "Section 13, K_r^(2,2) in R, C"),
    ("cneg22", "Section 13, K_5^(2,2) is not C-positive"),
    ("conj8", "Conjecture 8"),
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Rows `K_r` for `2 ≤ r ≤ r_max`.
    pub r_max: u32,
    /// `K_μ`, `K̃_μ` for `|μ| ≤ mu_max` (no part 1).
    pub mu_max: u32,
    /// Subset of [`CLAIMS`]; `None` runs all.
    pub claims: Option<Vec<String>>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { r_max: 9, mu_max: 7, claims: None }
    }
}

/// Result of one check: `Ok(())` or a witness.
type Check = Result<(), String>;

fn rat_poly(p: &RPoly<Rational>) -> RPoly<FieldElem> {
    p.map(FieldElem::from_rational)
}

fn frac(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

struct Ctx<'a> {
    k: &'a Kerov<FieldElem>,
    rows: Vec<(u32, RPoly<FieldElem>, Grading)>,
}

impl Ctx<'_> {
    fn each_row(&self, from: u32, f: impl Fn(u32, &RPoly<FieldElem>, &Grading) -> Check) -> Check {
        for (r, k, g) in &self.rows {
            if *r >= from {
                f(*r, k, g)?;
            }
        }
        Ok(())
    }
}

fn thm7(c: &Ctx) -> Check {
    c.each_row(2, |r, k, _| {
        let top = k.homogeneous(r + 1);
        let want = RPoly::monomial(Partition::row(r + 1), FieldElem::alpha().pow(r as i32));
        (top == want).then_some(()).ok_or_else(|| format!("K_{r}: weight {} part differs", r + 1))
    })
}

fn thm8(c: &Ctx) -> Check {
    c.each_row(2, |r, k, _| {
        let scale = &FieldElem::alpha().pow(r as i32 - 1) * &FieldElem::beta();
        let q = script_sum(r, |l| rat(r as i64) * Rational::from_integer(factorial(l as u64 - 1)) / rat(2));
        let want = rat_poly(&q).scale(&scale);
        (k.homogeneous(r) == want).then_some(()).ok_or_else(|| format!("K_{r}: weight {r} part differs"))
    })
}

fn thm9(c: &Ctx) -> Check {
    c.each_row(2, |r, _, g| {
        let lead = Rational::from_integer(binomial(r as u64 + 1, 3)) / rat(4);
        let want = script_sum(r - 1, |l| &lead * Rational::from_integer(factorial(l as u64)));
        (g.component(1, 0) == want).then_some(()).ok_or_else(|| format!("K_{r}^(1,0) differs"))
    })
}

fn thm10(c: &Ctx) -> Check {
    let f = theorem10_f();
    c.each_row(2, |r, _, g| {
        let lead = Rational::from_integer(binomial(r as u64 + 1, 3)) / rat(5760);
        let mut want = RPoly::zero();
        if r >= 3 {
            for rho in enumerate(r - 3, 2).into_iter().filter(|p| !p.is_empty()) {
                let c = &lead * Rational::from_integer(factorial(rho.len() as u64 + 2)) * f.eval(rho.parts());
                want = want.plus(&script_r(&rho).scale(&c));
            }
        }
        (g.component(2, 0) == want).then_some(()).ok_or_else(|| format!("K_{r}^(2,0) differs"))
    })
}

fn integral_poly(c: &FieldElem) -> bool {
    c.as_poly().is_some_and(|p| p.terms().all(|(_, q)| q.is_integer()))
}

fn conj1(c: &Ctx, mu_max: u32) -> Result<Check, KerovError> {
    for (r, k, _) in &c.rows {
        if let Some((rho, v)) = k.terms().find(|(_, v)| !integral_poly(v)) {
            return Ok(Err(format!("K_{r}: coefficient {v} of R_{rho}")));
        }
    }
    for mu in enumerate_range(2, mu_max, 2) {
        let k = c.k.kerov_k(&mu)?;
        let bad = k.terms().find(|(_, v)| !integral_poly(v)).map(|(rho, v)| format!("K_{mu}: coefficient {v} of R_{rho}"));
        if let Some(w) = bad {
            return Ok(Err(w));
        }
    }
    Ok(Ok(()))
}

fn structure(g: &Grading, name: &str) -> Check {
    if let Some(v) = g.violations.first() {
        return Err(format!("{name}: {} at R_{}", v.detail, v.rho));
    }
    if let Some((i, j, rho, q)) = g.negative_or_fractional().into_iter().next() {
        return Err(format!("{name}^({i},{j}): coefficient {q} of R_{rho}"));
    }
    Ok(())
}

fn conj2(c: &Ctx) -> Check {
    c.each_row(2, |r, _, g| structure(g, &format!("K_{r}")))
}

fn conj5(c: &Ctx) -> Check {
    c.each_row(2, |r, _, g| {
        for comp in g.components() {
            if (comp.i, comp.j) == (0, 0) {
                continue;
            }
            let q = to_basis(&comp.poly, Basis::Q);
            let bad = q.terms().find(|(_, v)| v.is_negative()).map(|(rho, v)| format!("coefficient {v} of Q_{rho}"));
            if let Some(w) = bad {
                return Err(format!("K_{r}^({},{}): {w}", comp.i, comp.j));
            }
        }
        Ok(())
    })
}

fn stirling(c: &Ctx) -> Check {
    c.each_row(2, |r, _, g| {
        for i in 0..=3.min(r - 1) {
            let want = Rational::from_integer(stirling1_unsigned(r as u64, (r - i) as u64));
            let comp = g.component(i, i);
            let linear: Vec<_> = comp.terms().filter(|(rho, _)| rho.len() == 1).collect();
            let got = comp.coeff(&Partition::row(r - i + 1));
            if linear.len() > 1 || got != want {
                return Err(format!("K_{r}^({i},{i}): linear coefficient {got}, expected {want}"));
            }
        }
        Ok(())
    })
}

/// `C_0 = 1`, `C_1 = 0`, `C_n` in the `R_k`.
fn c_table(n: u32) -> Vec<RPoly<Rational>> {
    let mut c = c_in_r::<Rational>(n);
    c[0] = RPoly::one();
    c
}

/// `(r/48) Σ_{i+j=r−2} i(i+1)²(i+2) C_i C_j`.
pub fn closed_form_33(r: u32) -> RPoly<Rational> {
    let c = c_table(r);
    let mut acc = RPoly::zero();
    for i in 0..=r - 2 {
        let j = r - 2 - i;
        let w = (i * (i + 1) * (i + 1) * (i + 2)) as i64;
        acc = acc.plus(&c[i as usize].times(&c[j as usize]).scale(&rat(w)));
    }
    acc.scale(&frac(r as i64, 48))
}

/// `(r/24)(2r(r−1) C_{r−1} + Σ_{i+j+k=r−1} i²(i−1) R_i C_j C_k)`.
pub fn closed_form_22(r: u32) -> RPoly<Rational> {
    let c = c_table(r);
    let mut acc = c[r as usize - 1].scale(&rat(2 * r as i64 * (r as i64 - 1)));
    for i in 2..=r - 1 {
        for j in 0..=r - 1 - i {
            let k = r - 1 - i - j;
            let w = (i * i * (i - 1)) as i64;
            let t = RPoly::var(i).times(&c[j as usize]).times(&c[k as usize]).scale(&rat(w));
            acc = acc.plus(&t);
        }
    }
    acc.scale(&frac(r as i64, 24))
}

fn closed33(c: &Ctx) -> Check {
    c.each_row(5, |r, _, g| {
        (g.component(3, 3) == closed_form_33(r)).then_some(()).ok_or_else(|| format!("K_{r}^(3,3) differs"))
    })
}

fn closed22(c: &Ctx) -> Check {
    c.each_row(5, |r, _, g| {
        (g.component(2, 2) == closed_form_22(r)).then_some(()).ok_or_else(|| format!("K_{r}^(2,2) differs"))
    })
}

fn cneg22(k: &Kerov<FieldElem>) -> Result<Check, KerovError> {
    let g = grade_row(&*k.kerov_k(&Partition::row(5))?, 5);
    let cpoly = to_basis(&g.component(2, 2), Basis::C);
    Ok(if cpoly.terms().any(|(_, v)| v.is_negative()) {
        Ok(())
    } else {
        Err(format!("K_5^(2,2) in C has no negative coefficient: {:?}", cpoly.terms().collect::<Vec<_>>()))
    })
}

fn conj8(k: &Kerov<FieldElem>, mu_max: u32) -> Result<Check, KerovError> {
    for mu in enumerate_range(2, mu_max, 2) {
        let t = kerov_tilde(k, &mu)?;
        let top = mu.weight() - mu.len() as u32 + 2;
        if t.max_weight() != Some(top) {
            return Ok(Err(format!("K̃_{mu}: highest weight {:?}, expected {top}", t.max_weight())));
        }
        if let Err(w) = structure(&grade_tilde(&t, &mu), &format!("K̃_{mu}")) {
            return Ok(Err(w));
        }
    }
    Ok(Ok(()))
}

/// Runs the requested claims.
pub fn verify(k: &Kerov<FieldElem>, cfg: &VerifyConfig) -> Result<Vec<ClaimResult>, KerovError> {
    let wanted: Vec<&str> = match &cfg.claims {
        Some(v) => {
            for id in v {
                if !CLAIMS.iter().any(|(c, _)| c == id) {
                    return Err(KerovError::UnknownClaim(id.clone()));
                }
            }
            v.iter().map(String::as_str).collect()
        }
        None => CLAIMS.iter().map(|(c, _)| *c).collect(),
    };
    let mut rows = Vec::new();
    for r in 2..=cfg.r_max {
        let kr = (*k.kerov_k(&Partition::row(r))?).clone();
        let g = grade_row(&kr, r);
        rows.push((r, kr, g));
    }
    let ctx = Ctx { k, rows };
    let mut out = Vec::new();
    for (id, anchor) in CLAIMS {
        if !wanted.contains(id) {
            continue;
        }
        let check = match *id {
            "thm7" => thm7(&ctx),
            "thm8" => thm8(&ctx),
            "thm9" => thm9(&ctx),
            "thm10" => thm10(&ctx),
            "conj1" => conj1(&ctx, cfg.mu_max)?,
            "conj2" => conj2(&ctx),
            "conj5" => conj5(&ctx),
            "stirling" => stirling(&ctx),
            "closed33" if cfg.r_max >= 5 => closed33(&ctx),
            "closed22" if cfg.r_max >= 5 => closed22(&ctx),
            "cneg22" => cneg22(k)?,
            "conj8" => conj8(k, cfg.mu_max)?,
            _ => {
                out.push(ClaimResult {
                    claim_id: id.to_string(),
                    paper_anchor: anchor.to_string(),
                    status: ClaimStatus::Skipped,
                    witness: Some("r_max below 5".into()),
                });
                continue;
            }
        };
        out.push(ClaimResult {
            claim_id: id.to_string(),
            paper_anchor: anchor.to_string(),
            status: if check.is_ok() { ClaimStatus::Pass } else { ClaimStatus::Fail },
            witness: check.err(),
        });
    }
    Ok(out)
}

/// Whether all results passed or were skipped.
pub fn all_passed(results: &[ClaimResult]) -> bool {
    results.iter().all(|r| r.status != ClaimStatus::Fail)
}
