//! One function per verb. Each returns the rendered output and whether every
//! check it ran came out true.

use std::fmt::Display;
use std::sync::Arc;

use kerov_core::cumulants::{cumulants_from_moments, moment_series, CumulantVector};
use kerov_core::exact::field::FieldElem;
use kerov_core::exact::rational::Rational;
use kerov_core::jack::theta_all;
use kerov_core::kerov::content::content_pool;
use kerov_core::kerov::fit::{published, row_components};
use kerov_core::kerov::verify::all_passed;
use kerov_core::kerov::{
    content_fit as fit_content, fit_structure_function, grade_row, grade_tilde, kerov_tilde, render_csv, render_text, to_basis,
    verify as run_verify, Basis, ClaimStatus, Grading, Kerov, KerovError, PolyDoc, RPoly, VerifyConfig,
};
use kerov_core::partitions::{enumerate_range, Partition};
use kerov_core::ENGINE_VERSION;
use serde::Serialize;
use serde_json::json;

use crate::cache::{Cache, CacheKey};
use crate::params::{jack_mode, specialization};
use crate::{Format, Opts};

pub struct Outcome {
    pub text: String,
    pub verified: bool,
}

#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Domain(String),
}

impl Failure {
    pub fn domain(e: impl Display) -> Self {
        Failure::Domain(e.to_string())
    }
}

impl From<KerovError> for Failure {
    fn from(e: KerovError) -> Self {
        match e {
            KerovError::UnknownClaim(_) => Failure::Usage(e.to_string()),
            e => Failure::domain(e),
        }
    }
}

type Res = Result<Outcome, Failure>;

fn done(text: String) -> Res {
    Ok(Outcome { text, verified: true })
}

fn pretty(v: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("output serializes");
    s.push('\n');
    s
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', ' ', '/', '*']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn parts_text(p: &Partition) -> String {
    p.parts().iter().map(u32::to_string).collect::<Vec<_>>().join(" ")
}

fn need_mu(o: &Opts) -> Result<&Partition, Failure> {
    o.mu.as_ref().ok_or_else(|| Failure::Usage("--mu is required".into()))
}

fn no_part_one(mu: &Partition) -> Result<(), Failure> {
    if mu.is_empty() {
        return Err(Failure::Domain("μ must be nonempty".into()));
    }
    if mu.contains_part(1) {
        return Err(KerovError::PartOne(mu.clone()).into());
    }
    Ok(())
}

/// Symbolic `K_μ` with an optional on-disk cache in front of the solver.
struct Engine {
    k: Kerov<FieldElem>,
    cache: Option<Cache>,
}

impl Engine {
    fn new(o: &Opts) -> Self {
        Engine { k: Kerov::symbolic(), cache: o.cache() }
    }

    fn key(mu: &Partition) -> CacheKey {
        CacheKey::new("kerov", mu, "symbolic", ENGINE_VERSION)
    }

    /// Seeds the solver with a cached `K_μ`, if there is one.
    fn load(&self, mu: &Partition) -> bool {
        if self.k.known(mu).is_some() {
            return true;
        }
        let Some(cache) = &self.cache else { return false };
        let Some(payload) = cache.get(&Self::key(mu)) else { return false };
        match serde_json::from_str::<PolyDoc>(&payload).map_err(|e| e.to_string()).and_then(|d| d.poly().map_err(|e| e.to_string())) {
            Ok(p) => {
                self.k.seed(mu, p);
                true
            }
            Err(e) => {
                eprintln!("warning: ignoring cached K_{mu}: {e}");
                false
            }
        }
    }

    fn store(&self, mu: &Partition) {
        let (Some(cache), Some(p)) = (&self.cache, self.k.known(mu)) else { return };
        let payload = serde_json::to_string(&PolyDoc::new(mu, "symbolic", Basis::R, &p)).expect("documents serialize");
        if let Err(e) = cache.put(&Self::key(mu), &payload) {
            eprintln!("warning: cannot write cache entry for K_{mu}: {e}");
        }
    }

    fn kerov(&self, mu: &Partition) -> Result<Arc<RPoly<FieldElem>>, Failure> {
        let hit = self.load(mu);
        let k = self.k.kerov_k(mu)?;
        if !hit {
            self.store(mu);
        }
        Ok(k)
    }

    fn tilde(&self, mu: &Partition) -> Result<RPoly<FieldElem>, Failure> {
        for p in enumerate_range(2, mu.weight(), 2) {
            self.load(&p);
        }
        let t = kerov_tilde(&self.k, mu)?;
        for p in enumerate_range(2, mu.weight(), 2) {
            self.store(&p);
        }
        Ok(t)
    }
}

pub fn theta(o: &Opts) -> Res {
    let n = o.n.ok_or_else(|| Failure::Usage("--n is required".into()))?;
    let (mode, label) = jack_mode(o)?;
    let table = theta_all(n, &mode).map_err(Failure::domain)?;
    let rows = table.serialize_rows(FieldElem::to_canonical_string);
    done(match o.format {
        Format::Json => pretty(&json!({ "n": n, "mode": label, "entries": rows })),
        Format::Csv => {
            let mut s = String::from("lambda,rho,value\n");
            for r in &rows {
                s.push_str(&format!("{},{},{}\n", parts_text(&r.lambda), parts_text(&r.rho), csv_field(&r.value)));
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for lambda in table.partitions() {
                for rho in table.partitions() {
                    let v = table.get(lambda, rho).expect("square table");
                    s.push_str(&format!("theta^{lambda}_{rho} = {}\n", v.to_pretty_string()));
                }
            }
            s
        }
    })
}

pub fn cumulants(o: &Opts) -> Res {
    let lambda = o.lambda.as_ref().ok_or_else(|| Failure::Usage("--lambda is required".into()))?;
    let n = o.n.unwrap_or(lambda.weight() + 1) as usize;
    let (mode, label) = jack_mode(o)?;
    let m = moment_series(lambda, n, &mode).map_err(Failure::domain)?;
    let (b, r) = cumulants_from_moments(&m).map_err(Failure::domain)?;
    let named = [("M", &m), ("B", &b), ("R", &r)];
    let canon = |v: &CumulantVector<FieldElem>| v.values.iter().map(FieldElem::to_canonical_string).collect::<Vec<_>>();
    done(match o.format {
        Format::Json => pretty(&json!({
            "lambda": lambda, "n": n, "mode": label,
            "M": canon(&m), "B": canon(&b), "R": canon(&r),
        })),
        Format::Csv => {
            let mut s = String::from("kind,k,value\n");
            for (name, v) in named {
                for (i, c) in canon(v).iter().enumerate() {
                    s.push_str(&format!("{name},{},{}\n", i + 1, csv_field(c)));
                }
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for (name, v) in named {
                for (i, c) in v.values.iter().enumerate() {
                    s.push_str(&format!("{name}_{} = {}\n", i + 1, c.to_pretty_string()));
                }
            }
            s
        }
    })
}

fn poly_output(o: &Opts, mu: &Partition, label: &str, p: &RPoly<FieldElem>) -> String {
    match o.format {
        Format::Json => pretty(&PolyDoc::new(mu, label, Basis::R, p)),
        Format::Csv => render_csv(p),
        Format::Text => format!("{}\n", render_text(p, Basis::R)),
    }
}

pub fn kerov(o: &Opts, tilde: bool) -> Res {
    let mu = need_mu(o)?;
    no_part_one(mu)?;
    let sp = specialization(o)?;
    let e = Engine::new(o);
    let k = if tilde { e.tilde(mu)? } else { (*e.kerov(mu)?).clone() };
    done(poly_output(o, mu, &sp.label, &sp.apply(&k)?))
}

/// `grade_row` for a single row, `grade_tilde` otherwise.
fn grading(o: &Opts) -> Result<(Partition, Grading), Failure> {
    let mu = need_mu(o)?;
    no_part_one(mu)?;
    if !specialization(o)?.is_free() {
        return Err(Failure::Usage("grading needs α and β free".into()));
    }
    let e = Engine::new(o);
    let g = if mu.len() == 1 {
        grade_row(&*e.kerov(mu)?, mu.weight())
    } else {
        grade_tilde(&e.tilde(mu)?, mu)
    };
    Ok((mu.clone(), g))
}

fn as_field(p: &RPoly<Rational>) -> RPoly<FieldElem> {
    p.map(FieldElem::from_rational)
}

fn terms_json(p: &RPoly<Rational>) -> Vec<serde_json::Value> {
    p.terms().rev().map(|(rho, c)| json!({ "rho": rho.parts(), "coef": c.to_string() })).collect()
}

fn violations_ok(g: &Grading) -> bool {
    g.violations.is_empty()
}

pub fn grade(o: &Opts) -> Res {
    let (mu, g) = grading(o)?;
    let text = match o.format {
        Format::Json => {
            let comps: Vec<_> = g
                .components()
                .iter()
                .map(|c| json!({ "i": c.i, "j": c.j, "weight": c.weight(g.top_weight), "terms": terms_json(&c.poly) }))
                .collect();
            let viol: Vec<_> = g.violations.iter().map(|v| json!({ "rho": v.rho, "detail": v.detail })).collect();
            pretty(&json!({
                "mu": mu, "top_alpha": g.top_alpha, "top_weight": g.top_weight,
                "components": comps, "violations": viol,
            }))
        }
        Format::Csv => {
            let mut s = String::from("i,j,rho,coef\n");
            for c in g.components() {
                for (rho, v) in c.poly.terms().rev() {
                    s.push_str(&format!("{},{},{},{}\n", c.i, c.j, parts_text(rho), csv_field(&v.to_string())));
                }
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for c in g.components() {
                s.push_str(&format!(
                    "({},{}) weight {}: {}\n",
                    c.i,
                    c.j,
                    c.weight(g.top_weight),
                    render_text(&as_field(&c.poly), Basis::R)
                ));
            }
            for v in &g.violations {
                s.push_str(&format!("violation {}: {}\n", v.rho, v.detail));
            }
            s
        }
    };
    Ok(Outcome { text, verified: violations_ok(&g) })
}

pub fn qc(o: &Opts) -> Res {
    let (mu, g) = grading(o)?;
    let bases = [Basis::R, Basis::Q, Basis::C];
    let text = match o.format {
        Format::Json => {
            let comps: Vec<_> = g
                .components()
                .iter()
                .map(|c| {
                    let mut m = serde_json::Map::new();
                    m.insert("i".into(), json!(c.i));
                    m.insert("j".into(), json!(c.j));
                    for b in bases {
                        m.insert(b.symbol().into(), json!(terms_json(&to_basis(&c.poly, b))));
                    }
                    serde_json::Value::Object(m)
                })
                .collect();
            pretty(&json!({ "mu": mu, "components": comps }))
        }
        Format::Csv => {
            let mut s = String::from("i,j,basis,rho,coef\n");
            for c in g.components() {
                for b in bases {
                    for (rho, v) in to_basis(&c.poly, b).terms().rev() {
                        s.push_str(&format!(
                            "{},{},{},{},{}\n",
                            c.i,
                            c.j,
                            b.symbol(),
                            parts_text(rho),
                            csv_field(&v.to_string())
                        ));
                    }
                }
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for c in g.components() {
                let forms: Vec<String> = bases
                    .iter()
                    .map(|&b| format!("{}: {}", b.symbol(), render_text(&as_field(&to_basis(&c.poly, b)), b)))
                    .collect();
                s.push_str(&format!("({},{}) {}\n", c.i, c.j, forms.join("; ")));
            }
            s
        }
    };
    Ok(Outcome { text, verified: violations_ok(&g) })
}

const FIT_DEFAULT: &[&str] = &["f10", "g10", "f22", "g22", "f33", "g33", "f21", "g21", "f20"];

#[derive(Serialize)]
struct FitReport {
    name: String,
    i: u32,
    j: u32,
    side: String,
    status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    fitted: Option<String>,
    published: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    detail: Option<String>,
}

pub fn fit(o: &Opts) -> Res {
    let names: Vec<String> = match &o.claims {
        Some(c) => c.clone(),
        None => FIT_DEFAULT.iter().map(|s| s.to_string()).collect(),
    };
    let rmax = o.rmax.unwrap_or(9);
    if rmax < 2 {
        return Err(Failure::Usage("--rmax must be at least 2".into()));
    }
    let e = Engine::new(o);
    for r in 2..=rmax {
        e.kerov(&Partition::row(r))?;
    }
    let mut reports = Vec::new();
    for name in &names {
        let (i, j, side, expected) =
            published(name).ok_or_else(|| Failure::Usage(format!("no published structure function {name:?}")))?;
        let comps = row_components(&e.k, i, j, side, 2..=rmax)?;
        let (status, fitted, detail) = match fit_structure_function(&comps, i, j, side, 2..=rmax, &[]) {
            Ok(f) if f.function == expected => ("match", Some(f.function.to_string()), None),
            Ok(f) => ("differs", Some(f.function.to_string()), None),
            Err(KerovError::RankDeficient(d)) => ("undetermined", None, Some(d)),
            Err(KerovError::Inconsistent { detail, .. }) => ("inconsistent", None, Some(detail)),
            Err(e) => return Err(e.into()),
        };
        reports.push(FitReport {
            name: name.clone(),
            i,
            j,
            side: format!("{side:?}"),
            status,
            fitted,
            published: expected.to_string(),
            detail,
        });
    }
    let verified = reports.iter().all(|r| r.status == "match");
    let text = match o.format {
        Format::Json => pretty(&reports),
        Format::Csv => {
            let mut s = String::from("name,i,j,side,status,fitted,published\n");
            for r in &reports {
                s.push_str(&format!(
                    "{},{},{},{},{},{},{}\n",
                    r.name,
                    r.i,
                    r.j,
                    r.side,
                    r.status,
                    csv_field(r.fitted.as_deref().unwrap_or("")),
                    csv_field(&r.published)
                ));
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for r in &reports {
                s.push_str(&format!("{} ({},{}) {}: {}", r.name, r.i, r.j, r.side, r.status));
                match (&r.fitted, &r.detail) {
                    (Some(f), _) if r.status == "match" => s.push_str(&format!(" {f}\n")),
                    (Some(f), _) => s.push_str(&format!(" fitted {f}, published {}\n", r.published)),
                    (None, Some(d)) => s.push_str(&format!(" ({d})\n")),
                    (None, None) => s.push('\n'),
                }
            }
            s
        }
    };
    Ok(Outcome { text, verified })
}

pub fn content_fit(o: &Opts) -> Res {
    let mu = need_mu(o)?;
    no_part_one(mu)?;
    let pool = content_pool(mu)?;
    let c = fit_content(mu, &pool)?;
    let text = match o.format {
        Format::Json => {
            let terms: Vec<_> = c
                .terms
                .iter()
                .map(|(m, v)| json!({ "nu": m.nu.parts(), "b": m.b, "coef": v.to_canonical_string() }))
                .collect();
            pretty(&json!({ "mu": mu, "integral": c.is_integral(), "terms": terms }))
        }
        Format::Csv => {
            let mut s = String::from("nu,b,coef\n");
            for (m, v) in &c.terms {
                s.push_str(&format!("{},{},{}\n", parts_text(&m.nu), m.b, csv_field(&v.to_canonical_string())));
            }
            s
        }
        Format::Text => format!("{}\n", c.render()),
    };
    Ok(Outcome { text, verified: c.is_integral() })
}

pub fn verify(o: &Opts) -> Res {
    let cfg = VerifyConfig { r_max: o.rmax.unwrap_or(9), mu_max: 7, claims: o.claims.clone() };
    let e = Engine::new(o);
    let subjects: Vec<Partition> = (2..=cfg.r_max)
        .map(Partition::row)
        .chain(enumerate_range(2, cfg.mu_max, 2).into_iter().filter(|p| p.len() > 1))
        .collect();
    for p in &subjects {
        e.load(p);
    }
    let results = run_verify(&e.k, &cfg)?;
    for p in &subjects {
        if e.cache.as_ref().is_some_and(|c| c.get(&Engine::key(p)).is_none()) {
            e.store(p);
        }
    }
    let text = match o.format {
        Format::Json => pretty(&results),
        Format::Csv => {
            let mut s = String::from("claim_id,paper_anchor,status,witness\n");
            for r in &results {
                s.push_str(&format!(
                    "{},{},{},{}\n",
                    r.claim_id,
                    csv_field(&r.paper_anchor),
                    status_word(r.status),
                    csv_field(r.witness.as_deref().unwrap_or(""))
                ));
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for r in &results {
                s.push_str(&format!("{:<9} {:<7} {}", r.claim_id, status_word(r.status), r.paper_anchor));
                if let Some(w) = &r.witness {
                    s.push_str(&format!(" ({w})"));
                }
                s.push('\n');
            }
            s
        }
    };
    Ok(Outcome { text, verified: all_passed(&results) })
}

fn status_word(s: ClaimStatus) -> &'static str {
    match s {
        ClaimStatus::Pass => "pass",
        ClaimStatus::Fail => "fail",
        ClaimStatus::Skipped => "skipped",
    }
}

#[derive(Serialize)]
struct TableEntry {
    kind: &'static str,
    #[serde(flatten)]
    doc: PolyDoc,
}

pub fn table(o: &Opts) -> Res {
    let rmax = o.rmax.unwrap_or(6);
    let sp = specialization(o)?;
    let e = Engine::new(o);
    let mut entries: Vec<(&'static str, Partition, RPoly<FieldElem>)> = Vec::new();
    for r in 2..=rmax {
        let mu = Partition::row(r);
        let k = sp.apply(&*e.kerov(&mu)?)?;
        entries.push(("kerov", mu, k));
    }
    for mu in enumerate_range(4, rmax, 2).into_iter().filter(|p| p.len() > 1) {
        let k = sp.apply(&e.tilde(&mu)?)?;
        entries.push(("kerov-tilde", mu, k));
    }
    done(match o.format {
        Format::Json => {
            let docs: Vec<TableEntry> = entries
                .iter()
                .map(|(kind, mu, k)| TableEntry { kind, doc: PolyDoc::new(mu, &sp.label, Basis::R, k) })
                .collect();
            pretty(&docs)
        }
        Format::Csv => {
            let mut s = String::from("kind,mu,rho,coef\n");
            for (kind, mu, k) in &entries {
                for (rho, c) in k.terms().rev() {
                    s.push_str(&format!("{kind},{},{},{}\n", parts_text(mu), parts_text(rho), csv_field(&c.to_canonical_string())));
                }
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for (kind, mu, k) in &entries {
                let name = if *kind == "kerov" { format!("K_{}", mu.weight()) } else { format!("Kt_{mu}") };
                s.push_str(&format!("{name} = {}\n", render_text(k, Basis::R)));
            }
            s
        }
    })
}
