//! The twelve acceptance criteria, one report line each.
//!
//! Two criteria cannot hold as literally stated and are expected to report
//! FAIL with a specific diagnosis; the test asserts the diagnosis as well.

use std::io::Write;

use kerov_core::cumulants::{free_cumulants, identity_suite, moment_series, moments_via_probabilities};
use kerov_core::exact::field::FieldElem;
use kerov_core::exact::poly::Var;
use kerov_core::exact::rational::{factorial, rat, Rational};
use kerov_core::exact::scalar::Scalar;
use kerov_core::jack::{oracle_gram_schmidt, theta_all, Mode, ThetaTower};
use kerov_core::kerov::content::{content_fit, content_pool, ContentMonomial, ContentPoly};
use kerov_core::kerov::fit::{predict, published, row_components};
use kerov_core::kerov::interp::{default_pool, fit_at_point};
use kerov_core::kerov::{
    fit_structure_function, interpolation_oracle_k, kerov_tilde, render_text, verify, Basis, ClaimStatus, Kerov,
    KerovError, RPoly, VerifyConfig,
};
use kerov_core::partitions::{enumerate, enumerate_range, Partition};
use kerov_core::symfun::{check_identities, lagrange_prediction, prop9_check, series_pow, SignedAlphabet, Status};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn p(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec())
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

fn ab(c: i64, i: i32, j: i32) -> FieldElem {
    &(&FieldElem::from_int(c) * &FieldElem::alpha().pow(i)) * &FieldElem::beta().pow(j)
}

fn tie_beta(c: &FieldElem) -> FieldElem {
    c.substitute(&|v| match v {
        Var::Beta => &FieldElem::one() - &FieldElem::alpha(),
        v => FieldElem::var(v),
    })
    .unwrap()
}

/// Outcome of one criterion.
struct Line {
    pass: bool,
    note: String,
}

impl Line {
    fn check(pass: bool, note: impl Into<String>) -> Self {
        Line { pass, note: note.into() }
    }
}

/// First failing item, if any.
fn first_failure<T>(items: impl IntoIterator<Item = (T, bool)>) -> Option<T> {
    items.into_iter().find(|(_, ok)| !ok).map(|(t, _)| t)
}

const ROWS: &[&str] = &[
    "a^2*R3 + a*b*R2",
    "a^3*R4 + 3*a^2*b*R3 + a^2*R2 + 2*a*b^2*R2",
    "a^4*R5 + a^3*b*(6*R4 + R2^2) + 5*a^3*R3 + 11*a^2*b^2*R3 + 7*a^2*b*R2 + 6*a*b^3*R2",
    "a^5*R6 + a^4*b*(10*R5 + 5*R3*R2) + a^4*(15*R4 + 5*R2^2) + a^3*b^2*(35*R4 + 10*R2^2) + 55*a^3*b*R3 \
     + 8*a^3*R2 + 50*a^2*b^3*R3 + 46*a^2*b^2*R2 + 24*a*b^4*R2",
    "a^6*R7 + a^5*b*(15*R6 + 9*R4*R2 + 6*R3^2 + R2^3) + a^5*(35*R5 + 35*R3*R2) + a^4*b^2*(85*R5 + 73*R3*R2) \
     + a^4*b*(238*R4 + 96*R2^2) + 84*a^4*R3 + a^3*b^3*(225*R4 + 84*R2^2) + 505*a^3*b^2*R3 + 144*a^3*b*R2 \
     + 274*a^2*b^4*R3 + 326*a^2*b^3*R2 + 120*a*b^5*R2",
];

const TILDES: &[(&[u32], &str)] = &[
    (&[2, 2], "a^3*(4*R4 + 2*R2^2) + 10*a^2*b*R3 + 2*a^2*R2 + 6*a*b^2*R2"),
    (&[3, 2], "a^4*(6*R5 + 6*R3*R2) + a^3*b*(30*R4 + 12*R2^2) + 18*a^3*R3 + 48*a^2*b^2*R3 + 24*a^2*b*R2 + 24*a*b^3*R2"),
    (
        &[4, 2],
        "a^5*(8*R6 + 8*R4*R2 + 4*R3^2) + a^4*b*(68*R5 + 72*R3*R2) + a^4*(80*R4 + 40*R2^2) \
         + a^3*b^2*(208*R4 + 88*R2^2) + 268*a^3*b*R3 + 32*a^3*R2 + 268*a^2*b^3*R3 + 212*a^2*b^2*R2 + 120*a*b^4*R2",
    ),
    (
        &[3, 3],
        "a^5*(9*R6 + 9*R4*R2 + 9*R3^2 + 3*R2^3) + a^4*b*(72*R5 + 81*R3*R2) + a^4*(75*R4 + 27*R2^2) \
         + a^3*b^2*(213*R4 + 90*R2^2) + 261*a^3*b*R3 + 36*a^3*R2 + 270*a^2*b^3*R3 + 210*a^2*b^2*R2 + 120*a*b^4*R2",
    ),
    (
        &[2, 2, 2],
        "a^4*(40*R5 + 64*R3*R2) + a^3*b*(176*R4 + 96*R2^2) + 80*a^3*R3 + 256*a^2*b^2*R3 + 104*a^2*b*R2 + 120*a*b^3*R2",
    ),
];

fn c1(k: &Kerov<FieldElem>) -> Line {
    let rows = (2u32..).zip(ROWS).map(|(r, want)| {
        (format!("K_{r}"), render_text(&k.kerov_k(&Partition::row(r)).unwrap(), Basis::R) == *want)
    });
    let tildes = TILDES.iter().map(|(mu, want)| {
        (format!("K̃_{}", p(mu)), render_text(&kerov_tilde(k, &p(mu)).unwrap(), Basis::R) == *want)
    });
    match first_failure(rows.chain(tildes)) {
        None => Line::check(true, "K_2..K_6 and the five K̃_μ of the tables"),
        Some(w) => Line::check(false, format!("{w} differs")),
    }
}

fn c2(k: &Kerov<FieldElem>) -> Line {
    let want = RPoly::from_terms([
        (p(&[3, 3]), ab(1, 4, 0)),
        (p(&[3, 2]), ab(2, 3, 1)),
        (p(&[4]), ab(-4, 3, 0)),
        (p(&[2, 2]), &ab(-2, 3, 0) + &ab(1, 2, 2)),
        (p(&[3]), ab(-10, 2, 1)),
        (p(&[2]), &ab(-2, 2, 0) - &ab(6, 1, 2)),
    ]);
    Line::check(*k.kerov_k(&p(&[2, 2])).unwrap() == want, "K_{2,2} with its negative terms")
}

fn c3(k: &Kerov<FieldElem>) -> Line {
    // Solving on the relaxed support brings in R_2^2 and R_4 as unknowns A, B.
    let wide = k.check_support(&p(&[2])).unwrap();
    let coeffs_ok = wide.coeff(&p(&[2, 2])).is_zero()
        && wide.coeff(&p(&[4])).is_zero()
        && wide.coeff(&p(&[3])) == ab(1, 2, 0)
        && wide.coeff(&p(&[2])) == ab(1, 1, 1);
    let mode = Mode::symbolic_alpha();
    let r = free_cumulants(&p(&[2]), 4, &mode).unwrap();
    let value = wide.map(tie_beta).eval(&r);
    let theta = ThetaTower::new(mode).vartheta(&p(&[2]), &p(&[2])).unwrap();
    let two_alpha = ab(2, 1, 0);
    Line::check(coeffs_ok && value == two_alpha && theta == two_alpha, "A = B = 0, C = α², D = αβ, K_2(2) = 2α")
}

/// Irreducible characters of S_n, n = 1..5, rows and columns in reverse lexicographic order.
const CHARACTERS: &[&[&[i64]]] = &[
    &[&[1]],
    &[&[1, 1], &[-1, 1]],
    &[&[1, 1, 1], &[-1, 0, 2], &[1, -1, 1]],
    &[&[1, 1, 1, 1, 1], &[-1, 0, -1, 1, 3], &[0, -1, 2, 0, 2], &[1, 0, -1, -1, 3], &[-1, 1, 1, -1, 1]],
    &[
        &[1, 1, 1, 1, 1, 1, 1],
        &[-1, 0, -1, 1, 0, 2, 4],
        &[0, -1, 1, -1, 1, 1, 5],
        &[1, 0, 0, 0, -2, 0, 6],
        &[0, 1, -1, -1, 1, -1, 5],
        &[-1, 0, 1, 1, 0, -2, 4],
        &[1, -1, -1, 1, 1, -1, 1],
    ],
];

fn c4() -> Line {
    let k = Kerov::specialized(FieldElem::one(), FieldElem::zero());
    let one = FieldElem::one;
    let want = [
        RPoly::from_terms([(p(&[3]), one())]),
        RPoly::from_terms([(p(&[4]), one()), (p(&[2]), one())]),
        RPoly::from_terms([(p(&[5]), one()), (p(&[3]), FieldElem::from_int(5))]),
    ];
    let rows_ok = (2u32..).zip(&want).all(|(r, w)| *k.kerov_k(&Partition::row(r)).unwrap() == *w);
    let mut chars_ok = true;
    for n in 1..=5u32 {
        let t = theta_all(n, &Mode::Alpha(rat(1))).unwrap();
        let parts = enumerate(n, 1);
        let chars = CHARACTERS[n as usize - 1];
        let nf = Rational::from_integer(factorial(n as u64));
        for (i, lambda) in parts.iter().enumerate() {
            let dim = rat(chars[i][parts.len() - 1]);
            for (j, rho) in parts.iter().enumerate() {
                let lhs = Rational::from_integer(rho.stats().z) * t.get(lambda, rho).unwrap();
                chars_ok &= lhs == &nf * rat(chars[i][j]) / &dim;
            }
        }
    }
    Line::check(rows_ok && chars_ok, "K_2, K_3, K_4 at α = 1, β = 0; z_ρ θ^λ_ρ(1) = n! χ^λ_ρ / dim λ for n ≤ 5")
}

fn claims(k: &Kerov<FieldElem>, cfg: VerifyConfig, note: &str) -> Line {
    let res = verify(k, &cfg).unwrap();
    match res.iter().find(|r| r.status != ClaimStatus::Pass) {
        None => Line::check(true, note),
        Some(r) => Line::check(false, format!("{}: {:?}", r.claim_id, r.witness)),
    }
}

fn named(ids: &[&str]) -> VerifyConfig {
    VerifyConfig { claims: Some(ids.iter().map(|s| s.to_string()).collect()), ..VerifyConfig::default() }
}

fn c5(k: &Kerov<FieldElem>) -> Line {
    claims(k, named(&["thm7", "thm8", "thm9", "thm10"]), "Theorems 7, 8, 9, 10 for r ≤ 9")
}

fn c6(k: &Kerov<FieldElem>) -> Line {
    let mode = Mode::symbolic_alpha();
    let theta = (1..=7).map(|n| (format!("theta n = {n}"), theta_all(n, &mode).unwrap() == oracle_gram_schmidt(n).unwrap()));
    let moments = enumerate_range(0, 8, 1).into_iter().map(|l| {
        let ok = moment_series(&l, 10, &mode).unwrap() == moments_via_probabilities(&l, 10, &mode).unwrap();
        (format!("moments of {l}"), ok)
    });
    let oracle = enumerate_range(2, 12, 2).into_iter().filter(|mu| mu.weight() - mu.len() as u32 <= 4).map(|mu| {
        let pool = default_pool(&mu).unwrap();
        let o = interpolation_oracle_k(&mu, &pool).unwrap();
        let ok = o == k.kerov_k(&mu).unwrap().map(tie_beta);
        (format!("oracle K_{mu}"), ok)
    });
    match first_failure(theta.chain(moments).chain(oracle)) {
        None => Line::check(true, "theta n ≤ 7, moments |λ| ≤ 8, k ≤ 10, interpolation oracle for |μ|−l(μ) ≤ 4"),
        Some(w) => Line::check(false, format!("{w} differs")),
    }
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    q(rng.gen_range(-7..=7), rng.gen_range(1..=4))
}

fn random_alphabet(rng: &mut ChaCha8Rng) -> SignedAlphabet<Rational> {
    let plus: Vec<Rational> = (0..rng.gen_range(1..=4)).map(|_| random_rational(rng)).collect();
    let mut minus: Vec<Rational> = (0..rng.gen_range(0..=2)).map(|_| random_rational(rng)).collect();
    if rng.gen_bool(0.5) {
        // e_1 = 0 enables the fourth identity of each family.
        let e1 = plus.iter().sum::<Rational>() - minus.iter().sum::<Rational>();
        minus.push(e1);
    }
    SignedAlphabet::new(plus, minus)
}

fn c7() -> Line {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut failures = Vec::new();
    let mut counted = [0usize; 5];
    for _ in 0..100 {
        // (4.14), (4.15), each at z and z + 1.
        let a = random_alphabet(&mut rng);
        let z = q(rng.gen_range(-9..=9), rng.gen_range(2..=5));
        let n = rng.gen_range(0..=6);
        for c in check_identities(&a, &z, n).unwrap() {
            if c.status == Status::Fail {
                failures.push(format!("{} n={n}", c.identity_id));
            }
        }
        counted[0] += 1;

        // (5.7)–(5.10) on a random diagram and parameter.
        let lambda = {
            let pool = enumerate_range(0, 7, 1);
            pool[rng.gen_range(0..pool.len())].clone()
        };
        let mode = if rng.gen_bool(0.5) {
            Mode::Alpha(q(rng.gen_range(1..=9), rng.gen_range(1..=4)))
        } else {
            Mode::ZetaEta(q(-rng.gen_range(1..=9), rng.gen_range(1..=4)), q(rng.gen_range(1..=9), rng.gen_range(1..=4)))
        };
        match identity_suite(&lambda, 8, &mode) {
            Ok(cs) => failures.extend(cs.into_iter().filter(|c| c.status == Status::Fail).map(|c| format!("{} {lambda}", c.identity_id))),
            Err(e) => failures.push(format!("identity suite at {lambda}: {e}")),
        }
        counted[1] += 1;

        // Proposition 9.
        let a = random_alphabet(&mut rng);
        for c in prop9_check(&a, rng.gen_range(0..=7)) {
            if c.status == Status::Fail {
                failures.push(c.identity_id);
            }
        }
        counted[2] += 1;

        // Newton and Cauchy.
        let a = random_alphabet(&mut rng);
        let n = 8;
        let (h, e) = (a.h_series(n), a.e_series(n));
        for m in 1..=n {
            let newton: Rational = (1..=m).map(|k| a.p(k) * &h[m - k]).sum();
            let cauchy: Rational = (0..=m).map(|k| if k % 2 == 0 { &e[k] * &h[m - k] } else { -(&e[k] * &h[m - k]) }).sum();
            if newton != rat(m as i64) * &h[m] || cauchy != rat(0) {
                failures.push(format!("newton/cauchy m={m}"));
            }
        }
        counted[3] += 1;

        // Lagrange (4.6) for k ≤ 3, n ≤ 7.
        let a = random_alphabet(&mut rng);
        let hstar = a.h_star_series(7).unwrap();
        for k in 1..=3 {
            let direct = series_pow(&hstar, k as i64, 7).unwrap();
            for n in 0..=7 {
                if direct[n] != lagrange_prediction(&a, n, k).unwrap() {
                    failures.push(format!("lagrange n={n} k={k}"));
                }
            }
        }
        counted[4] += 1;
    }
    Line::check(
        failures.is_empty() && counted.iter().all(|&c| c == 100),
        match failures.first() {
            None => "100 random instances each of (4.14)/(4.15), (5.7)-(5.10), Prop. 9, Newton/Cauchy, (4.6)".to_string(),
            Some(f) => format!("{f} fails"),
        },
    )
}

/// Coefficients of a polynomial in `t` after substituting `α = −1/t`.
fn minus_r_in_t(c: &FieldElem) -> FieldElem {
    let t = FieldElem::beta();
    c.substitute(&|v| if v == Var::Alpha { -(&t.inv().unwrap()) } else { FieldElem::var(v) }).unwrap()
}

fn positive_integer_poly(c: &FieldElem) -> bool {
    c.as_poly().is_some_and(|p| p.terms().all(|(_, x)| x.is_integer() && *x > rat(0)))
}

fn c8(k: &Kerov<FieldElem>) -> Line {
    let conj = claims(k, named(&["conj1", "conj2"]), "");
    if !conj.pass {
        return conj;
    }
    let alpha = Mode::symbolic_alpha();
    for lambda in enumerate_range(1, 10, 1) {
        let n_max = lambda.weight() as usize + 1;
        let r = free_cumulants(&lambda, n_max, &alpha).unwrap();
        for n in 2..=n_max {
            if !positive_integer_poly(&minus_r_in_t(&-r.get(n))) {
                return Line::check(false, format!("−R_{n}({lambda}) in −1/α"));
            }
        }
    }
    let ze = Mode::symbolic_zeta_eta();
    for lambda in enumerate_range(1, 7, 1) {
        let n_max = lambda.weight() as usize + 1;
        let r = free_cumulants(&lambda, n_max, &ze).unwrap();
        for n in 2..=n_max {
            if !positive_integer_poly(&-r.get(n)) {
                return Line::check(false, format!("−R_{n}({lambda}) in (ζ, η)"));
            }
        }
    }
    Line::check(true, "Conjectures 1, 2 for r ≤ 9; −R_n ≥ 0 in −1/α for |λ| ≤ 10 and in (ζ, η) for |λ| ≤ 7")
}

const STRICT_FITS: &[&str] = &["f22", "g22", "f33", "g33", "f21", "g21", "f20"];

struct FitOutcome {
    strict: Line,
    rank_deficient: Vec<String>,
    supplementary: Line,
}

fn c9(k: &Kerov<FieldElem>) -> FitOutcome {
    let mut deficient = Vec::new();
    let mut mismatched = Vec::new();
    let mut inconsistent_with_rows = Vec::new();
    let mut extended_fail = Vec::new();
    for name in STRICT_FITS {
        let (i, j, side, want) = published(name).unwrap();
        let from = if i == 2 && j == 0 { 3 } else { 2 };
        let ext = if *name == "f20" { 15 } else { 12 };
        let comps = row_components(k, i, j, side, from..=ext).unwrap();
        match fit_structure_function(&comps, i, j, side, from..=9, &[]) {
            Ok(fit) if fit.function == want => {}
            Ok(_) => mismatched.push(name.to_string()),
            Err(KerovError::RankDeficient(m)) => deficient.push(format!("{name}: {m}")),
            Err(e) => mismatched.push(format!("{name}: {e}")),
        }
        if (from..=9).any(|r| predict(&want, side, r, i, j) != comps[&r]) {
            inconsistent_with_rows.push(name.to_string());
        }
        match fit_structure_function(&comps, i, j, side, from..=ext, &[]) {
            Ok(fit) if fit.function == want => {}
            _ => extended_fail.push(name.to_string()),
        }
    }
    let (_, _, _, f22) = published("f22").unwrap();
    let k5 = RPoly::from_terms([(p(&[4]), rat(35)), (p(&[2, 2]), rat(10))]);
    let cross = predict(&f22, kerov_core::kerov::FitSide::R, 5, 2, 2) == k5;
    let strict_pass = deficient.is_empty() && mismatched.is_empty() && cross;
    let strict_note = if strict_pass {
        "all seven functions determined by r ≤ 9 and equal to the published values".to_string()
    } else {
        let names: Vec<&str> = deficient.iter().map(|d| &d[..3]).collect();
        format!(
            "rows r ≤ 9 do not determine {} (known: monomials m_ν with more parts than any ρ at r ≤ 9 stay free; mismatches: {:?})",
            names.join(", "),
            mismatched
        )
    };
    let supp_pass = inconsistent_with_rows.is_empty() && extended_fail.is_empty() && cross && mismatched.is_empty();
    FitOutcome {
        strict: Line::check(strict_pass, strict_note),
        rank_deficient: deficient,
        supplementary: Line::check(
            supp_pass,
            format!(
                "published values satisfy every r ≤ 9 equation; fits from r ≤ 12 (f20: r ≤ 15) reproduce them; K_5^(2,2) = 35R_4 + 10R_2^2{}",
                if supp_pass { String::new() } else { format!(" [rows: {inconsistent_with_rows:?}, extended: {extended_fail:?}]") }
            ),
        ),
    }
}

fn c10(k: &Kerov<FieldElem>) -> Line {
    claims(k, named(&["closed33", "closed22", "cneg22"]), "K_r^(3,3), K_r^(2,2) closed forms for 5 ≤ r ≤ 9; K_5^(2,2) has a negative C-coefficient")
}

fn cm(nu: &[u32], b: u32) -> ContentMonomial {
    ContentMonomial { nu: p(nu), b }
}

/// The four expansions as printed, keyed by `(ν, b)`.
fn printed_content(mu: &[u32]) -> Vec<(ContentMonomial, FieldElem)> {
    match mu {
        [2] => vec![(cm(&[1], 0), ab(2, 1, 0))],
        [3] => vec![(cm(&[2], 0), ab(3, 2, 0)), (cm(&[1], 0), ab(3, 1, 1)), (cm(&[], 2), ab(-3, 1, 0))],
        [2, 2] => vec![
            (cm(&[2], 0), ab(-12, 2, 0)),
            (cm(&[1, 1], 0), ab(4, 2, 0)),
            (cm(&[1], 0), ab(8, 1, 1)),
            (cm(&[], 2), ab(8, 1, 0)),
        ],
        // (8αβ² − 4α²(2|λ|−3)) p_1 splits into p_1 and |λ| p_1 = C(|λ|,1) p_1.
        [4] => vec![
            (cm(&[3], 0), ab(4, 3, 0)),
            (cm(&[2], 0), ab(12, 2, 1)),
            (cm(&[1], 0), &ab(8, 1, 2) + &ab(12, 2, 0)),
            (cm(&[1], 1), ab(-8, 2, 0)),
            (cm(&[], 2), ab(-8, 1, 1)),
        ],
        _ => unreachable!(),
    }
}

fn differences(fit: &ContentPoly, printed: &[(ContentMonomial, FieldElem)]) -> Vec<String> {
    let mut out: Vec<String> = printed
        .iter()
        .filter(|(m, c)| fit.coeff(m) != *c)
        .map(|(m, c)| format!("{}: fitted {}, printed {}", m.text(), fit.coeff(m).to_pretty_string(), c.to_pretty_string()))
        .collect();
    out.extend(
        fit.terms
            .keys()
            .filter(|m| printed.iter().all(|(pm, _)| pm != *m))
            .map(|m| format!("{}: fitted but not printed", m.text())),
    );
    out
}

struct ZetaEtaOutcome {
    strict: Line,
    content_differences: Vec<(String, Vec<String>)>,
    independence: bool,
    jack_witness: bool,
}

fn c11(k: &Kerov<FieldElem>) -> ZetaEtaOutcome {
    // Swapping ζ and η keeps (α, β); the fits go through the ζη Jack tables.
    let mut independence = true;
    for mu in enumerate_range(2, 9, 2).into_iter().filter(|mu| mu.weight() - mu.len() as u32 <= 3) {
        let pool = default_pool(&mu).unwrap();
        for (z, e) in [(q(-2, 1), q(1, 3)), (q(-1, 3), q(2, 1))] {
            let one = fit_at_point(&mu, &Mode::ZetaEta(z.clone(), e.clone()), &pool).unwrap();
            let two = fit_at_point(&mu, &Mode::ZetaEta(e.clone(), z.clone()), &pool).unwrap();
            let (a, b) = kerov_core::kerov::alpha_beta(&z, &e).unwrap();
            let point = [a, b, rat(0), rat(0)];
            let sym = k.kerov_k(&mu).unwrap();
            let sym = RPoly::from_terms(sym.terms().map(|(r, c)| (r.clone(), c.eval(&point).unwrap())));
            let fitted = one.filter(|_, c| !c.is_zero());
            independence &= one == two && fitted == sym;
        }
    }
    let mut content_differences = Vec::new();
    for mu in [&[2u32][..], &[3], &[2, 2], &[4]] {
        let m = p(mu);
        let fit = content_fit(&m, &content_pool(&m).unwrap()).unwrap();
        let d = differences(&fit, &printed_content(mu));
        if !d.is_empty() || !fit.is_integral() {
            content_differences.push((format!("ϑ_{m}"), d));
        }
    }
    // One-row Jack polynomial: ϑ^(4)_(2,2) = 24α²; at α = 2 that is 96.
    let mut tower = ThetaTower::new(Mode::Alpha(rat(2)));
    let jack = tower.vartheta(&p(&[4]), &p(&[2, 2])).unwrap() == rat(96);
    let pass = independence && content_differences.is_empty();
    let note = if pass {
        "swap-invariant fits agree with K_μ for |μ|−l(μ) ≤ 3; ϑ_2, ϑ_3, ϑ_{2,2}, ϑ_4 reproduced".to_string()
    } else {
        format!(
            "(ζ,η) independence {}; content list differs: {:?} (known: the printed sign of 8αβ p_1 in ϑ_{{2,2}} \
             contradicts ϑ^(4)_(2,2) = 24α² from J_(n) = n! α^n g_n, witness {})",
            if independence { "holds" } else { "FAILS" },
            content_differences,
            if jack { "confirmed" } else { "not confirmed" }
        )
    };
    ZetaEtaOutcome { strict: Line::check(pass, note), content_differences, independence, jack_witness: jack }
}

fn c12(k: &Kerov<FieldElem>) -> Line {
    claims(k, named(&["conj8"]), "Conjecture 8 for all K̃_μ with |μ| ≤ 7")
}

fn report(out: &mut impl Write, id: &str, line: &Line) {
    let status = if line.pass { "PASS" } else { "FAIL" };
    writeln!(out, "criterion {id:>2}: {status}  {}", line.note).unwrap();
}

#[test]
fn acceptance_criteria() {
    let k = Kerov::symbolic();
    // Written past the test harness's capture so the lines always appear.
    let mut out = std::io::stdout();
    let mut lines = Vec::new();
    for (id, f) in [
        ("1", c1 as fn(&Kerov<FieldElem>) -> Line),
        ("2", c2),
        ("3", c3),
        ("4", |_: &Kerov<FieldElem>| c4()),
        ("5", c5),
        ("6", c6),
        ("7", |_: &Kerov<FieldElem>| c7()),
        ("8", c8),
    ] {
        let line = f(&k);
        report(&mut out, id, &line);
        lines.push((id, line));
    }
    let fits = c9(&k);
    let supp = if fits.supplementary.pass { "PASS" } else { "FAIL" };
    report(&mut out, "9", &Line::check(fits.strict.pass, format!("{}; supplementary {supp}: {}", fits.strict.note, fits.supplementary.note)));
    let line = c10(&k);
    report(&mut out, "10", &line);
    lines.push(("10", line));
    let ze = c11(&k);
    report(&mut out, "11", &ze.strict);
    let line = c12(&k);
    report(&mut out, "12", &line);
    lines.push(("12", line));

    for (id, line) in &lines {
        assert!(line.pass, "criterion {id}: {}", line.note);
    }

    // Criterion 9 fails only through rank deficiency of the degree-four and
    // degree-six functions at r ≤ 9; the supplementary line must pass.
    assert!(fits.supplementary.pass, "{}", fits.supplementary.note);
    let names: Vec<&str> = fits.rank_deficient.iter().map(|d| &d[..3]).collect();
    assert_eq!(names, ["f33", "g33", "f21", "g21", "f20"], "{}", fits.strict.note);
    assert!(!fits.strict.pass);

    // Criterion 11 fails only through the printed ϑ_{2,2}.
    assert!(ze.independence);
    assert!(ze.jack_witness);
    assert_eq!(ze.content_differences.len(), 1, "{}", ze.strict.note);
    let (which, diffs) = &ze.content_differences[0];
    assert_eq!(which, "ϑ_[2,2]");
    assert_eq!(diffs.len(), 1);
    assert!(diffs[0].starts_with("p1: fitted -8*a*b"), "{}", diffs[0]);
}
