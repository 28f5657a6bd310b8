use kerov_core::cumulants::free_cumulants;
use kerov_core::exact::field::FieldElem;
use kerov_core::exact::poly::Var;
use kerov_core::exact::rational::{rat, Rational};
use kerov_core::jack::{Mode, ThetaTower};
use kerov_core::kerov::content::{content_fit, content_pool, ContentMonomial};
use kerov_core::kerov::fit::{predict, published, row_components};
use kerov_core::kerov::interp::{default_pool, fit_at_point};
use kerov_core::kerov::verify::{closed_form_22, closed_form_33};
use kerov_core::kerov::{
    fit_structure_function, from_basis, grade_row, grade_tilde, interpolation_oracle_k,
    interpolation_oracle_k_zeta_eta, kerov_from_tilde, kerov_tilde, render_csv, render_text, to_basis, verify, Basis,
    ClaimStatus, FitSide, Kerov, KerovError, PolyDoc, RPoly, VerifyConfig,
};
use kerov_core::partitions::{enumerate_range, Partition};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn p(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec())
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

fn a() -> FieldElem {
    FieldElem::alpha()
}

fn b() -> FieldElem {
    FieldElem::beta()
}

fn int(n: i64) -> FieldElem {
    FieldElem::from_int(n)
}

/// `c α^i β^j`.
fn ab(c: i64, i: i32, j: i32) -> FieldElem {
    &(&int(c) * &a().pow(i)) * &b().pow(j)
}

fn poly(terms: &[(&[u32], FieldElem)]) -> RPoly<FieldElem> {
    RPoly::from_terms(terms.iter().map(|(rho, c)| (p(rho), c.clone())))
}

fn text_k(k: &Kerov<FieldElem>, mu: &[u32]) -> String {
    render_text(&k.kerov_k(&p(mu)).unwrap(), Basis::R)
}

const ROWS: &[(u32, &str)] = &[
    (2, "a^2*R3 + a*b*R2"),
    (3, "a^3*R4 + 3*a^2*b*R3 + a^2*R2 + 2*a*b^2*R2"),
    (4, "a^4*R5 + a^3*b*(6*R4 + R2^2) + 5*a^3*R3 + 11*a^2*b^2*R3 + 7*a^2*b*R2 + 6*a*b^3*R2"),
    (
        5,
        "a^5*R6 + a^4*b*(10*R5 + 5*R3*R2) + a^4*(15*R4 + 5*R2^2) + a^3*b^2*(35*R4 + 10*R2^2) + 55*a^3*b*R3 \
         + 8*a^3*R2 + 50*a^2*b^3*R3 + 46*a^2*b^2*R2 + 24*a*b^4*R2",
    ),
    (
        6,
        "a^6*R7 + a^5*b*(15*R6 + 9*R4*R2 + 6*R3^2 + R2^3) + a^5*(35*R5 + 35*R3*R2) + a^4*b^2*(85*R5 + 73*R3*R2) \
         + a^4*b*(238*R4 + 96*R2^2) + 84*a^4*R3 + a^3*b^3*(225*R4 + 84*R2^2) + 505*a^3*b^2*R3 + 144*a^3*b*R2 \
         + 274*a^2*b^4*R3 + 326*a^2*b^3*R2 + 120*a*b^5*R2",
    ),
];

const TILDES: &[(&[u32], &str)] = &[
    (&[2, 2], "a^3*(4*R4 + 2*R2^2) + 10*a^2*b*R3 + 2*a^2*R2 + 6*a*b^2*R2"),
    (&[3, 2], "a^4*(6*R5 + 6*R3*R2) + a^3*b*(30*R4 + 12*R2^2) + 18*a^3*R3 + 48*a^2*b^2*R3 + 24*a^2*b*R2 + 24*a*b^3*R2"),
    (
        &[2, 2, 2],
        "a^4*(40*R5 + 64*R3*R2) + a^3*b*(176*R4 + 96*R2^2) + 80*a^3*R3 + 256*a^2*b^2*R3 + 104*a^2*b*R2 + 120*a*b^3*R2",
    ),
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
];

#[test]
fn rows_match_the_tables() {
    let k = Kerov::symbolic();
    for (r, want) in ROWS {
        assert_eq!(text_k(&k, &[*r]), *want, "K_{r}");
    }
}

#[test]
fn tilde_values_match_the_tables() {
    let k = Kerov::symbolic();
    for (mu, want) in TILDES {
        let t = kerov_tilde(&k, &p(mu)).unwrap();
        assert_eq!(render_text(&t, Basis::R), *want, "K̃_{mu:?}");
    }
}

#[test]
fn k22_has_negative_terms() {
    let k = Kerov::symbolic();
    let want = poly(&[
        (&[3, 3], ab(1, 4, 0)),
        (&[3, 2], ab(2, 3, 1)),
        (&[4], ab(-4, 3, 0)),
        (&[2, 2], &ab(-2, 3, 0) + &ab(1, 2, 2)),
        (&[3], ab(-10, 2, 1)),
        (&[2], &ab(-2, 2, 0) - &ab(6, 1, 2)),
    ]);
    assert_eq!(*k.kerov_k(&p(&[2, 2])).unwrap(), want);
}

#[test]
fn tilde_inverts() {
    let k = Kerov::symbolic();
    for mu in [p(&[2, 2]), p(&[3, 2, 2]), p(&[2, 2, 2])] {
        assert_eq!(kerov_from_tilde(&k, &mu).unwrap(), *k.kerov_k(&mu).unwrap(), "{mu}");
    }
    assert_eq!(kerov_tilde(&k, &p(&[5])).unwrap(), *k.kerov_k(&p(&[5])).unwrap());
}

#[test]
fn classical_specialization() {
    let k = Kerov::specialized(FieldElem::one(), FieldElem::zero());
    let want = [
        (2, poly(&[(&[3], int(1))])),
        (3, poly(&[(&[4], int(1)), (&[2], int(1))])),
        (4, poly(&[(&[5], int(1)), (&[3], int(5))])),
    ];
    for (r, w) in want {
        assert_eq!(*k.kerov_k(&Partition::row(r)).unwrap(), w, "K_{r}");
    }
}

#[test]
fn rational_points_agree_with_symbolic() {
    let sym = Kerov::symbolic();
    let (x, y) = (q(3, 2), q(-2, 5));
    let num = Kerov::at(x.clone(), y.clone());
    let point = [x, y, rat(0), rat(0)];
    for mu in enumerate_range(2, 7, 2) {
        let s = sym.kerov_k(&mu).unwrap().map(|c| FieldElem::from_rational(&c.eval(&point).unwrap()));
        let n = num.kerov_k(&mu).unwrap().map(FieldElem::from_rational);
        assert_eq!(s, n, "{mu}");
    }
}

fn evaluation_matches_vartheta(mode: Mode<Rational>) {
    let (alpha, beta) = (mode.alpha().unwrap(), mode.beta().unwrap());
    let k = Kerov::at(alpha, beta);
    let mut tower = ThetaTower::new(mode.clone());
    let lambdas = enumerate_range(2, 7, 1);
    let cumulants: Vec<_> = lambdas.iter().map(|l| free_cumulants(l, 9, &mode).unwrap()).collect();
    for mu in enumerate_range(2, 7, 2) {
        let kmu = k.kerov_k(&mu).unwrap();
        for (lambda, r) in lambdas.iter().zip(&cumulants) {
            if lambda.weight() < mu.weight() {
                continue;
            }
            assert_eq!(kmu.eval(r), tower.vartheta(lambda, &mu).unwrap(), "K_{mu} at λ = {lambda}");
        }
    }
}

#[test]
fn evaluation_consistency_alpha() {
    evaluation_matches_vartheta(Mode::Alpha(q(2, 1)));
    evaluation_matches_vartheta(Mode::Alpha(q(1, 3)));
}

#[test]
fn evaluation_consistency_zeta_eta() {
    evaluation_matches_vartheta(Mode::ZetaEta(q(-2, 1), q(1, 3)));
    evaluation_matches_vartheta(Mode::ZetaEta(q(-5, 2), q(3, 7)));
}

#[test]
fn row_chain_equals_general_solver() {
    let k = Kerov::symbolic();
    let rows = k.kerov_rows(9).unwrap();
    for (r, kr) in (2..).zip(&rows) {
        assert_eq!(kr, &*k.kerov_k(&Partition::row(r)).unwrap(), "K_{r}");
    }
}

#[test]
fn relaxed_support_adds_nothing() {
    let k = Kerov::symbolic();
    for mu in [p(&[2]), p(&[5]), p(&[2, 2]), p(&[3, 2]), p(&[2, 2, 2])] {
        k.check_support(&mu).unwrap();
    }
}

#[test]
fn solve_report_is_full_rank() {
    let k = Kerov::symbolic();
    let (_, report) = k.kerov_k_report(&p(&[3, 2])).unwrap();
    for blk in &report.blocks {
        assert_eq!(blk.rank, blk.unknowns, "weight {}", blk.weight);
    }
}

#[test]
fn worked_example_for_mu_2() {
    // K_2 = A R_2^2 + B R_4 + C R_3 + D R_2 on the support of (2).
    let k = Kerov::symbolic();
    let k2 = k.kerov_k(&p(&[2])).unwrap();
    assert!(k2.coeff(&p(&[2, 2])).is_zero());
    assert!(k2.coeff(&p(&[4])).is_zero());
    assert_eq!(k2.coeff(&p(&[3])), ab(1, 2, 0));
    assert_eq!(k2.coeff(&p(&[2])), ab(1, 1, 1));
}

#[test]
fn part_one_is_rejected() {
    let k = Kerov::symbolic();
    assert!(matches!(k.kerov_k(&p(&[2, 1])), Err(KerovError::PartOne(_))));
}

fn tie_beta(c: &FieldElem) -> FieldElem {
    c.substitute(&|v| match v {
        Var::Beta => &FieldElem::one() - &FieldElem::alpha(),
        v => FieldElem::var(v),
    })
    .unwrap()
}

#[test]
fn alpha_oracle_agrees() {
    let k = Kerov::symbolic();
    for mu in [p(&[2]), p(&[3]), p(&[4]), p(&[2, 2]), p(&[3, 2])] {
        let pool = default_pool(&mu).unwrap();
        let o = interpolation_oracle_k(&mu, &pool).unwrap();
        assert_eq!(o, k.kerov_k(&mu).unwrap().map(tie_beta), "{mu}");
    }
}

#[test]
fn zeta_eta_oracle_agrees() {
    let k = Kerov::symbolic();
    for mu in [p(&[2]), p(&[3]), p(&[2, 2])] {
        let pool = default_pool(&mu).unwrap();
        assert_eq!(interpolation_oracle_k_zeta_eta(&mu, &pool).unwrap(), *k.kerov_k(&mu).unwrap(), "{mu}");
    }
}

#[test]
fn swapped_zeta_eta_fit_identically() {
    for mu in [p(&[3]), p(&[2, 2]), p(&[4])] {
        let pool = default_pool(&mu).unwrap();
        let (z, e) = (q(-2, 1), q(1, 3));
        let one = fit_at_point(&mu, &Mode::ZetaEta(z.clone(), e.clone()), &pool).unwrap();
        let two = fit_at_point(&mu, &Mode::ZetaEta(e, z), &pool).unwrap();
        assert_eq!(one, two, "{mu}");
    }
}

#[test]
fn grading_reassembles() {
    let k = Kerov::symbolic();
    for r in 2..=9 {
        let kr = k.kerov_k(&Partition::row(r)).unwrap();
        let g = grade_row(&kr, r);
        assert!(g.violations.is_empty(), "K_{r}: {:?}", g.violations);
        assert_eq!(g.reassemble(), *kr, "K_{r}");
    }
    for mu in [p(&[2, 2]), p(&[3, 2]), p(&[2, 2, 2])] {
        let t = kerov_tilde(&k, &mu).unwrap();
        assert_eq!(grade_tilde(&t, &mu).reassemble(), t, "K̃_{mu}");
    }
}

#[test]
fn k4_components() {
    let k = Kerov::symbolic();
    let g = grade_row(&k.kerov_k(&p(&[4])).unwrap(), 4);
    let r = |rho: &[u32], c: i64| RPoly::monomial(p(rho), rat(c));
    assert_eq!(g.component(0, 0), r(&[5], 1));
    assert_eq!(g.component(1, 1), r(&[4], 6).plus(&r(&[2, 2], 1)));
    assert_eq!(g.component(1, 0), r(&[3], 5));
    assert_eq!(g.component(2, 2), r(&[3], 11));
    assert_eq!(to_basis(&g.component(1, 1), Basis::Q), RPoly::monomial(p(&[4]), rat(2)));
}

#[test]
fn component_11_is_half_r_q_r() {
    let k = Kerov::symbolic();
    for r in 2..=9 {
        let g = grade_row(&k.kerov_k(&Partition::row(r)).unwrap(), r);
        let want = RPoly::monomial(Partition::row(r), q(r as i64, 2));
        assert_eq!(to_basis(&g.component(1, 1), Basis::Q), want, "r = {r}");
    }
}

fn random_rpoly(rng: &mut ChaCha8Rng) -> RPoly<Rational> {
    let monos = enumerate_range(0, 10, 2);
    let mut out = RPoly::zero();
    for _ in 0..rng.gen_range(1..6) {
        let rho = monos[rng.gen_range(0..monos.len())].clone();
        out.add_term(rho, q(rng.gen_range(-9..=9), rng.gen_range(1..=5)));
    }
    out
}

#[test]
fn basis_changes_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..50 {
        let x = random_rpoly(&mut rng);
        for basis in [Basis::Q, Basis::C] {
            assert_eq!(from_basis(&to_basis(&x, basis), basis), x);
            assert_eq!(to_basis(&from_basis(&x, basis), basis), x);
        }
    }
}

#[test]
fn q_in_c() {
    // Q_4 = C_4 − C_2²/2.
    let q4 = from_basis(&RPoly::var(4), Basis::Q);
    let in_c = to_basis(&q4, Basis::C);
    assert_eq!(in_c, RPoly::from_terms([(p(&[4]), rat(1)), (p(&[2, 2]), q(-1, 2))]));
}

#[test]
fn published_structure_functions_fit() {
    let k = Kerov::symbolic();
    for name in ["f10", "g10", "f22", "g22"] {
        let (i, j, side, want) = published(name).unwrap();
        let comps = row_components(&k, i, j, side, 2..=9).unwrap();
        let fit = fit_structure_function(&comps, i, j, side, 2..=7, &[8, 9]).unwrap();
        assert_eq!(fit.function, want, "{name}");
    }
    let (_, _, _, f22) = published("f22").unwrap();
    let want = RPoly::from_terms([(p(&[4]), rat(35)), (p(&[2, 2]), rat(10))]);
    assert_eq!(predict(&f22, FitSide::R, 5, 2, 2), want);
}

#[test]
fn degree_four_functions_need_more_rows() {
    let k = Kerov::symbolic();
    for name in ["f33", "g33", "f21", "g21"] {
        let (i, j, side, want) = published(name).unwrap();
        let comps = row_components(&k, i, j, side, 2..=12).unwrap();
        for r in 2..=12 {
            assert_eq!(predict(&want, side, r, i, j), comps[&r], "{name} at r = {r}");
        }
        let short = fit_structure_function(&comps, i, j, side, 2..=9, &[]);
        assert!(matches!(short, Err(KerovError::RankDeficient(ref m)) if m.contains("m1111")), "{name}");
        assert_eq!(fit_structure_function(&comps, i, j, side, 2..=12, &[]).unwrap().function, want, "{name}");
    }
}

#[test]
fn theorem_10_function() {
    let k = Kerov::symbolic();
    let (i, j, side, want) = published("f20").unwrap();
    let comps = row_components(&k, i, j, side, 3..=15).unwrap();
    for r in 3..=15 {
        assert_eq!(predict(&want, side, r, i, j), comps[&r], "r = {r}");
    }
    assert_eq!(fit_structure_function(&comps, i, j, side, 3..=15, &[]).unwrap().function, want);
}

#[test]
fn closed_forms() {
    let k = Kerov::symbolic();
    for r in 5..=9 {
        let g = grade_row(&k.kerov_k(&Partition::row(r)).unwrap(), r);
        assert_eq!(g.component(3, 3), closed_form_33(r), "(3,3), r = {r}");
        assert_eq!(g.component(2, 2), closed_form_22(r), "(2,2), r = {r}");
    }
    let g5 = grade_row(&k.kerov_k(&p(&[5])).unwrap(), 5);
    let c = to_basis(&g5.component(2, 2), Basis::C);
    assert!(c.terms().any(|(_, v)| v < &rat(0)), "{c:?}");
}

#[test]
fn all_claims_pass() {
    let k = Kerov::symbolic();
    for res in verify(&k, &VerifyConfig::default()).unwrap() {
        assert_eq!(res.status, ClaimStatus::Pass, "{}: {:?}", res.claim_id, res.witness);
    }
}

#[test]
fn unknown_claim_is_an_error() {
    let k = Kerov::symbolic();
    let cfg = VerifyConfig { claims: Some(vec!["thm99".into()]), ..VerifyConfig::default() };
    assert!(matches!(verify(&k, &cfg), Err(KerovError::UnknownClaim(_))));
}

#[test]
fn verify_reports_a_falsified_row() {
    // Theorem 7 fails on a solver whose α is replaced by 2α.
    let k = Kerov::new(&FieldElem::alpha() * &int(2), FieldElem::beta(), |c| c.clone());
    let cfg = VerifyConfig { r_max: 4, claims: Some(vec!["thm7".into()]), ..VerifyConfig::default() };
    let res = verify(&k, &cfg).unwrap();
    assert_eq!(res[0].status, ClaimStatus::Fail);
    assert!(res[0].witness.is_some());
}

fn cm(nu: &[u32], b: u32) -> ContentMonomial {
    ContentMonomial { nu: p(nu), b }
}

#[test]
fn content_expansions() {
    let f2 = content_fit(&p(&[2]), &content_pool(&p(&[2])).unwrap()).unwrap();
    assert_eq!(f2.render(), "2*a*p1");
    let f3 = content_fit(&p(&[3]), &content_pool(&p(&[3])).unwrap()).unwrap();
    assert_eq!(f3.render(), "3*a^2*p2 + 3*a*b*p1 - 3*a*C(n,2)");
    let f4 = content_fit(&p(&[4]), &content_pool(&p(&[4])).unwrap()).unwrap();
    assert_eq!(f4.coeff(&cm(&[3], 0)), ab(4, 3, 0));
    assert_eq!(f4.coeff(&cm(&[2], 0)), ab(12, 2, 1));
    assert_eq!(f4.coeff(&cm(&[1], 0)), &ab(8, 1, 2) + &ab(12, 2, 0));
    assert_eq!(f4.coeff(&cm(&[1], 1)), ab(-8, 2, 0));
    assert_eq!(f4.coeff(&cm(&[], 2)), ab(-8, 1, 1));
    assert_eq!(f4.terms.len(), 5);
    let f22 = content_fit(&p(&[2, 2]), &content_pool(&p(&[2, 2])).unwrap()).unwrap();
    assert_eq!(f22.coeff(&cm(&[2], 0)), ab(-12, 2, 0));
    assert_eq!(f22.coeff(&cm(&[1, 1], 0)), ab(4, 2, 0));
    assert_eq!(f22.coeff(&cm(&[1], 0)), ab(-8, 1, 1));
    assert_eq!(f22.coeff(&cm(&[], 2)), ab(8, 1, 0));
    for f in [&f2, &f3, &f4, &f22] {
        assert!(f.is_integral());
    }
}

#[test]
fn one_row_value_of_vartheta_22() {
    // J_(n) = n! α^n g_n gives ϑ^{(4)}_{22} = z_22 · 4! α^2 / z_22 = 24 α².
    let alpha = rat(2);
    let mut tower = ThetaTower::new(Mode::Alpha(alpha.clone()));
    let v = tower.vartheta(&p(&[4]), &p(&[2, 2])).unwrap();
    assert_eq!(v, rat(24) * &alpha * &alpha);
}

#[test]
fn json_and_csv_round_trip() {
    let k = Kerov::symbolic();
    let mu = p(&[3, 2]);
    let k32 = k.kerov_k(&mu).unwrap();
    let doc = PolyDoc::new(&mu, "alpha", Basis::R, &k32);
    let text = serde_json::to_string(&doc).unwrap();
    let back: PolyDoc = serde_json::from_str(&text).unwrap();
    assert_eq!(back.poly().unwrap(), *k32);
    let csv = render_csv(&k.kerov_k(&p(&[2])).unwrap());
    assert_eq!(csv.lines().next(), Some("rho,coef"));
    assert_eq!(csv.lines().count(), 3);
    assert_eq!(render_csv(&RPoly::zero()), "rho,coef\n");
}
