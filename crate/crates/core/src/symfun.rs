//! Symmetric functions of signed alphabets, real multiples of alphabets and
//! Lagrange involution, together with the identity suites built on them.

use serde::Serialize;

use crate::exact::rational::{binomial_int, Rational};
use crate::exact::scalar::Scalar;
use crate::exact::series::{mul_coeffs, TruncSeries};
use crate::exact::ExactError;
use crate::partitions::{enumerate, Partition};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SymError {
    #[error("formulas for {kind}_{n}(xA) disagree")]
    CrossCheck { kind: &'static str, n: usize },
    #[error(transparent)]
    Exact(#[from] ExactError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    H,
    E,
    P,
}

/// A formal difference `plus − minus` of two finite multisets.
#[derive(Clone, Debug, PartialEq)]
pub struct SignedAlphabet<S> {
    plus: Vec<S>,
    minus: Vec<S>,
}

/// Generalized binomial `x(x−1)…(x−k+1)/k!` with a field-valued top.
pub fn binom_s<S: Scalar>(x: &S, k: usize) -> S {
    let mut acc = S::one();
    for i in 0..k {
        acc = acc.times(&x.minus(&S::from_int(i as i64)));
    }
    let kf = crate::exact::rational::factorial(k as u64);
    acc.times(&S::from_rational(&Rational::new(1.into(), kf)))
}

fn recip_z<S: Scalar>(rho: &Partition) -> S {
    S::from_rational(&Rational::new(1.into(), rho.stats().z))
}

fn int_s<S: Scalar>(n: &num_bigint::BigInt) -> S {
    S::from_rational(&Rational::from_integer(n.clone()))
}

/// `F^m` truncated at degree `n`, for `F` with unit constant term and any integer `m`.
pub fn series_pow<S: Scalar>(f: &[S], m: i64, n: usize) -> Result<Vec<S>, ExactError> {
    let base: Vec<S> = if m < 0 {
        TruncSeries::power(f[..=n.min(f.len() - 1)].to_vec())
            .reciprocal()?
            .into_coeffs()
    } else {
        f.to_vec()
    };
    let mut base = base;
    base.resize(n + 1, S::zero());
    let mut acc = vec![S::zero(); n + 1];
    acc[0] = S::one();
    for _ in 0..m.unsigned_abs() {
        acc = mul_coeffs(&acc, &base, n);
    }
    Ok(acc)
}

impl<S: Scalar> SignedAlphabet<S> {
    pub fn new(plus: Vec<S>, minus: Vec<S>) -> Self {
        SignedAlphabet { plus, minus }
    }

    pub fn positive(plus: Vec<S>) -> Self {
        SignedAlphabet { plus, minus: Vec::new() }
    }

    pub fn plus(&self) -> &[S] {
        &self.plus
    }

    pub fn minus(&self) -> &[S] {
        &self.minus
    }

    pub fn cardinality(&self) -> i64 {
        self.plus.len() as i64 - self.minus.len() as i64
    }

    /// Coefficients `h_0..h_n` of `H_t = Π(1−ta)^{-1} Π(1−tb)`.
    pub fn h_series(&self, n: usize) -> Vec<S> {
        let mut acc = vec![S::zero(); n + 1];
        acc[0] = S::one();
        for a in &self.plus {
            // multiply by 1/(1−ta): running sum with powers of a
            for k in 1..=n {
                let prev = acc[k - 1].times(a);
                acc[k] = acc[k].plus(&prev);
            }
        }
        for b in &self.minus {
            for k in (1..=n).rev() {
                let t = acc[k - 1].times(b);
                acc[k] = acc[k].minus(&t);
            }
        }
        acc
    }

    /// Coefficients `e_0..e_n` of `E_t = Π(1+ta) / Π(1+tb)`.
    pub fn e_series(&self, n: usize) -> Vec<S> {
        let mut acc = vec![S::zero(); n + 1];
        acc[0] = S::one();
        for a in &self.plus {
            for k in (1..=n).rev() {
                let t = acc[k - 1].times(a);
                acc[k] = acc[k].plus(&t);
            }
        }
        for b in &self.minus {
            for k in 1..=n {
                let prev = acc[k - 1].times(b);
                acc[k] = acc[k].minus(&prev);
            }
        }
        acc
    }

    pub fn p(&self, n: usize) -> S {
        if n == 0 {
            return S::from_int(self.cardinality());
        }
        let sum = |v: &[S]| v.iter().fold(S::zero(), |acc, a| acc.plus(&a.power(n as u32)));
        sum(&self.plus).minus(&sum(&self.minus))
    }

    pub fn h(&self, n: usize) -> S {
        self.h_series(n).pop().unwrap()
    }

    pub fn e(&self, n: usize) -> S {
        self.e_series(n).pop().unwrap()
    }

    pub fn e1(&self) -> S {
        self.p(1)
    }

    pub fn hep(&self, n: usize) -> (S, S, S) {
        (self.h(n), self.e(n), self.p(n))
    }

    pub fn get(&self, kind: Kind, n: usize) -> S {
        match kind {
            Kind::H => self.h(n),
            Kind::E => self.e(n),
            Kind::P => self.p(n),
        }
    }

    fn product_over(values: &[S], rho: &Partition) -> S {
        rho.parts()
            .iter()
            .fold(S::one(), |acc, &r| acc.times(&values[r as usize]))
    }

    fn p_values(&self, n: usize) -> Vec<S> {
        (0..=n).map(|k| self.p(k)).collect()
    }

    /// `h_n(xA)` or `e_n(xA)` from the power-sum expansion, cross-checked
    /// against the binomial expansions in the `h` and `e` bases.
    pub fn scaled(&self, x: &S, n: usize, kind: Kind) -> Result<S, SymError> {
        let via_p = self.scaled_power_sum(x, n, kind);
        let hs = self.h_series(n);
        let es = self.e_series(n);
        let (same, other) = match kind {
            Kind::H => (&hs, &es),
            Kind::E => (&es, &hs),
            Kind::P => return Ok(x.times(&self.p(n))),
        };
        let mut direct = S::zero();
        let mut dual = S::zero();
        let negx = x.negated();
        for rho in enumerate(n as u32, 1) {
            let l = rho.len();
            let u: S = int_s(&rho.stats().u);
            direct = direct.plus(&binom_s(x, l).times(&u).times(&Self::product_over(same, &rho)));
            dual = dual.plus(&binom_s(&negx, l).times(&u).times(&Self::product_over(other, &rho)));
        }
        if n % 2 == 1 {
            dual = dual.negated();
        }
        let name = if kind == Kind::H { "h" } else { "e" };
        if direct != via_p || dual != via_p {
            return Err(SymError::CrossCheck { kind: name, n });
        }
        Ok(via_p)
    }

    /// The power-sum formula alone.
    pub fn scaled_power_sum(&self, x: &S, n: usize, kind: Kind) -> S {
        let ps = self.p_values(n);
        let mut acc = S::zero();
        for rho in enumerate(n as u32, 1) {
            let l = rho.len();
            let mut t = recip_z::<S>(&rho).times(&x.power(l as u32)).times(&Self::product_over(&ps, &rho));
            if kind == Kind::E && (n - l) % 2 == 1 {
                t = t.negated();
            }
            acc = acc.plus(&t);
        }
        acc
    }

    /// `h*_0..h*_n` from the compositional inverse of `u = tH_t(A)`.
    pub fn h_star_series(&self, n: usize) -> Result<Vec<S>, ExactError> {
        let u = TruncSeries::new(1, self.h_series(n))?;
        Ok(u.comp_inverse()?.into_coeffs())
    }

    /// `h*_n`, `e*_n` or `p*_n`.
    pub fn star(&self, n: usize, kind: Kind) -> Result<S, ExactError> {
        Ok(self.star_values(n, kind)?.pop().unwrap())
    }

    /// All values of one starred family up to degree `n`.
    pub fn star_values(&self, n: usize, kind: Kind) -> Result<Vec<S>, ExactError> {
        let hs = self.h_star_series(n)?;
        match kind {
            Kind::H => Ok(hs),
            Kind::E => {
                let alternating: Vec<S> = hs
                    .iter()
                    .enumerate()
                    .map(|(k, c)| if k % 2 == 1 { c.negated() } else { c.clone() })
                    .collect();
                Ok(TruncSeries::power(alternating).reciprocal()?.into_coeffs())
            }
            Kind::P => Ok(power_sums_from_h(&hs, self.cardinality())),
        }
    }
}

/// Newton: `n h_n = Σ_{k=1}^n p_k h_{n−k}`, solved for `p`.
fn power_sums_from_h<S: Scalar>(h: &[S], card: i64) -> Vec<S> {
    let n = h.len() - 1;
    let mut p = vec![S::from_int(card)];
    for m in 1..=n {
        let mut acc = h[m].scaled(m as i64);
        for k in 1..m {
            acc = acc.minus(&p[k].times(&h[m - k]));
        }
        p.push(acc);
    }
    p
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// One line of an identity report.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IdentityCheck {
    pub identity_id: String,
    pub n: usize,
    pub pass: bool,
    pub lhs: String,
    pub rhs: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

impl IdentityCheck {
    pub fn compare<S: Scalar + std::fmt::Display>(id: &str, n: usize, lhs: &[S], rhs: &S) -> Self {
        let pass = lhs.iter().all(|l| l == rhs);
        let lhs_text = lhs.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" | ");
        IdentityCheck {
            identity_id: id.to_string(),
            n,
            pass,
            lhs: lhs_text,
            rhs: rhs.to_string(),
            status: if pass { Status::Pass } else { Status::Fail },
            reason: None,
        }
    }

    pub fn skipped(id: &str, n: usize, reason: &str) -> Self {
        IdentityCheck {
            identity_id: id.to_string(),
            n,
            pass: false,
            lhs: String::new(),
            rhs: String::new(),
            status: Status::Skipped,
            reason: Some(reason.to_string()),
        }
    }
}

/// Identity families: each left-hand side is a sum over `k` that should not
/// depend on `z`; it is evaluated at `z` and at `z + 1`.
pub fn check_identities<S>(a: &SignedAlphabet<S>, z: &S, n: usize) -> Result<Vec<IdentityCheck>, SymError>
where
    S: Scalar + std::fmt::Display,
{
    let zs = [z.clone(), z.plus(&S::one())];
    let es = a.e_series(n);
    let estar = a.star_values(n, Kind::E)?;
    let sign = if n % 2 == 1 { S::from_int(-1) } else { S::one() };
    let parts = enumerate(n as u32, 1);

    let weighted = |vals: &[S], use_w: bool| -> S {
        let mut acc = S::zero();
        for rho in &parts {
            let st = rho.stats();
            let c: S = if use_w {
                if rho.is_empty() {
                    continue;
                }
                S::from_rational(&(st.w.clone() * Rational::from_integer(st.u.clone()) / Rational::from_integer((rho.len() as i64).into())))
            } else {
                int_s(&(st.v.clone() * st.u.clone()))
            };
            if c.is_zero() {
                continue;
            }
            let prod = rho.parts().iter().fold(S::one(), |acc, &r| acc.times(&vals[r as usize]));
            acc = acc.plus(&c.times(&prod));
        }
        acc.times(&sign)
    };

    let e1_zero = a.e1().is_zero();
    let h_mult = |x: &S, m: usize| a.scaled(x, m, Kind::H);
    let mut out = Vec::new();

    // First family.
    let mut lhs: [Vec<S>; 4] = Default::default();
    let mut singular = false;
    for z in &zs {
        let mut sums = [S::zero(), S::zero(), S::zero(), S::zero()];
        for k in 0..=n {
            let zk = z.plus(&S::from_int(k as i64));
            let left = h_mult(&zk.negated(), k)?;
            let t1 = left.times(&h_mult(&zk.minus(&S::one()), n - k)?);
            let t0 = left.times(&h_mult(&zk, n - k)?);
            let t2 = left.times(&h_mult(&zk.plus(&S::one()), n - k)?);
            match (z.over(&zk), S::one().over(&zk)) {
                (Some(f1), Some(f2)) => {
                    sums[0] = sums[0].plus(&f1.times(&t1));
                    sums[1] = sums[1].plus(&f2.times(&t0));
                }
                _ => singular = true,
            }
            sums[2] = sums[2].plus(&t2);
            sums[3] = sums[3].plus(&t0);
        }
        for (i, s) in sums.into_iter().enumerate() {
            lhs[i].push(s);
        }
    }
    let rhs1 = es[n].times(&sign);
    if singular {
        out.push(IdentityCheck::skipped("direct-1", n, "z + k vanishes for some k"));
        out.push(IdentityCheck::skipped("direct-2", n, "z + k vanishes for some k"));
    } else {
        out.push(IdentityCheck::compare("direct-1", n, &lhs[0], &rhs1));
        if n == 0 {
            out.push(IdentityCheck::skipped("direct-2", n, "stated for n >= 1"));
        } else {
            out.push(IdentityCheck::compare("direct-2", n, &lhs[1], &S::zero()));
        }
    }
    out.push(IdentityCheck::compare("direct-3", n, &lhs[2], &weighted(&es, false)));
    if n == 0 {
        out.push(IdentityCheck::skipped("direct-4", n, "stated for n >= 1"));
    } else if !e1_zero {
        out.push(IdentityCheck::skipped("direct-4", n, "requires e_1(A) = 0"));
    } else {
        out.push(IdentityCheck::compare("direct-4", n, &lhs[3], &weighted(&es, true)));
    }

    // Second family, obtained through Lagrange involution.
    let mut lhs: [Vec<S>; 4] = Default::default();
    let mut singular = [false; 4];
    for z in &zs {
        let mut sums = [S::zero(), S::zero(), S::zero(), S::zero()];
        let nn = S::from_int(n as i64);
        for k in 0..=n {
            let kk = S::from_int(k as i64);
            let zk = z.plus(&kk);
            let left = h_mult(z, k)?;
            let t_n1 = left.times(&h_mult(&z.plus(&nn).minus(&S::one()).negated(), n - k)?);
            let t_n = left.times(&h_mult(&z.plus(&nn).negated(), n - k)?);
            let t_np1 = left.times(&h_mult(&z.plus(&nn).plus(&S::one()).negated(), n - k)?);
            let coeffs = [
                zk.minus(&S::one()).over(&z.plus(&nn).minus(&S::one())),
                Some(zk.clone()),
                zk.times(&zk.plus(&S::one())).over(&z.times(&z.plus(&nn).plus(&S::one()))),
                zk.times(&zk).over(&z.times(&z.plus(&nn))),
            ];
            let terms = [&t_n1, &t_n, &t_np1, &t_n];
            for i in 0..4 {
                match &coeffs[i] {
                    Some(c) => sums[i] = sums[i].plus(&c.times(terms[i])),
                    None => singular[i] = true,
                }
            }
        }
        for (i, s) in sums.into_iter().enumerate() {
            lhs[i].push(s);
        }
    }
    let rhs_dual = [
        Some(estar[n].times(&sign)),
        (n >= 1).then(S::zero),
        Some(weighted(&estar, false)),
        (n >= 1).then(|| weighted(&estar, true)),
    ];
    for i in 0..4 {
        let id = format!("dual-{}", i + 1);
        if singular[i] {
            out.push(IdentityCheck::skipped(&id, n, "a denominator in z vanishes"));
        } else if rhs_dual[i].is_none() {
            out.push(IdentityCheck::skipped(&id, n, "stated for n >= 1"));
        } else if i == 3 && !e1_zero {
            out.push(IdentityCheck::skipped(&id, n, "requires e_1(A) = 0"));
        } else {
            out.push(IdentityCheck::compare(&id, n, &lhs[i], rhs_dual[i].as_ref().unwrap()));
        }
    }
    Ok(out)
}

/// The three `h·e·e` convolution identities.
pub fn prop9_check<S>(a: &SignedAlphabet<S>, n: usize) -> Vec<IdentityCheck>
where
    S: Scalar + std::fmt::Display,
{
    let hs = a.h_series(n);
    let es = a.e_series(n);
    let ps: Vec<S> = (0..=n).map(|k| a.p(k)).collect();
    let mut lin = S::zero();
    let mut quad = S::zero();
    for i in 0..=n {
        for j in 0..=n - i {
            let k = n - i - j;
            let t = hs[i].times(&es[j]).times(&es[k]);
            let t = if i % 2 == 1 { t.negated() } else { t };
            lin = lin.plus(&t.scaled(i as i64));
            quad = quad.plus(&t.scaled((i * i) as i64));
        }
    }
    let nn = n as i64;
    let mut via_p = S::zero();
    let mut via_h = S::zero();
    for rho in enumerate(n as u32, 1) {
        let st = rho.stats();
        let p2: i64 = rho.parts().iter().map(|&r| (r as i64) * (r as i64)).sum();
        let sign = if (n - rho.len()) % 2 == 1 { -1 } else { 1 };
        let pprod = rho.parts().iter().fold(S::one(), |acc, &r| acc.times(&ps[r as usize]));
        let hprod = rho.parts().iter().fold(S::one(), |acc, &r| acc.times(&hs[r as usize]));
        via_p = via_p.plus(&recip_z::<S>(&rho).times(&pprod).scaled(sign * (nn * nn - 2 * p2)));
        via_h = via_h.plus(&int_s::<S>(&st.u).times(&hprod).scaled(-sign * p2));
    }
    vec![
        IdentityCheck::compare("hee-linear", n, &[lin], &es[n].scaled(-nn)),
        IdentityCheck::compare("hee-quadratic-p", n, std::slice::from_ref(&quad), &via_p),
        IdentityCheck::compare("hee-quadratic-h", n, &[quad], &via_h),
    ]
}

/// `k/(n+k) · [t^n] H_t^{−n−k}`, the Lagrange-formula prediction for `[u^n] H*_u^k`.
pub fn lagrange_prediction<S: Scalar>(a: &SignedAlphabet<S>, n: usize, k: usize) -> Result<S, ExactError> {
    let h = a.h_series(n);
    let pw = series_pow(&h, -((n + k) as i64), n)?;
    let f = Rational::new((k as i64).into(), ((n + k) as i64).into());
    Ok(pw[n].times(&S::from_rational(&f)))
}

/// Integer binomial used by callers that only need `C(x, k)` for integer `x`.
pub fn binom_int<S: Scalar>(x: i64, k: usize) -> S {
    S::from_rational(&binomial_int(x, k as u64))
}
