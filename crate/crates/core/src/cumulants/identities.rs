//! Four mixed moment/free-cumulant identities, checked on a given diagram.

use std::fmt::Display;

use crate::exact::rational::{binomial_int, Rational};
use crate::exact::scalar::Scalar;
use crate::jack::Mode;
use crate::partitions::{enumerate, Partition};
use crate::symfun::IdentityCheck;

use super::moments::{cumulants_from_moments, moment_series, CumulantVector};
use super::CumulantError;

fn rat<S: Scalar>(r: Rational) -> S {
    S::from_rational(&r)
}

/// `Σ_{|μ|=m} C(−k, l(μ)) u_μ R_μ`.
fn inner<S: Scalar>(r: &CumulantVector<S>, k: usize, m: usize) -> S {
    enumerate(m as u32, 1).iter().fold(S::zero(), |acc, mu| {
        let c = binomial_int(-(k as i64), mu.len() as u64) * Rational::from_integer(mu.stats().u);
        acc.plus(&rat::<S>(c).times(&r.product(mu)))
    })
}

fn rho_sum<S: Scalar>(r: &CumulantVector<S>, w: usize, coef: impl Fn(&Partition) -> Rational) -> S {
    enumerate(w as u32, 1)
        .iter()
        .fold(S::zero(), |acc, rho| acc.plus(&rat::<S>(coef(rho)).times(&r.product(rho))))
}

/// Checks the identities `5.7`–`5.10` for `2 ≤ n ≤ n_max`.
pub fn identity_suite<S>(lambda: &Partition, n_max: usize, mode: &Mode<S>) -> Result<Vec<IdentityCheck>, CumulantError>
where
    S: Scalar + Display,
{
    let m = moment_series(lambda, n_max, mode)?;
    let (_, r) = cumulants_from_moments(&m)?;
    let mut out = Vec::new();
    for n in 2..=n_max {
        let sum = |shift: usize, weighted: bool, from: usize| {
            (from..=n).fold(S::zero(), |acc, k| {
                let mk = m.get(k - shift);
                let w = if weighted { mk.scaled(k as i64 - 1) } else { mk };
                acc.plus(&w.times(&inner(&r, k, n - k)))
            })
        };
        out.push(IdentityCheck::compare("5.7", n, &[sum(0, false, 1)], &r.get(n)));
        out.push(IdentityCheck::compare("5.8", n, &[sum(1, false, 1)], &S::zero()));
        let rhs9 = rho_sum(&r, n - 2, |rho| {
            let st = rho.stats();
            Rational::from_integer(st.v * st.u)
        });
        out.push(IdentityCheck::compare("5.9", n, &[sum(2, true, 2)], &rhs9));
        let rhs10 = rho_sum(&r, n - 1, |rho| {
            let st = rho.stats();
            st.w * Rational::from_integer(st.u) / Rational::from_integer((rho.len() as i64).into())
        });
        out.push(IdentityCheck::compare("5.10", n, &[sum(1, true, 2)], &rhs10));
    }
    Ok(out)
}
