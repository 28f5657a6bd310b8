//! Binomial conversion formulas among moments, Boolean and free cumulants.

use crate::exact::rational::{binomial_int, Rational};
use crate::exact::scalar::Scalar;
use crate::partitions::{enumerate, Partition};

use super::moments::{CumKind, CumulantVector};

fn u_of<S: Scalar>(mu: &Partition) -> S {
    S::from_rational(&Rational::from_integer(mu.stats().u))
}

fn binom<S: Scalar>(x: i64, k: usize) -> S {
    S::from_rational(&binomial_int(x, k as u64))
}

/// `Σ_{|μ|=n} coef(l(μ)) u_μ X_μ`.
fn weighted_sum<S: Scalar>(src: &CumulantVector<S>, n: usize, coef: impl Fn(usize) -> S) -> S {
    enumerate(n as u32, 1).iter().fold(S::zero(), |acc, mu| {
        let c = coef(mu.len());
        if c.is_zero() {
            return acc;
        }
        acc.plus(&c.times(&u_of::<S>(mu)).times(&src.product(mu)))
    })
}

fn sign<S: Scalar>(l: usize) -> S {
    if l % 2 == 1 {
        S::from_int(-1)
    } else {
        S::one()
    }
}

/// One value `Y_n` of the target family from the complete source vector.
pub fn convert_one<S: Scalar>(src: &CumulantVector<S>, target: CumKind, n: usize) -> S {
    use CumKind::*;
    if src.kind == target {
        return src.get(n);
    }
    if n == 1 {
        // the first moment and both first cumulants coincide
        return src.get(1);
    }
    let nn = n as i64;
    let over = |x: S, d: i64| x.times(&S::from_rational(&Rational::new(1.into(), d.into())));
    match (src.kind, target) {
        (M, B) => weighted_sum(src, n, |l| sign::<S>(l)).negated(),
        (R, B) => over(weighted_sum(src, n, |l| binom(nn - 1, l)), nn - 1),
        (B, M) => weighted_sum(src, n, |_| S::one()),
        (R, M) => over(weighted_sum(src, n, |l| binom(nn + 1, l)), nn + 1),
        (B, R) => over(weighted_sum(src, n, |l| sign::<S>(l).times(&binom(nn - 1, l))), nn - 1).negated(),
        (M, R) => over(weighted_sum(src, n, |l| sign::<S>(l).times(&binom(nn + l as i64 - 2, l))), nn - 1).negated(),
        _ => unreachable!(),
    }
}

/// Converts `X_1..X_{n_max}` into `Y_1..Y_{n_max}`.
pub fn convert<S: Scalar>(src: &CumulantVector<S>, target: CumKind, n_max: usize) -> CumulantVector<S> {
    let values = (1..=n_max.min(src.order())).map(|n| convert_one(src, target, n)).collect();
    CumulantVector::new(target, values)
}
