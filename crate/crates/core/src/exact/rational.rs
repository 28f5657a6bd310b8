//! Rational helpers on top of `num_rational::BigRational`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub type Rational = num_rational::BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// `C(n, k)` for nonnegative integers; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Generalized binomial `x(x-1)...(x-k+1)/k!` for an integer top.
pub fn binomial_int(x: i64, k: u64) -> Rational {
    let mut acc = Rational::one();
    for i in 0..k as i64 {
        acc *= rat(x - i);
    }
    acc / Rational::from_integer(factorial(k))
}

/// Unsigned Stirling number of the first kind `|s(n, k)|`.
pub fn stirling1_unsigned(n: u64, k: u64) -> BigInt {
    let n = n as usize;
    let k = k as usize;
    if k > n {
        return BigInt::zero();
    }
    let mut row = vec![BigInt::zero(); n + 1];
    row[0] = BigInt::one();
    for m in 1..=n {
        let mut next = vec![BigInt::zero(); n + 1];
        for j in 1..=m {
            next[j] = &row[j - 1] + BigInt::from(m - 1) * &row[j];
        }
        row = next;
    }
    row[k].clone()
}
