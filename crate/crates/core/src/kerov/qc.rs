//! The bases `Q_n` and `C_n` of the free-cumulant algebra.
//!
//! With a formal alphabet `A` such that `h_n(A) = (1−n) R_n`, one sets
//! `Q_n = −p_n(A)/n` and `C_n = (−1)^n e_n(A)`. All conversions are Newton
//! recursions between `h`, `p` and `e`; the products over `ρ` of
//! `𝓡_ρ = Π ((i−1)R_i)^{m_i}/m_i!` give the closed expansions
//! `Q_n = Σ (l−1)! 𝓡_ρ` and `C_n = Σ l! 𝓡_ρ`.

use serde::{Deserialize, Serialize};

use crate::exact::rational::{factorial, Rational};
use crate::exact::scalar::Scalar;
use crate::partitions::{enumerate, Partition};

use super::rpoly::RPoly;

/// Generators named by the keys of an [`RPoly`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Basis {
    R,
    Q,
    C,
}

impl Basis {
    pub fn symbol(self) -> &'static str {
        match self {
            Basis::R => "R",
            Basis::Q => "Q",
            Basis::C => "C",
        }
    }
}

fn s<S: Scalar>(n: i64) -> S {
    S::from_int(n)
}

fn frac<S: Scalar>(n: i64, d: i64) -> S {
    S::from_rational(&Rational::new(n.into(), d.into()))
}

/// `h_1..h_n` of the alphabet in terms of the `R_k`.
fn h_in_r<S: Scalar>(n: u32) -> Vec<RPoly<S>> {
    (0..=n).map(|k| if k == 0 { RPoly::one() } else { RPoly::var(k).scale(&s(1 - k as i64)) }).collect()
}

/// `p_k` from `h` by `k h_k = Σ_{i=1}^{k} p_i h_{k−i}`.
fn p_from_h<S: Scalar>(h: &[RPoly<S>]) -> Vec<RPoly<S>> {
    let mut p = vec![RPoly::zero()];
    for k in 1..h.len() {
        let mut acc = h[k].scale(&s(k as i64));
        for i in 1..k {
            acc = acc.minus(&p[i].times(&h[k - i]));
        }
        p.push(acc);
    }
    p
}

/// `h_k` from `p` by the same recursion.
fn h_from_p<S: Scalar>(p: &[RPoly<S>]) -> Vec<RPoly<S>> {
    let mut h = vec![RPoly::one()];
    for k in 1..p.len() {
        let mut acc = RPoly::zero();
        for i in 1..=k {
            acc = acc.plus(&p[i].times(&h[k - i]));
        }
        h.push(acc.scale(&frac(1, k as i64)));
    }
    h
}

/// `e_k` from `h` by `Σ_{i=0}^{k} (−1)^i e_i h_{k−i} = 0`, and back; the
/// recursion is symmetric under exchanging `e` and `h`.
fn dual<S: Scalar>(h: &[RPoly<S>]) -> Vec<RPoly<S>> {
    let mut e = vec![RPoly::one()];
    for k in 1..h.len() {
        let mut acc = RPoly::zero();
        for i in 1..=k {
            let t = e[k - i].times(&h[i]);
            acc = if i % 2 == 1 { acc.plus(&t) } else { acc.minus(&t) };
        }
        e.push(acc);
    }
    e
}

/// `Q_1, …, Q_n` (index 0 unused) as polynomials in the `R_k`.
pub fn q_in_r<S: Scalar>(n: u32) -> Vec<RPoly<S>> {
    let p = p_from_h(&h_in_r::<S>(n));
    p.iter().enumerate().map(|(k, pk)| if k == 0 { RPoly::zero() } else { pk.scale(&frac(-1, k as i64)) }).collect()
}

/// `C_1, …, C_n` (index 0 unused) as polynomials in the `R_k`.
pub fn c_in_r<S: Scalar>(n: u32) -> Vec<RPoly<S>> {
    let e = dual(&h_in_r::<S>(n));
    e.iter().enumerate().map(|(k, ek)| if k % 2 == 1 { ek.negated() } else { ek.clone() }).collect()
}

/// `R_k` for `k ≤ n` in terms of the `Q_k`; key `ρ` means `Q_ρ`. `Q_1 = 0`.
pub fn r_in_q<S: Scalar>(n: u32) -> Vec<RPoly<S>> {
    let p: Vec<RPoly<S>> =
        (0..=n).map(|k| if k <= 1 { RPoly::zero() } else { RPoly::var(k).scale(&s(-(k as i64))) }).collect();
    h_to_r(h_from_p(&p))
}

/// `R_k` for `k ≤ n` in terms of the `C_k`, with `C_1 = 0`.
pub fn r_in_c<S: Scalar>(n: u32) -> Vec<RPoly<S>> {
    let e: Vec<RPoly<S>> = (0..=n)
        .map(|k| match k {
            0 => RPoly::one(),
            1 => RPoly::zero(),
            _ if k % 2 == 1 => RPoly::var(k).negated(),
            _ => RPoly::var(k),
        })
        .collect();
    h_to_r(dual(&e))
}

fn h_to_r<S: Scalar>(h: Vec<RPoly<S>>) -> Vec<RPoly<S>> {
    h.into_iter()
        .enumerate()
        .map(|(k, hk)| if k <= 1 { RPoly::zero() } else { hk.scale(&frac(1, 1 - k as i64)) })
        .collect()
}

/// Rewrites an `R`-polynomial in the target basis.
pub fn to_basis<S: Scalar>(poly: &RPoly<S>, target: Basis) -> RPoly<S> {
    let n = poly.max_index().unwrap_or(0);
    let table = match target {
        Basis::R => return poly.clone(),
        Basis::Q => r_in_q::<S>(n),
        Basis::C => r_in_c::<S>(n),
    };
    poly.compose(|k| table[k as usize].clone())
}

/// Rewrites a polynomial in `source` generators back in the `R_k`.
pub fn from_basis<S: Scalar>(poly: &RPoly<S>, source: Basis) -> RPoly<S> {
    let n = poly.max_index().unwrap_or(0);
    let table = match source {
        Basis::R => return poly.clone(),
        Basis::Q => q_in_r::<S>(n),
        Basis::C => c_in_r::<S>(n),
    };
    poly.compose(|k| table[k as usize].clone())
}

/// `𝓡_ρ = Π ((i−1) R_i)^{m_i} / m_i!`.
pub fn script_r(rho: &Partition) -> RPoly<Rational> {
    let st = rho.stats();
    let mut c = Rational::from_integer(st.v);
    for &m in rho.multiplicities().values() {
        c /= Rational::from_integer(factorial(m as u64));
    }
    RPoly::monomial(rho.clone(), c)
}

/// `Σ_{|ρ|=n, parts ≥ 2} weight(l(ρ)) 𝓡_ρ`.
pub fn script_sum(n: u32, weight: impl Fn(usize) -> Rational) -> RPoly<Rational> {
    enumerate(n, 2).iter().fold(RPoly::zero(), |acc, rho| acc.plus(&script_r(rho).scale(&weight(rho.len()))))
}
