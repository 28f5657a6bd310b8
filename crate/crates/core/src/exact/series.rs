//! Truncated power series `t^offset · (c_0 + c_1 t + … + c_N t^N)`.

use super::scalar::Scalar;
use super::ExactError;

#[derive(Clone, Debug, PartialEq)]
pub struct TruncSeries<S> {
    offset: i8,
    coeffs: Vec<S>,
}

impl<S: Scalar> TruncSeries<S> {
    pub fn new(offset: i8, coeffs: Vec<S>) -> Result<Self, ExactError> {
        if !(-1..=1).contains(&offset) {
            return Err(ExactError::BadOffset(offset));
        }
        if coeffs.is_empty() {
            return Err(ExactError::EmptySeries);
        }
        Ok(TruncSeries { offset, coeffs })
    }

    /// A plain power series (offset 0).
    pub fn power(coeffs: Vec<S>) -> Self {
        Self::new(0, coeffs).expect("nonempty coefficient list")
    }

    pub fn offset(&self) -> i8 {
        self.offset
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<S> {
        self.coeffs
    }

    /// Coefficient of `t^(offset + k)`.
    pub fn coeff(&self, k: usize) -> &S {
        &self.coeffs[k]
    }

    pub fn truncate(&self, order: usize) -> Self {
        let n = order.min(self.order());
        TruncSeries { offset: self.offset, coeffs: self.coeffs[..=n].to_vec() }
    }

    pub fn mul(&self, other: &Self) -> Result<Self, ExactError> {
        let offset = self.offset + other.offset;
        let n = self.order().min(other.order());
        Self::new(offset, mul_coeffs(&self.coeffs, &other.coeffs, n))
    }

    /// Multiplicative inverse; the offset flips sign.
    pub fn reciprocal(&self) -> Result<Self, ExactError> {
        let c0inv = self.coeffs[0].inverse().ok_or(ExactError::NonInvertibleConstant)?;
        Self::new(-self.offset, reciprocal_coeffs(&self.coeffs, &c0inv))
    }

    /// Compositional inverse of `s(t) = t + c_1 t² + …` (offset +1, unit leading coefficient).
    pub fn comp_inverse(&self) -> Result<Self, ExactError> {
        if self.offset != 1 {
            return Err(ExactError::BadOffset(self.offset));
        }
        if !self.coeffs[0].is_one() {
            return Err(ExactError::NonUnitLinear);
        }
        let n = self.order();
        let c = &self.coeffs;
        // pw[j][m] = [u^m] D(u)^j for the inverse u·D(u), filled column by column.
        let mut pw: Vec<Vec<S>> = vec![vec![S::zero(); n + 1]; n + 2];
        pw[0][0] = S::one();
        let mut d: Vec<S> = Vec::with_capacity(n + 1);
        for m in 0..=n {
            let dm = if m == 0 {
                S::one()
            } else {
                let mut acc = S::zero();
                for k in 1..=m {
                    if !c[k].is_zero() {
                        acc = acc.plus(&c[k].times(&pw[k + 1][m - k]));
                    }
                }
                acc.negated()
            };
            d.push(dm);
            for j in 1..=n + 1 {
                let mut acc = S::zero();
                for i in 0..=m {
                    if !d[i].is_zero() && !pw[j - 1][m - i].is_zero() {
                        acc = acc.plus(&d[i].times(&pw[j - 1][m - i]));
                    }
                }
                pw[j][m] = acc;
            }
        }
        Self::new(1, d)
    }

    /// `self(inner(u))` for an offset-0 or offset-1 outer series and offset-1 inner series.
    pub fn compose(&self, inner: &Self) -> Result<Self, ExactError> {
        if inner.offset != 1 || self.offset < 0 {
            return Err(ExactError::BadOffset(inner.offset));
        }
        let n = self.order().min(inner.order());
        // inner = u·I(u); self(inner) = inner^offset · Σ c_k u^k I^k.
        let i_coeffs = inner.coeffs[..=n].to_vec();
        let mut acc = vec![S::zero(); n + 1];
        let mut ipow = {
            let mut v = vec![S::zero(); n + 1];
            v[0] = S::one();
            v
        };
        if self.offset == 1 {
            ipow = i_coeffs.clone();
        }
        for k in 0..=n {
            // term c_k u^k I^(k+offset)
            for m in 0..=n - k {
                acc[m + k] = acc[m + k].plus(&self.coeffs[k].times(&ipow[m]));
            }
            ipow = mul_coeffs(&ipow, &i_coeffs, n);
        }
        Self::new(self.offset, acc)
    }
}

pub fn mul_coeffs<S: Scalar>(a: &[S], b: &[S], n: usize) -> Vec<S> {
    let mut out = vec![S::zero(); n + 1];
    for (i, ai) in a.iter().enumerate().take(n + 1) {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(n + 1 - i) {
            if !bj.is_zero() {
                out[i + j] = out[i + j].plus(&ai.times(bj));
            }
        }
    }
    out
}

fn reciprocal_coeffs<S: Scalar>(c: &[S], c0inv: &S) -> Vec<S> {
    let n = c.len() - 1;
    let mut d: Vec<S> = Vec::with_capacity(n + 1);
    d.push(c0inv.clone());
    for m in 1..=n {
        let mut acc = S::zero();
        for k in 1..=m {
            if !c[k].is_zero() {
                acc = acc.plus(&c[k].times(&d[m - k]));
            }
        }
        d.push(acc.negated().times(c0inv));
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{rat, Rational};

    #[test]
    fn geometric_reciprocal() {
        let s = TruncSeries::power(vec![rat(1), rat(1), rat(0), rat(0), rat(0)]);
        let r = s.reciprocal().unwrap();
        assert_eq!(r.coeffs(), &[rat(1), rat(-1), rat(1), rat(-1), rat(1)]);
        assert_eq!(r.offset(), 0);
    }

    #[test]
    fn mobius_inverse() {
        // t/(1-t) = t(1 + t + t² + …)
        let s = TruncSeries::new(1, vec![rat(1); 6]).unwrap();
        let inv = s.comp_inverse().unwrap();
        let expected: Vec<Rational> = (0..6).map(|k| rat(if k % 2 == 0 { 1 } else { -1 })).collect();
        assert_eq!(inv.coeffs(), expected.as_slice());
        let back = s.compose(&inv).unwrap();
        assert_eq!(back.coeffs()[0], rat(1));
        assert!(back.coeffs()[1..].iter().all(|c| c == &rat(0)));
    }

    #[test]
    fn rejects_bad_shapes() {
        let s = TruncSeries::new(1, vec![rat(2), rat(1)]).unwrap();
        assert_eq!(s.comp_inverse(), Err(ExactError::NonUnitLinear));
        let z = TruncSeries::power(vec![rat(0), rat(1)]);
        assert_eq!(z.reciprocal(), Err(ExactError::NonInvertibleConstant));
        assert!(TruncSeries::new(2, vec![rat(1)]).is_err());
    }
}
