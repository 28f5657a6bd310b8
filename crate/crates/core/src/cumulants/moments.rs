use serde::{Deserialize, Serialize};

use crate::exact::scalar::Scalar;
use crate::exact::series::TruncSeries;
use crate::jack::{pieri, Mode};
use crate::partitions::Partition;

use super::CumulantError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CumKind {
    M,
    B,
    R,
}

/// `X_1..X_N` of one family; `get(0)` is the conventional `M_0 = 1`, `B_0 = R_0 = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct CumulantVector<S> {
    pub kind: CumKind,
    pub values: Vec<S>,
}

impl<S: Scalar> CumulantVector<S> {
    pub fn new(kind: CumKind, values: Vec<S>) -> Self {
        CumulantVector { kind, values }
    }

    pub fn order(&self) -> usize {
        self.values.len()
    }

    pub fn get(&self, k: usize) -> S {
        if k == 0 {
            return if self.kind == CumKind::M { S::one() } else { S::zero() };
        }
        self.values[k - 1].clone()
    }

    /// `X_ρ = Π X_{ρ_i}`.
    pub fn product(&self, rho: &Partition) -> S {
        rho.parts().iter().fold(S::one(), |acc, &p| acc.times(&self.get(p as usize)))
    }

    /// `[X_0, X_1, …, X_N]`.
    pub fn with_zeroth(&self) -> Vec<S> {
        (0..=self.order()).map(|k| self.get(k)).collect()
    }
}

/// `M_1..M_N` from the product over nodes with contents `κ`:
/// `Σ M_k w^k = Π (1−w(ζ+η+κ))(1−wκ) / ((1−w(ζ+κ))(1−w(η+κ)))`.
pub fn moment_series<S: Scalar>(lambda: &Partition, n: usize, mode: &Mode<S>) -> Result<CumulantVector<S>, CumulantError> {
    let (z, e) = mode.zeta_eta()?;
    let ze = z.plus(&e);
    let mut h = vec![S::zero(); n + 1];
    h[0] = S::one();
    for (i, j) in lambda.cells() {
        let kappa = mode.content(i, j)?;
        for a in [ze.plus(&kappa), kappa.clone()] {
            for k in (1..=n).rev() {
                let t = h[k - 1].times(&a);
                h[k] = h[k].minus(&t);
            }
        }
        for b in [z.plus(&kappa), e.plus(&kappa)] {
            for k in 1..=n {
                let t = h[k - 1].times(&b);
                h[k] = h[k].plus(&t);
            }
        }
    }
    h.remove(0);
    Ok(CumulantVector::new(CumKind::M, h))
}

/// `M_k = Σ_i c_i(λ) x_i^k` with the Pieri weights.
pub fn moments_via_probabilities<S: Scalar>(
    lambda: &Partition,
    n: usize,
    mode: &Mode<S>,
) -> Result<CumulantVector<S>, CumulantError> {
    let row = pieri(lambda, mode)?;
    let values = (1..=n as u32)
        .map(|k| {
            row.c.iter().zip(&row.x).fold(S::zero(), |acc, (c, x)| acc.plus(&c.times(&x.power(k))))
        })
        .collect();
    Ok(CumulantVector::new(CumKind::M, values))
}

/// Boolean cumulants from `1/H(w) = 1 − Σ B_k w^k` and free cumulants from the
/// compositional inverse of `wH(w) = u`, written `u·D(u)`, with `1/D(u) = 1 + Σ R_k u^k`.
pub fn cumulants_from_moments<S: Scalar>(
    m: &CumulantVector<S>,
) -> Result<(CumulantVector<S>, CumulantVector<S>), CumulantError> {
    if m.kind != CumKind::M {
        return Err(CumulantError::Invariant("expected moments".into()));
    }
    let h = m.with_zeroth();
    let recip = TruncSeries::power(h.clone()).reciprocal()?;
    let b = recip.coeffs()[1..].iter().map(|c| c.negated()).collect();
    let inv = TruncSeries::new(1, h)?.comp_inverse()?;
    let r_series = TruncSeries::power(inv.into_coeffs()).reciprocal()?;
    let r = r_series.coeffs()[1..].to_vec();
    Ok((CumulantVector::new(CumKind::B, b), CumulantVector::new(CumKind::R, r)))
}

/// `R_1..R_N` of `λ`.
pub fn free_cumulants<S: Scalar>(lambda: &Partition, n: usize, mode: &Mode<S>) -> Result<CumulantVector<S>, CumulantError> {
    Ok(cumulants_from_moments(&moment_series(lambda, n, mode)?)?.1)
}
