use crate::exact::field::FieldElem;
use crate::exact::scalar::Scalar;
use crate::partitions::Partition;

use super::JackError;

/// Parameterization of the deformation.
///
/// `Alpha(α)` is the one-parameter theory. `ZetaEta(ζ, η)` is the
/// two-parameter extension with `α = −1/(ζη)` and `β = 1/ζ + 1/η`; the
/// one-parameter case corresponds to `ζ = −1/α`, `η = 1`.
#[derive(Clone, Debug, PartialEq)]
pub enum Mode<S> {
    Alpha(S),
    ZetaEta(S, S),
}

impl Mode<FieldElem> {
    pub fn symbolic_alpha() -> Self {
        Mode::Alpha(FieldElem::alpha())
    }

    pub fn symbolic_zeta_eta() -> Self {
        Mode::ZetaEta(FieldElem::zeta(), FieldElem::eta())
    }
}

fn inv<S: Scalar>(x: &S, what: &str) -> Result<S, JackError> {
    x.inverse().ok_or_else(|| JackError::Pole { factor: what.to_string() })
}

impl<S: Scalar> Mode<S> {
    pub fn is_alpha(&self) -> bool {
        matches!(self, Mode::Alpha(_))
    }

    pub fn name(&self) -> &'static str {
        match self {
            Mode::Alpha(_) => "alpha",
            Mode::ZetaEta(..) => "zeta-eta",
        }
    }

    /// `(ζ, η)`; the α-mode maps to `(−1/α, 1)`.
    pub fn zeta_eta(&self) -> Result<(S, S), JackError> {
        match self {
            Mode::Alpha(a) => Ok((inv(a, "alpha")?.negated(), S::one())),
            Mode::ZetaEta(z, e) => Ok((z.clone(), e.clone())),
        }
    }

    pub fn alpha(&self) -> Result<S, JackError> {
        match self {
            Mode::Alpha(a) => Ok(a.clone()),
            Mode::ZetaEta(z, e) => Ok(inv(&z.times(e), "zeta*eta")?.negated()),
        }
    }

    pub fn beta(&self) -> Result<S, JackError> {
        match self {
            Mode::Alpha(a) => Ok(S::one().minus(a)),
            Mode::ZetaEta(z, e) => Ok(inv(z, "zeta")?.plus(&inv(e, "eta")?)),
        }
    }

    /// `x_i`: `λ_i − (i−1)/α`, or `(i−1)ζ + λ_i η`.
    pub fn x(&self, lambda: &Partition, i: usize) -> Result<S, JackError> {
        let li = S::from_int(lambda.part(i) as i64);
        let im1 = S::from_int(i as i64 - 1);
        match self {
            Mode::Alpha(a) => Ok(li.minus(&im1.times(&inv(a, "alpha")?))),
            Mode::ZetaEta(z, e) => Ok(im1.times(z).plus(&li.times(e))),
        }
    }

    /// Content of the node `(i, j)`: `j−1−(i−1)/α`, or `(i−1)ζ + (j−1)η`.
    pub fn content(&self, i: u32, j: u32) -> Result<S, JackError> {
        let (z, e) = self.zeta_eta()?;
        Ok(S::from_int(i as i64 - 1).times(&z).plus(&S::from_int(j as i64 - 1).times(&e)))
    }

    /// `p_k` of the content alphabet of `λ`; `p_0 = |λ|`.
    pub fn content_power_sum(&self, lambda: &Partition, k: u32) -> Result<S, JackError> {
        let mut acc = S::zero();
        for (i, j) in lambda.cells() {
            acc = acc.plus(&self.content(i, j)?.power(k));
        }
        Ok(acc)
    }

    /// Evaluates a symbolic field element at this mode's parameters.
    pub fn map_scalar<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Mode<T> {
        match self {
            Mode::Alpha(a) => Mode::Alpha(f(a)),
            Mode::ZetaEta(z, e) => Mode::ZetaEta(f(z), f(e)),
        }
    }
}
