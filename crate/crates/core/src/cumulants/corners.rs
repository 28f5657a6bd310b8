use crate::exact::rational::Rational;
use crate::exact::scalar::Scalar;
use crate::jack::Mode;
use crate::partitions::Partition;
use crate::symfun::SignedAlphabet;

use super::CumulantError;

/// Inside corners `x_1..x_d` and outside corners `y_1..y_{d−1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct Corners<S> {
    pub x: Vec<S>,
    pub y: Vec<S>,
}

/// Corner contents `x_k = λ′_k ζ + (k−1)η`, `y_k = λ′_k ζ + kη`, `x_d = λ_1 η`,
/// dropping `x_k` and `y_{k−1}` when they coincide (`λ′_k = λ′_{k−1}`).
pub fn corners<S: Scalar>(lambda: &Partition, mode: &Mode<S>) -> Result<Corners<S>, CumulantError> {
    let (z, e) = mode.zeta_eta()?;
    let conj = lambda.conjugate();
    let l1 = lambda.part(1) as usize;
    let mut x = Vec::with_capacity(l1 + 1);
    let mut y: Vec<S> = Vec::with_capacity(l1);
    for k in 1..=l1 {
        let c = S::from_int(conj.part(k) as i64).times(&z);
        let xk = c.plus(&S::from_int(k as i64 - 1).times(&e));
        let yk = c.plus(&S::from_int(k as i64).times(&e));
        if k > 1 && conj.part(k) == conj.part(k - 1) {
            y.pop();
        } else {
            x.push(xk);
        }
        y.push(yk);
    }
    x.push(S::from_int(l1 as i64).times(&e));
    let c = Corners { x, y };
    if !c.center().is_zero() {
        return Err(CumulantError::Invariant(format!("corners of {lambda} are not centered")));
    }
    Ok(c)
}

impl<S: Scalar> Corners<S> {
    /// `Σ x − Σ y`.
    pub fn center(&self) -> S {
        let sx = self.x.iter().fold(S::zero(), |a, v| a.plus(v));
        self.y.iter().fold(sx, |a, v| a.minus(v))
    }

    /// The alphabet `A_λ = I_λ − O_λ`.
    pub fn alphabet(&self) -> SignedAlphabet<S> {
        SignedAlphabet::new(self.x.clone(), self.y.clone())
    }
}

impl Corners<Rational> {
    /// `x_1 < y_1 < x_2 < … < y_{d−1} < x_d`.
    pub fn is_interlacing(&self) -> bool {
        if self.x.len() != self.y.len() + 1 {
            return false;
        }
        let mut seq = Vec::with_capacity(self.x.len() + self.y.len());
        for (i, xi) in self.x.iter().enumerate() {
            seq.push(xi);
            if let Some(yi) = self.y.get(i) {
                seq.push(yi);
            }
        }
        seq.windows(2).all(|w| w[0] < w[1])
    }
}
