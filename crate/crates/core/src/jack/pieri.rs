use crate::exact::scalar::Scalar;
use crate::partitions::Partition;

use super::mode::Mode;
use super::JackError;

/// Pieri coefficients `c_1..c_{l+1}` of `λ` with the matching `x_i`.
#[derive(Clone, Debug, PartialEq)]
pub struct PieriRow<S> {
    pub lambda: Partition,
    pub c: Vec<S>,
    pub x: Vec<S>,
}

impl<S: Scalar> PieriRow<S> {
    /// 1-based access.
    pub fn c(&self, i: usize) -> &S {
        &self.c[i - 1]
    }

    pub fn x(&self, i: usize) -> &S {
        &self.x[i - 1]
    }
}

fn div<S: Scalar>(num: S, den: &S, factor: impl FnOnce() -> String) -> Result<S, JackError> {
    num.over(den).ok_or_else(|| JackError::Pole { factor: factor() })
}

pub fn pieri<S: Scalar>(lambda: &Partition, mode: &Mode<S>) -> Result<PieriRow<S>, JackError> {
    let l = lambda.len();
    let part = |i: usize| S::from_int(lambda.part(i) as i64);
    let int = |k: i64| S::from_int(k);
    let mut c = Vec::with_capacity(l + 1);
    for i in 1..=l + 1 {
        let ii = i as i64;
        let mut ci = match mode {
            Mode::Alpha(a) => {
                let den = a.times(&part(i)).plus(&int(l as i64 - ii + 2));
                div(S::one(), &den, || format!("alpha*lambda_{i} + {}", l as i64 - ii + 2))?
            }
            Mode::ZetaEta(z, e) => {
                let den = int(l as i64 - ii + 2).times(z).minus(&part(i).times(e));
                div(z.clone(), &den, || format!("{}*zeta - lambda_{i}*eta", l as i64 - ii + 2))?
            }
        };
        for j in 1..=l + 1 {
            if j == i {
                continue;
            }
            let jj = j as i64;
            let (num, den) = match mode {
                Mode::Alpha(a) => {
                    let d = a.times(&part(i).minus(&part(j)));
                    (d.plus(&int(jj - ii + 1)), d.plus(&int(jj - ii)))
                }
                Mode::ZetaEta(z, e) => {
                    let d = part(j).minus(&part(i)).times(e);
                    (int(jj - ii + 1).times(z).plus(&d), int(jj - ii).times(z).plus(&d))
                }
            };
            if num.is_zero() {
                ci = S::zero();
                break;
            }
            ci = div(ci.times(&num), &den, || format!("factor (i={i}, j={j}) of c_{i}"))?;
        }
        c.push(ci);
    }
    let total = c.iter().fold(S::zero(), |acc, ci| acc.plus(ci));
    if !total.is_one() {
        return Err(JackError::Invariant(format!("Pieri coefficients of {lambda} do not sum to 1")));
    }
    let x = (1..=l + 1).map(|i| mode.x(lambda, i)).collect::<Result<Vec<_>, _>>()?;
    Ok(PieriRow { lambda: lambda.clone(), c, x })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::field::FieldElem;

    #[test]
    fn single_box() {
        let row = pieri(&Partition::row(1), &Mode::symbolic_alpha()).unwrap();
        let a = FieldElem::alpha();
        let one = FieldElem::one();
        assert_eq!(row.c[0], &one / &(&a + &one));
        assert_eq!(row.c[1], &a / &(&a + &one));
    }

    #[test]
    fn empty_partition() {
        let row = pieri(&Partition::empty(), &Mode::symbolic_alpha()).unwrap();
        assert_eq!(row.c, vec![FieldElem::one()]);
    }
}
