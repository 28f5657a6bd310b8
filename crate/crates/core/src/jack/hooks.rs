use crate::exact::scalar::Scalar;
use crate::partitions::Partition;

/// Upper and lower hook products `h_λ`, `h′_λ` at a given `α`.
#[derive(Clone, Debug, PartialEq)]
pub struct HookPair<S> {
    pub h: S,
    pub h_prime: S,
}

/// `h = Π (λ′_j − i + 1 + α(λ_i − j))`, `h′ = Π (λ′_j − i + α(λ_i − j + 1))`.
pub fn hooks<S: Scalar>(lambda: &Partition, alpha: &S) -> HookPair<S> {
    let conj = lambda.conjugate();
    let mut h = S::one();
    let mut hp = S::one();
    for (i, j) in lambda.cells() {
        let leg = conj.part(j as usize) as i64 - i as i64;
        let arm = lambda.part(i as usize) as i64 - j as i64;
        h = h.times(&alpha.scaled(arm).plus(&S::from_int(leg + 1)));
        hp = hp.times(&alpha.scaled(arm + 1).plus(&S::from_int(leg)));
    }
    HookPair { h, h_prime: hp }
}
