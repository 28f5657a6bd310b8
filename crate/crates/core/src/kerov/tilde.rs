//! `K̃_μ` by inverting `K_μ = Σ_k (−1)^{l−k} Σ_{ν_1,…,ν_k} Π K̃_{ν_i}`, the inner sum
//! running over set partitions of the parts of `μ` into `k` blocks.

use std::collections::HashMap;

use crate::exact::scalar::Scalar;
use crate::partitions::Partition;

use super::rpoly::RPoly;
use super::solver::Kerov;
use super::KerovError;

/// Set partitions of `0..n` as block lists, by restricted growth strings.
pub fn set_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    fn go(i: usize, n: usize, blocks: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if i == n {
            out.push(blocks.clone());
            return;
        }
        for b in 0..blocks.len() {
            blocks[b].push(i);
            go(i + 1, n, blocks, out);
            blocks[b].pop();
        }
        blocks.push(vec![i]);
        go(i + 1, n, blocks, out);
        blocks.pop();
    }
    let mut out = Vec::new();
    go(0, n, &mut Vec::new(), &mut out);
    out
}

fn sub(parts: &[u32], block: &[usize]) -> Partition {
    Partition::new(block.iter().map(|&i| parts[i]).collect())
}

fn tilde_rec<S: Scalar>(
    k: &Kerov<S>,
    mu: &Partition,
    memo: &mut HashMap<Partition, RPoly<S>>,
) -> Result<RPoly<S>, KerovError> {
    if let Some(t) = memo.get(mu) {
        return Ok(t.clone());
    }
    let l = mu.len();
    let parts = mu.parts().to_vec();
    let mut acc = (*k.kerov_k(mu)?).clone();
    for blocks in set_partitions(l) {
        if blocks.len() < 2 {
            continue;
        }
        let mut prod = RPoly::one();
        for b in &blocks {
            prod = prod.times(&tilde_rec(k, &sub(&parts, b), memo)?);
        }
        acc = if (l - blocks.len()) % 2 == 0 { acc.minus(&prod) } else { acc.plus(&prod) };
    }
    if (l - 1) % 2 == 1 {
        acc = acc.negated();
    }
    memo.insert(mu.clone(), acc.clone());
    Ok(acc)
}

/// `K̃_μ`; `K̃_{(r)} = K_r`.
pub fn kerov_tilde<S: Scalar>(k: &Kerov<S>, mu: &Partition) -> Result<RPoly<S>, KerovError> {
    if mu.is_empty() {
        return Err(KerovError::Invariant("K̃ needs a nonempty μ".into()));
    }
    tilde_rec(k, mu, &mut HashMap::new())
}

/// `K_μ` rebuilt from the `K̃_ν` of its sub-multisets.
pub fn kerov_from_tilde<S: Scalar>(k: &Kerov<S>, mu: &Partition) -> Result<RPoly<S>, KerovError> {
    let l = mu.len();
    let parts = mu.parts().to_vec();
    let mut memo = HashMap::new();
    let mut acc = RPoly::zero();
    for blocks in set_partitions(l) {
        let mut prod = RPoly::one();
        for b in &blocks {
            prod = prod.times(&tilde_rec(k, &sub(&parts, b), &mut memo)?);
        }
        acc = if (l - blocks.len()) % 2 == 0 { acc.plus(&prod) } else { acc.minus(&prod) };
    }
    Ok(acc)
}
