//! Independent construction of `θ^λ_ρ` by orthogonalizing monomial symmetric
//! functions for the α-deformed power-sum scalar product.

use num_traits::{One, Zero};

use crate::exact::field::FieldElem;
use crate::exact::linsolve::linsolve_rational_multi;
use crate::exact::rational::Rational;
use crate::partitions::{enumerate, Partition};

use super::theta::ThetaTable;
use super::JackError;

pub const DEFAULT_ORACLE_BOUND: u32 = 8;

/// Number of ways to distribute the parts of `rho` into bins of sizes `mu`,
/// i.e. the coefficient of `m_μ` in `p_ρ`.
fn distributions(rho: &[u32], bins: &mut [u32]) -> u64 {
    let Some((&first, rest)) = rho.split_first() else {
        return bins.iter().all(|&b| b == 0) as u64;
    };
    let mut total = 0;
    for k in 0..bins.len() {
        if bins[k] >= first {
            bins[k] -= first;
            total += distributions(rest, bins);
            bins[k] += first;
        }
    }
    total
}

/// Rows: `m_μ` in the power-sum basis, both indexed like `enumerate(n, 1)`.
pub fn monomials_in_power_sums(n: u32) -> Vec<Vec<Rational>> {
    let parts = enumerate(n, 1);
    let k = parts.len();
    let l: Vec<Vec<Rational>> = parts
        .iter()
        .map(|rho| {
            parts
                .iter()
                .map(|mu| Rational::from_integer(distributions(rho.parts(), &mut mu.parts().to_vec()).into()))
                .collect()
        })
        .collect();
    let identity: Vec<Vec<Rational>> =
        (0..k).map(|i| (0..k).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect()).collect();
    let inv = linsolve_rational_multi(&l, &identity).expect("p-to-m matrix is unitriangular up to order");
    // inv.solutions[ρ] is column ρ of L⁻¹, so (L⁻¹)[μ][ρ] = inv.solutions[ρ][μ].
    (0..k).map(|mu| (0..k).map(|rho| inv.solutions[rho][mu].clone()).collect()).collect()
}

/// `⟨p_λ, p_μ⟩ = δ_{λμ} α^{l(λ)} z_λ`, extended bilinearly to p-coordinate vectors.
pub fn p_inner(parts: &[Partition], u: &[FieldElem], v: &[FieldElem]) -> FieldElem {
    let a = FieldElem::alpha();
    let mut acc = FieldElem::zero();
    for ((rho, x), y) in parts.iter().zip(u).zip(v) {
        if x.is_zero() || y.is_zero() {
            continue;
        }
        let w = a.pow(rho.len() as i32) * FieldElem::from_rational(&Rational::from_integer(rho.stats().z));
        acc = acc + &(x * y) * &w;
    }
    acc
}

/// Jack functions `J_λ` of weight `n` in p-coordinates, normalized by
/// `θ^λ_{1^n} = 1`, together with the squared norms `⟨J_λ, J_λ⟩`.
pub fn gram_schmidt(n: u32) -> (ThetaTable<FieldElem>, Vec<FieldElem>) {
    let parts = enumerate(n, 1);
    let k = parts.len();
    let m = monomials_in_power_sums(n);
    let mut rows: Vec<Vec<FieldElem>> = vec![Vec::new(); k];
    let mut norms = vec![FieldElem::zero(); k];
    // enumerate() is reverse lexicographic; (1^n) comes last and is processed first.
    for idx in (0..k).rev() {
        let mut v: Vec<FieldElem> = m[idx].iter().map(FieldElem::from_rational).collect();
        for prev in idx + 1..k {
            let c = &p_inner(&parts, &v, &rows[prev]) / &norms[prev];
            if c.is_zero() {
                continue;
            }
            for (x, y) in v.iter_mut().zip(&rows[prev]) {
                *x = &*x - &(&c * y);
            }
        }
        let scale = v[k - 1].clone();
        let v: Vec<FieldElem> = v.iter().map(|x| x / &scale).collect();
        norms[idx] = p_inner(&parts, &v, &v);
        rows[idx] = v;
    }
    (ThetaTable::from_rows(n, rows), norms)
}

/// `θ^λ_ρ` over ℚ(α) from Gram–Schmidt, for `n ≤` [`DEFAULT_ORACLE_BOUND`].
pub fn oracle_gram_schmidt(n: u32) -> Result<ThetaTable<FieldElem>, JackError> {
    oracle_gram_schmidt_bounded(n, DEFAULT_ORACLE_BOUND)
}

pub fn oracle_gram_schmidt_bounded(n: u32, bound: u32) -> Result<ThetaTable<FieldElem>, JackError> {
    if n > bound {
        return Err(JackError::Invariant(format!("oracle weight {n} exceeds the bound {bound}")));
    }
    Ok(gram_schmidt(n).0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p_to_m_weight_two() {
        // m_2 = p_2, m_11 = (p_1² − p_2)/2
        let m = monomials_in_power_sums(2);
        let h = Rational::new(1.into(), 2.into());
        assert_eq!(m[0], vec![Rational::one(), Rational::zero()]);
        assert_eq!(m[1], vec![-h.clone(), h]);
    }

    #[test]
    fn weight_two_jacks() {
        let t = oracle_gram_schmidt(2).unwrap();
        let two = Partition::row(2);
        assert_eq!(t.row(&two).unwrap(), &[FieldElem::alpha(), FieldElem::one()]);
    }
}
