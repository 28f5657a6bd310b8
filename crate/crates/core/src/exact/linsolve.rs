//! Exact linear systems via fraction-free Gauss–Jordan (Bareiss) elimination.
//!
//! Field-valued systems are first scaled row by row to polynomial entries.
//! Every step keeps entries as minors of the scaled matrix, so each update
//! divides exactly by the previous pivot. Pivots are chosen over all remaining
//! rows and unused columns by smallest term count.

use num_integer::Integer;
use num_traits::{One, Zero};

use super::field::FieldElem;
use super::poly::MultiPoly;
use super::rational::Rational;
use super::ExactError;

/// Integral-domain operations needed by the elimination.
pub trait ExactRing: Clone + PartialEq {
    fn ring_zero() -> Self;
    fn ring_one() -> Self;
    fn is_ring_zero(&self) -> bool;
    fn ring_mul(&self, rhs: &Self) -> Self;
    fn ring_sub(&self, rhs: &Self) -> Self;
    fn ring_div_exact(&self, rhs: &Self) -> Option<Self>;
    /// Pivot-selection weight; smaller is preferred.
    fn weight(&self) -> usize;
}

impl ExactRing for MultiPoly {
    fn ring_zero() -> Self {
        MultiPoly::zero()
    }
    fn ring_one() -> Self {
        MultiPoly::one()
    }
    fn is_ring_zero(&self) -> bool {
        self.is_zero()
    }
    fn ring_mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn ring_sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn ring_div_exact(&self, rhs: &Self) -> Option<Self> {
        self.div_exact(rhs)
    }
    fn weight(&self) -> usize {
        self.num_terms() * 64 + self.total_degree() as usize
    }
}

impl ExactRing for Rational {
    fn ring_zero() -> Self {
        Rational::zero()
    }
    fn ring_one() -> Self {
        Rational::one()
    }
    fn is_ring_zero(&self) -> bool {
        self.is_zero()
    }
    fn ring_mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn ring_sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn ring_div_exact(&self, rhs: &Self) -> Option<Self> {
        (!rhs.is_zero()).then(|| self / rhs)
    }
    fn weight(&self) -> usize {
        (self.numer().bits() + self.denom().bits()) as usize
    }
}

/// Successful solve with its consistency certificate.
#[derive(Clone, Debug, PartialEq)]
pub struct LinSolution<T> {
    /// One solution vector per right-hand side.
    pub solutions: Vec<Vec<T>>,
    pub rank: usize,
    /// Original indices of the rows beyond the rank whose reduced entries were all checked to vanish.
    pub residual_rows: Vec<usize>,
}

impl<T: Clone> LinSolution<T> {
    pub fn values(&self) -> &[T] {
        &self.solutions[0]
    }
}

/// Outcome of the elimination before the final division by the determinant.
struct Reduced<T> {
    /// For each unknown, the reduced right-hand sides (numerators).
    numerators: Vec<Vec<T>>,
    det: T,
    residual_rows: Vec<usize>,
}

fn eliminate<T: ExactRing>(
    mut m: Vec<Vec<T>>,
    mut rhs: Vec<Vec<T>>,
    ncols: usize,
) -> Result<Reduced<T>, ExactError> {
    let nrows = m.len();
    let nrhs = rhs.first().map_or(0, |r| r.len());
    let mut row_ids: Vec<usize> = (0..nrows).collect();
    let mut used = vec![false; ncols];
    let mut pivot_col = Vec::with_capacity(ncols);
    let mut prev = T::ring_one();
    for step in 0..ncols {
        let mut best: Option<(usize, usize, usize)> = None;
        for (i, row) in m.iter().enumerate().skip(step) {
            for (j, e) in row.iter().enumerate() {
                if used[j] || e.is_ring_zero() {
                    continue;
                }
                let w = e.weight();
                if best.is_none_or(|(bw, _, _)| w < bw) {
                    best = Some((w, i, j));
                }
            }
        }
        let Some((_, pi, pj)) = best else {
            let free = (0..ncols).find(|&j| !used[j]).unwrap_or(step);
            return Err(ExactError::Underdetermined { free_column: free });
        };
        m.swap(step, pi);
        rhs.swap(step, pi);
        row_ids.swap(step, pi);
        used[pj] = true;
        pivot_col.push(pj);
        let p = m[step][pj].clone();
        let prow = m[step].clone();
        let prhs = rhs[step].clone();
        for i in 0..nrows {
            if i == step {
                continue;
            }
            let f = m[i][pj].clone();
            let update = |x: &T, y: &T| -> Result<T, ExactError> {
                let t = if f.is_ring_zero() || y.is_ring_zero() {
                    p.ring_mul(x)
                } else {
                    p.ring_mul(x).ring_sub(&f.ring_mul(y))
                };
                if t.is_ring_zero() {
                    return Ok(T::ring_zero());
                }
                t.ring_div_exact(&prev).ok_or(ExactError::InexactDivision)
            };
            for j in 0..ncols {
                if m[i][j].is_ring_zero() && (f.is_ring_zero() || prow[j].is_ring_zero()) {
                    continue;
                }
                m[i][j] = update(&m[i][j], &prow[j])?;
            }
            for k in 0..nrhs {
                rhs[i][k] = update(&rhs[i][k], &prhs[k])?;
            }
        }
        prev = p;
    }
    let mut residual_rows = Vec::new();
    for i in ncols..nrows {
        if rhs[i].iter().any(|x| !x.is_ring_zero()) {
            return Err(ExactError::Inconsistent { row: row_ids[i] });
        }
        residual_rows.push(row_ids[i]);
    }
    let mut numerators = vec![Vec::new(); ncols];
    for (step, &j) in pivot_col.iter().enumerate() {
        numerators[j] = rhs[step].clone();
    }
    Ok(Reduced { numerators, det: prev, residual_rows })
}

fn check_shape<T>(a: &[Vec<T>], rhs: &[Vec<T>]) -> Result<usize, ExactError> {
    let ncols = a.first().map_or(0, |r| r.len());
    if a.len() != rhs.len() || a.iter().any(|r| r.len() != ncols) {
        return Err(ExactError::Shape);
    }
    let nrhs = rhs.first().map_or(0, |r| r.len());
    if rhs.iter().any(|r| r.len() != nrhs) {
        return Err(ExactError::Shape);
    }
    Ok(ncols)
}

/// Solves `A X = B` over ℚ(α, β, ζ, η) for several right-hand sides at once.
/// `rhs[i][k]` is row `i` of right-hand side `k`.
pub fn linsolve_multi(
    a: &[Vec<FieldElem>],
    rhs: &[Vec<FieldElem>],
) -> Result<LinSolution<FieldElem>, ExactError> {
    let ncols = check_shape(a, rhs)?;
    let mut pa = Vec::with_capacity(a.len());
    let mut pb = Vec::with_capacity(a.len());
    for (row, brow) in a.iter().zip(rhs) {
        let l = row_denominator_lcm(row.iter().chain(brow.iter()));
        let scale = |e: &FieldElem| -> MultiPoly {
            if e.is_zero() {
                MultiPoly::zero()
            } else {
                let f = l.div_exact(e.denom()).expect("lcm is a multiple");
                e.numer() * &f
            }
        };
        pa.push(row.iter().map(scale).collect::<Vec<_>>());
        pb.push(brow.iter().map(scale).collect::<Vec<_>>());
    }
    let nrhs = rhs.first().map_or(0, |r| r.len());
    let red = eliminate(pa, pb, ncols)?;
    let mut solutions = vec![Vec::with_capacity(ncols); nrhs];
    for num in &red.numerators {
        for (k, sol) in solutions.iter_mut().enumerate() {
            sol.push(FieldElem::new(num[k].clone(), red.det.clone())?);
        }
    }
    Ok(LinSolution { solutions, rank: ncols, residual_rows: red.residual_rows })
}

/// Solves `A x = b` over ℚ(α, β, ζ, η).
pub fn linsolve(a: &[Vec<FieldElem>], b: &[FieldElem]) -> Result<LinSolution<FieldElem>, ExactError> {
    let rhs: Vec<Vec<FieldElem>> = b.iter().map(|x| vec![x.clone()]).collect();
    linsolve_multi(a, &rhs)
}

/// Rational counterpart of [`linsolve_multi`].
pub fn linsolve_rational_multi(
    a: &[Vec<Rational>],
    rhs: &[Vec<Rational>],
) -> Result<LinSolution<Rational>, ExactError> {
    let ncols = check_shape(a, rhs)?;
    let nrhs = rhs.first().map_or(0, |r| r.len());
    if a.len() > ncols + 8 {
        if let Some(rows) = independent_rows_mod_p(a, ncols) {
            let sa: Vec<Vec<Rational>> = rows.iter().map(|&i| a[i].clone()).collect();
            let sb: Vec<Vec<Rational>> = rows.iter().map(|&i| rhs[i].clone()).collect();
            let sol = linsolve_rational_multi(&sa, &sb)?;
            let mut residual_rows = Vec::new();
            for (i, (row, brow)) in a.iter().zip(rhs).enumerate() {
                if rows.contains(&i) {
                    continue;
                }
                for (k, x) in sol.solutions.iter().enumerate() {
                    let lhs: Rational = row.iter().zip(x).map(|(c, v)| c * v).sum();
                    if lhs != brow[k] {
                        return Err(ExactError::Inconsistent { row: i });
                    }
                }
                residual_rows.push(i);
            }
            return Ok(LinSolution { solutions: sol.solutions, rank: ncols, residual_rows });
        }
    }
    // Rows are scaled to integers so that every entry stays an integer minor.
    let mut pa = Vec::with_capacity(a.len());
    let mut pb = Vec::with_capacity(a.len());
    for (row, brow) in a.iter().zip(rhs) {
        let l = row.iter().chain(brow).fold(num_bigint::BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let l = Rational::from_integer(l);
        pa.push(row.iter().map(|x| x * &l).collect::<Vec<_>>());
        pb.push(brow.iter().map(|x| x * &l).collect::<Vec<_>>());
    }
    let red = eliminate(pa, pb, ncols)?;
    let mut solutions = vec![Vec::with_capacity(ncols); nrhs];
    for num in &red.numerators {
        for (k, sol) in solutions.iter_mut().enumerate() {
            sol.push(&num[k] / &red.det);
        }
    }
    Ok(LinSolution { solutions, rank: ncols, residual_rows: red.residual_rows })
}

const PRIME: u64 = (1 << 61) - 1;

fn mul_mod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % PRIME as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a);
        }
        a = mul_mod(a, a);
        e >>= 1;
    }
    r
}

fn reduce_mod(x: &Rational) -> Option<u64> {
    let p = num_bigint::BigInt::from(PRIME);
    let to_u64 = |v: &num_bigint::BigInt| -> u64 { v.mod_floor(&p).try_into().expect("reduced below p") };
    let d = to_u64(x.denom());
    (d != 0).then(|| mul_mod(to_u64(x.numer()), pow_mod(d, PRIME - 2)))
}

/// Indices of `ncols` rows independent modulo a large prime, if there are
/// that many; the exact solve then runs on a square system.
fn independent_rows_mod_p(a: &[Vec<Rational>], ncols: usize) -> Option<Vec<usize>> {
    let mut basis: Vec<(usize, Vec<u64>)> = Vec::new();
    let mut chosen = Vec::new();
    for (i, row) in a.iter().enumerate() {
        let mut v = row.iter().map(reduce_mod).collect::<Option<Vec<u64>>>()?;
        for (pc, b) in &basis {
            let f = v[*pc];
            if f != 0 {
                for (x, y) in v.iter_mut().zip(b) {
                    *x = (*x + PRIME - mul_mod(f, *y)) % PRIME;
                }
            }
        }
        if let Some(pc) = v.iter().position(|&x| x != 0) {
            let inv = pow_mod(v[pc], PRIME - 2);
            for x in v.iter_mut() {
                *x = mul_mod(*x, inv);
            }
            basis.push((pc, v));
            chosen.push(i);
            if chosen.len() == ncols {
                return Some(chosen);
            }
        }
    }
    None
}

pub fn linsolve_rational(a: &[Vec<Rational>], b: &[Rational]) -> Result<LinSolution<Rational>, ExactError> {
    let rhs: Vec<Vec<Rational>> = b.iter().map(|x| vec![x.clone()]).collect();
    linsolve_rational_multi(a, &rhs)
}

fn row_denominator_lcm<'a>(entries: impl Iterator<Item = &'a FieldElem>) -> MultiPoly {
    let mut l = MultiPoly::one();
    for e in entries {
        if e.is_zero() || e.denom().is_constant() && e.denom().is_one() {
            continue;
        }
        l = poly_lcm(&l, e.denom());
    }
    l
}

fn poly_lcm(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    if a.is_one() {
        return b.clone();
    }
    if b.is_one() || a.div_exact(b).is_some() {
        return a.clone();
    }
    if let (Some((ma, ca)), Some((mb, cb))) = (a.single_term(), b.single_term()) {
        let c = num_integer::Integer::lcm(ca.numer(), cb.numer());
        return MultiPoly::monomial(ma.lcm(mb), Rational::from_integer(c));
    }
    let g = super::gcd::poly_gcd(a, b);
    &a.div_exact(&g).expect("gcd divides") * b
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat;

    #[test]
    fn identity_system() {
        let a: Vec<Vec<FieldElem>> = (0..3)
            .map(|i| (0..3).map(|j| FieldElem::from_int((i == j) as i64)).collect())
            .collect();
        let b = vec![FieldElem::alpha(), FieldElem::beta(), FieldElem::from_int(7)];
        let sol = linsolve(&a, &b).unwrap();
        assert_eq!(sol.values(), b.as_slice());
    }

    #[test]
    fn duplicated_row_is_consistent() {
        let a = vec![vec![FieldElem::from_int(1)], vec![FieldElem::from_int(2)]];
        let b = vec![FieldElem::alpha(), &FieldElem::alpha() * &FieldElem::from_int(2)];
        let sol = linsolve(&a, &b).unwrap();
        assert_eq!(sol.values(), &[FieldElem::alpha()]);
        assert_eq!(sol.residual_rows.len(), 1);
    }

    #[test]
    fn inconsistent_and_underdetermined() {
        let a = vec![vec![FieldElem::from_int(1)], vec![FieldElem::from_int(2)]];
        let b = vec![FieldElem::alpha(), FieldElem::beta()];
        assert!(matches!(linsolve(&a, &b), Err(ExactError::Inconsistent { .. })));
        let a = vec![vec![rat(1), rat(1)], vec![rat(2), rat(2)]];
        let b = vec![rat(1), rat(2)];
        assert!(matches!(
            linsolve_rational(&a, &b),
            Err(ExactError::Underdetermined { .. })
        ));
    }

    #[test]
    fn symbolic_two_by_two() {
        let a = FieldElem::alpha();
        let one = FieldElem::one();
        let m = vec![vec![a.clone(), one.clone()], vec![one.clone(), &one / &a]];
        // determinant 0 when entries are proportional; perturb the corner
        let mut m2 = m.clone();
        m2[1][1] = &one + &one;
        let x = vec![FieldElem::beta(), &a - &one];
        let b: Vec<FieldElem> = m2
            .iter()
            .map(|row| &(&row[0] * &x[0]) + &(&row[1] * &x[1]))
            .collect();
        assert_eq!(linsolve(&m2, &b).unwrap().values(), x.as_slice());
        assert!(linsolve(&m, &b).is_err());
    }
}
