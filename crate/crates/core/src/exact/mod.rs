//! Exact arithmetic: rationals, polynomials, the fraction field, truncated
//! series and linear systems.

pub mod field;
pub mod gcd;
pub mod linsolve;
pub mod poly;
pub mod rational;
pub mod scalar;
pub mod series;

pub use field::FieldElem;
pub use linsolve::{linsolve, linsolve_multi, linsolve_rational, LinSolution};
pub use poly::{Monomial, MultiPoly, Var};
pub use rational::{rat, ratio, Rational};
pub use scalar::Scalar;
pub use series::TruncSeries;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("series offset {0} outside -1..=1 or unsupported here")]
    BadOffset(i8),
    #[error("series has no coefficients")]
    EmptySeries,
    #[error("constant term is not invertible")]
    NonInvertibleConstant,
    #[error("linear coefficient is not 1")]
    NonUnitLinear,
    #[error("inconsistent system: residual row {row} does not vanish")]
    Inconsistent { row: usize },
    #[error("underdetermined system: column {free_column} is free")]
    Underdetermined { free_column: usize },
    #[error("matrix and right-hand side have incompatible shapes")]
    Shape,
    #[error("fraction-free elimination produced an inexact division")]
    InexactDivision,
    #[error("cannot parse field element {0:?}")]
    Parse(String),
}
