//! Kerov-type polynomials: `ϑ^λ_μ` written in the free cumulants of `λ`.

pub mod content;
pub mod fit;
pub mod grading;
pub mod interp;
pub mod qc;
pub mod render;
pub mod rpoly;
pub mod solver;
pub mod tilde;
pub mod verify;

pub use rpoly::RPoly;
pub use content::{content_fit, ContentMonomial, ContentPoly};
pub use fit::{fit_structure_function, FitSide, MonomialExpansion, SymFunFit};
pub use grading::{grade, grade_row, grade_tilde, GradedComponent, Grading, GradingViolation};
pub use interp::{interpolation_oracle_k, interpolation_oracle_k_zeta_eta};
pub use qc::{from_basis, to_basis, Basis};
pub use render::{generator_text, render_csv, render_text, PolyDoc, TermDoc};
pub use solver::{alpha_beta, BlockReport, Kerov, SolveReport, Support};
pub use tilde::{kerov_from_tilde, kerov_tilde};
pub use verify::{verify, ClaimResult, ClaimStatus, VerifyConfig, CLAIMS};

use crate::cumulants::CumulantError;
use crate::exact::ExactError;
use crate::jack::JackError;
use crate::partitions::{Partition, PartitionError};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum KerovError {
    #[error("μ = {0} has a part equal to 1")]
    PartOne(Partition),
    #[error("no unique solution for K_{mu} in weight {weight}: {source}")]
    Unsolvable { mu: Partition, weight: u32, source: ExactError },
    #[error("the system for K_{mu} is inconsistent: {detail}")]
    Inconsistent { mu: Partition, detail: String },
    #[error("rank deficiency: {0}")]
    RankDeficient(String),
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Jack(#[from] JackError),
    #[error(transparent)]
    Cumulant(#[from] CumulantError),
    #[error("unknown claim {0:?}")]
    UnknownClaim(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
}
