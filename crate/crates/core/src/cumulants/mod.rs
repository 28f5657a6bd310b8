//! Anisotropic diagrams, their transition measure, and the three cumulant
//! families attached to it.

pub mod conversions;
pub mod corners;
pub mod delta;
pub mod identities;
pub mod moments;

pub use conversions::convert;
pub use corners::{corners, Corners};
pub use delta::{add_node_delta, BTable, BTableCache};
pub use identities::identity_suite;
pub use moments::{cumulants_from_moments, free_cumulants, moment_series, moments_via_probabilities, CumKind, CumulantVector};

use crate::exact::ExactError;
use crate::jack::JackError;
use crate::symfun::SymError;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum CumulantError {
    #[error(transparent)]
    Jack(#[from] JackError),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Sym(#[from] SymError),
    #[error("invariant violated: {0}")]
    Invariant(String),
}
