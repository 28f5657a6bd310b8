//! Jack polynomials through their power-sum coefficients.

pub mod hooks;
pub mod mode;
pub mod oracle;
pub mod pieri;
pub mod theta;

pub use hooks::{hooks, HookPair};
pub use mode::Mode;
pub use oracle::oracle_gram_schmidt;
pub use pieri::{pieri, PieriRow};
pub use theta::{theta_all, vartheta, ThetaTable, ThetaTower};

use crate::exact::ExactError;
use crate::partitions::{Partition, PartitionError};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum JackError {
    #[error("pole at the evaluation point: {factor} vanishes")]
    Pole { factor: String },
    #[error("singular 2x2 system for parent {lambda}")]
    Singular { lambda: Partition },
    #[error("|mu| > |lambda| for mu = {mu}, lambda = {lambda}")]
    WeightTooLarge { mu: Partition, lambda: Partition },
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error(transparent)]
    Exact(#[from] ExactError),
}
