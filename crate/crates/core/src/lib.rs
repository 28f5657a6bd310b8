//! Exact computation of Jack characters, anisotropic free cumulants and
//! Kerov-type polynomials.

pub mod cumulants;
pub mod exact;
pub mod jack;
pub mod kerov;
pub mod partitions;
pub mod symfun;

/// Identifies the algorithms behind every computed artifact; cached results
/// from another version are never reused.
pub const ENGINE_VERSION: &str = concat!("kerov-core/", env!("CARGO_PKG_VERSION"));
