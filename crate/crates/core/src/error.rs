//! Error type shared by every module of the crate.

use thiserror::Error;

use crate::group::ScaleId;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// An element tagged with one scale was handed to an operation of another.
    #[error("scale mismatch: expected {expected}, found {found}")]
    ScaleMismatch { expected: ScaleId, found: ScaleId },

    /// A value fell outside the open domain of its scale. Domains are open
    /// intervals; boundary values are rejected, never clamped.
    #[error("value {value} is outside the open domain ({lo}, {hi}) of scale {scale}")]
    Domain {
        value: f64,
        lo: f64,
        hi: f64,
        scale: ScaleId,
    },

    /// Interval endpoints given in the wrong order (beyond tolerance).
    #[error("interval endpoints out of order: lo {lo} > hi {hi}")]
    OrderViolation { lo: f64, hi: f64 },

    /// An operation required a reciprocal matrix and the input was not.
    #[error("matrix is not reciprocal")]
    NotReciprocal,

    /// Matrix order below the minimum the operation is defined for.
    #[error("matrix order {n} is below the minimum {min} for this operation")]
    OrderTooSmall { n: usize, min: usize },

    /// Exhaustive permutation search refused to run above the cap.
    #[error("matrix order {n} exceeds the permutation search cap {cap}")]
    OrderTooLargeForSearch { n: usize, cap: usize },

    #[error("empty input")]
    EmptyInput,

    #[error("{0}")]
    InvalidArgument(String),

    /// A matrix file parsed as JSON but violated the expected layout.
    #[error("invalid matrix file: {0}")]
    Format(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
