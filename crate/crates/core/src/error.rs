use thiserror::Error;

use crate::solver::IterateRecord;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid solver configuration: {0}")]
    InvalidConfig(String),

    #[error("invalid model parameters: {0}")]
    InvalidModel(String),

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("subproblem solver failed at iteration {iteration} (residual {residual:e}): {reason}")]
    Subproblem {
        iteration: usize,
        residual: f64,
        reason: String,
        /// Records completed before the failure.
        partial_trace: Vec<IterateRecord>,
    },

    #[error("image format error: {0}")]
    Format(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
