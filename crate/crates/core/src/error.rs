//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by the market model and its numerical substrate.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument lies outside the operation's domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// Bisection was started on an interval without a sign change.
    #[error("bracketing error: no sign change of g on [{lo}, {hi}]")]
    NoBracket { lo: f64, hi: f64 },

    /// A requested incentive target is not the incentive of any closed
    /// market (conservation or compatibility residual too large).
    #[error("inconsistent target: residual {residual:e} exceeds tolerance {tolerance:e}")]
    InconsistentTarget { residual: f64, tolerance: f64 },

    /// An internal quantity left its mathematically guaranteed range.
    #[error("internal consistency violation: {0}")]
    Inconsistency(String),

    /// The operation is undefined for the given inputs.
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// A parameter-sweep cell failed; coordinates identify the cell.
    #[error("sweep cell (m={m}, epsilon={epsilon}) failed: {source}")]
    SweepCell {
        m: f64,
        epsilon: f64,
        #[source]
        source: Box<Error>,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
