use thiserror::Error;

/// Errors raised by the numerical core.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// A precondition of an operation was violated by the caller.
    #[error("contract violation: {0}")]
    Contract(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// The implicit QL iteration did not deflate the given eigenvalue.
    #[error("eigensolver did not converge for eigenvalue index {index} after {iterations} sweeps")]
    NoConvergence { index: usize, iterations: usize },

    /// Column sign of a Wigner d-matrix could not be fixed.
    #[error("sign calibration failed for column {column}: {reason}")]
    SignCalibration { column: usize, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn contract<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Contract(msg.into()))
}
