use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// Parameter combinations outside the valid Grover domain
    /// (`n >= 1`, `f >= 1`, `1 <= n_s < 2^n`).
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    /// Malformed scalar inputs (non-finite reals, nonpositive thresholds).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Two fixed-point operands were combined without a common fractional-bit
    /// count.
    #[error("fractional-bit mismatch: {lhs} vs {rhs}")]
    FracBitsMismatch { lhs: u32, rhs: u32 },

    /// A ratio or calibration was requested on a record set that lacks the
    /// required grid points.
    #[error("insufficient data: {0}")]
    InsufficientData(String),

    /// A state-vector run was requested above the configured qubit cap.
    #[error("resource limit: {0}")]
    ResourceLimit(String),
}

pub type Result<T> = std::result::Result<T, Error>;
