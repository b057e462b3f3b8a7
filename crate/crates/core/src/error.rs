use thiserror::Error;

/// Errors raised by the exact and numeric kernels.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero divisor")]
    ZeroDivisor,

    #[error("beyond truncation: index {index} exceeds N_max = {n_max}")]
    BeyondTruncation { index: usize, n_max: usize },

    #[error("truncation exceeded: {0}")]
    TruncationExceeded(String),

    #[error("non-invertible series")]
    NonInvertible,

    #[error("not a delta operator: {0}")]
    NotDelta(String),

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: String, right: String },

    #[error("not diagonal")]
    NotDiagonal,

    #[error("invalid psi sequence: {0}")]
    InvalidPsi(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("degenerate deformation")]
    DegenerateDeformation,

    #[error("modulus not PSD for this q")]
    NotPsd,

    #[error("invalid spin: {0}")]
    InvalidSpin(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
