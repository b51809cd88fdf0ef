use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("probability {0} is outside [0, 1]")]
    InvalidProbability(f64),

    #[error("radius must be positive and finite, got {0}")]
    InvalidRadius(f64),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("degree {degree} is out of range 1..={max_dim}")]
    DegreeOutOfRange { degree: usize, max_dim: usize },

    #[error("betti number in degree {degree} needs faces up to dimension {needed}, complex capped at {max_dim}")]
    InsufficientDimension {
        degree: usize,
        needed: usize,
        max_dim: usize,
    },

    #[error("pattern on {0} vertices exceeds the supported maximum of 9")]
    PatternTooLarge(usize),

    #[error("mu is only defined for k >= 3, got k = {0}")]
    MuUnavailable(usize),

    #[error("invalid regime: {0}")]
    InvalidRegime(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
