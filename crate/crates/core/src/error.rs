use thiserror::Error;

/// Errors raised by the numerical layer.
///
/// Verification failures are never reported through this type; they are
/// data carried in reports.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("division by the zero quaternion")]
    ZeroDivision,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("cardinality mismatch: {left} vectors vs {right} vectors")]
    CardinalityMismatch { left: usize, right: usize },
    #[error("operator is singular (largest available pivot {pivot:e})")]
    Singular { pivot: f64 },
    #[error("operator is not positive")]
    NotPositive,
    #[error("operator is not self-adjoint (deviation {deviation:e})")]
    NotSelfAdjoint { deviation: f64 },
    #[error("complex embedding eigenvalues do not pair up (gap {gap:e} at index {index})")]
    PairingFailure { index: usize, gap: f64 },
    #[error("family is not a frame (lower bound {lower:e})")]
    NotAFrame { lower: f64 },
    #[error("controller is not invertible")]
    ControllerNotInGL,
    #[error("weights must be strictly positive")]
    NonPositiveWeights,
    #[error("symbol mixes signs or contains zeros")]
    MixedSignSymbol,
    #[error("symbol is not semi-normalized")]
    NotSemiNormalized,
    #[error("frame generation exhausted {attempts} attempts")]
    GenerationExhausted { attempts: usize },
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
