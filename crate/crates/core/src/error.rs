use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SsbError {
    #[error("non-admissible presentation: {0}")]
    NonAdmissible(String),
    #[error("algebra is not finite dimensional below path length {0}")]
    NotFiniteDimensional(usize),
    #[error("rewriting system is not confluent: {0}")]
    NonConfluent(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("algebra is not symmetric: {0}")]
    NotSymmetric(String),
    #[error("operation undefined in characteristic zero")]
    CharZero,
    #[error("subspace is not an ideal: {0}")]
    NotAnIdeal(String),
    #[error("unsupported degree {degree}: {reason}")]
    UnsupportedDegree { degree: usize, reason: String },
    #[error("d o d is nonzero at degree {0}")]
    ComplexCheckFailed(usize),
    #[error("resolution is not exact at degree {0}")]
    ExactnessFailure(usize),
    #[error("characteristic {0} not supported here")]
    CharUnsupported(u64),
    #[error("no square root of -1 in characteristic {0}")]
    NoSquareRoot(u64),
    #[error("algebra too large for this oracle: dimension {dim} exceeds {limit}")]
    TooLarge { dim: usize, limit: usize },
    #[error("parse error at {line}:{col}: {msg}")]
    ParseError { line: usize, col: usize, msg: String },
    #[error("validation error: {0}")]
    ValidationError(String),
}

impl SsbError {
    /// Exit code used by the command line tool.
    pub fn exit_code(&self) -> i32 {
        match self {
            SsbError::ParseError { .. } | SsbError::ValidationError(_) | SsbError::InvalidParams(_) => 2,
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, SsbError>;
