use thiserror::Error;

use crate::peak::DsRelation;

/// Errors raised by the core library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ambient mismatch: [{left}] vs [{right}]")]
    AmbientMismatch { left: u32, right: u32 },

    #[error("ambient {0} exceeds the supported maximum of 62")]
    AmbientTooLarge(u32),

    #[error("element {element} lies outside the ground set [{ambient}]")]
    OutOfRange { element: u32, ambient: u32 },

    #[error("invalid composition: {0}")]
    InvalidComposition(String),

    #[error("subset {0} is not left sparse")]
    NotLeftSparse(String),

    #[error("subset {0} is not right sparse")]
    NotRightSparse(String),

    #[error("invalid cd-word {0:?}")]
    InvalidWord(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("poset validation failed: {0}")]
    InvalidPoset(String),

    #[error("elements {0} and {1} are not comparable")]
    Incomparable(String, String),

    #[error("element is not in the peak algebra; violated relation: {0}")]
    NotInPeakAlgebra(DsRelation),

    #[error("not expressible in c and d: {0}")]
    NotCdExpressible(String),

    #[error("poset is not Eulerian: mu({x}, {y}) = {mu}, expected {expected}")]
    NotEulerian {
        x: String,
        y: String,
        mu: i64,
        expected: i64,
    },

    #[error("degree-0 component cannot be expanded in a cd-word basis")]
    DegreeZero,

    #[error("element is not homogeneous")]
    NotHomogeneous,

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("internal invariant breached: {0}")]
    Internal(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Coarse classification of an [`Error`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// Malformed or out-of-range input.
    Validation,
    /// Well-formed input that fails a mathematical requirement, such as
    /// membership in the peak algebra.
    Precondition,
    /// A broken internal invariant.
    Internal,
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::NotInPeakAlgebra(_)
            | Error::NotCdExpressible(_)
            | Error::NotEulerian { .. }
            | Error::DegreeZero => ErrorKind::Precondition,
            Error::Internal(_) => ErrorKind::Internal,
            _ => ErrorKind::Validation,
        }
    }
}
