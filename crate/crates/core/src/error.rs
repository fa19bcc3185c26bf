use thiserror::Error;

use crate::hopf::AlgebraId;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("blocks overlap on element {0}")]
    OverlappingBlocks(u32),
    #[error("ground set is not {{1..{n}}}: element {missing} is missing")]
    GapInGroundSet { n: u32, missing: u32 },
    #[error("empty block")]
    EmptyBlock,
    #[error("element 0 is not a valid label; ground sets start at 1")]
    ZeroElement,
    #[error("algebra mismatch: {left} vs {right}")]
    AlgebraMismatch { left: AlgebraId, right: AlgebraId },
    #[error("operation not defined in {0}")]
    WrongAlgebra(AlgebraId),
    #[error("index out of range: {0}")]
    OutOfRange(String),
    #[error("truncation mismatch: {0:?} vs {1:?}")]
    TruncationMismatch([u32; 3], [u32; 3]),
    #[error("exponential of a series with nonzero constant term")]
    NonzeroConstantTerm,
    #[error("no value supplied for generator {0}")]
    MissingValue(String),
    #[error("invalid rational literal {0:?}")]
    BadRational(String),
    #[error("invalid operator word {0:?}")]
    BadWord(String),
    #[error("json: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
