use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("inexact division: {0}")]
    InexactDivision(String),
    #[error("not a transjective object: {0}")]
    NotTransjective(String),
    #[error("recognition failed: {0}")]
    RecognitionFailed(String),
    #[error("not a module: {0}")]
    NotAModule(String),
    #[error("internal mismatch: {0}")]
    InternalMismatch(String),
    #[error("graph mismatch: {0}")]
    GraphMismatch(String),
    #[error("section search exhausted: {0}")]
    SectionSearchExhausted(String),
    #[error("cap exceeded: {0}")]
    CapExceeded(String),
    #[error("interpolation inconsistent: {0}")]
    InterpolationInconsistent(String),
    #[error("degenerate sample: {0}")]
    DegenerateSample(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
