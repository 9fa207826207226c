use thiserror::Error;

/// Errors produced by the polyomino pipelines.
///
/// The variants are grouped by how a caller is expected to react: bad input
/// (`Parse`, `Empty`), unmet preconditions, resource guards, and
/// falsification-level failures where two routes that must agree did not.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("a polyomino needs at least one cell")]
    Empty,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("not a leaf: {0}")]
    NotALeaf(String),

    #[error("invalid collapse step: {0}")]
    InvalidStep(String),

    #[error("insufficient depth: {0}")]
    InsufficientDepth(String),

    #[error("resource guard: {0}")]
    ResourceLimit(String),

    /// Two independent computations that are proven to agree disagreed.
    #[error("falsification: {0}")]
    Falsification(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
