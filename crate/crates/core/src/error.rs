use thiserror::Error;

use crate::embedding::{EdgeId, VertexId};

#[derive(Debug, Error)]
pub enum Error {
    /// The combinatorial data does not describe a valid embedding scheme.
    #[error("invalid embedding: {0}")]
    Invalid(String),

    /// An operation was invoked outside its stated precondition.
    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("unknown edge {0}")]
    UnknownEdge(EdgeId),

    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),

    /// Exact solvers refuse ground sets above the configured cap.
    #[error("ground set of size {size} exceeds exact solver cap {cap}")]
    SizeCap { size: usize, cap: usize },

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// The seeded generator could not satisfy the requested filters.
    #[error("instance generator exhausted its retry budget: {0}")]
    Exhausted(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}
