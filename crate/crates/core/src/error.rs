use std::io;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {message}")]
    Graph6 { offset: usize, message: String },

    #[error("edge list parse error on line {line}: {message}")]
    EdgeList { line: usize, message: String },

    #[error("coloring parse error on line {line}: {message}")]
    Coloring { line: usize, message: String },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    /// A documented precondition of an operation does not hold.
    #[error("contract violation: {0}")]
    Contract(String),

    #[error("{what} exceeds capacity: {value} > {cap}")]
    Capacity {
        what: &'static str,
        value: usize,
        cap: usize,
    },

    #[error("graph is complete: no non-adjacent vertex pair")]
    CompleteGraph,

    #[error("graph has no NAC-coloring")]
    NoNacColoring,

    #[error("search limit of {0} nodes exhausted")]
    SearchLimit(u64),

    #[error("cannot classify edge {u}-{v}: {reason}")]
    Classification { u: usize, v: usize, reason: String },

    #[error("checkpoint {path}: {message}")]
    Checkpoint { path: String, message: String },

    #[error(transparent)]
    Io(#[from] io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn contract(msg: impl Into<String>) -> Self {
        Error::Contract(msg.into())
    }
}
