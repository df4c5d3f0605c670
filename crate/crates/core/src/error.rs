use thiserror::Error;

/// Errors raised by graph construction, labeling and the solvers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// The edge list does not describe a simple undirected graph.
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    /// A parameter lies outside the operation's domain.
    #[error("parameter out of range: {0}")]
    Domain(String),

    /// An exponential routine was asked to work on an instance above its cap.
    #[error("{operation} is capped at {cap} vertices, got {actual}")]
    SizeCap {
        operation: &'static str,
        cap: usize,
        actual: usize,
    },

    #[error("vertex {0} has no label")]
    MissingLabel(usize),

    #[error("vertex set is not independent: {0} and {1} are adjacent")]
    NotIndependent(usize, usize),

    /// Malformed serialized input (graph, labeling or plan).
    #[error("malformed input: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
