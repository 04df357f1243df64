use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    Domain { vertex: usize, n: usize },

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("contract violation: {0}")]
    Contract(String),

    /// An exponential subroutine would exceed its configured cap.
    #[error("resource cap exceeded: {what} ({observed} > {limit}); {partial}")]
    Resource {
        what: &'static str,
        observed: usize,
        limit: usize,
        partial: String,
    },

    #[error("brute-force oracle limited to {cap} vertices, graph has {n}")]
    Scale { n: usize, cap: usize },

    #[error("configuration error: {0}")]
    Config(String),

    #[error("search budget of {0} nodes exhausted")]
    Budget(u64),
}
