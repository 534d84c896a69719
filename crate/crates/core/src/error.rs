use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex index {index} out of range for a graph with {n_vertices} vertices")]
    IndexOutOfRange { index: usize, n_vertices: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("dimension {n} out of range: {op} requires {requirement}")]
    DimensionOutOfRange {
        op: &'static str,
        n: usize,
        requirement: &'static str,
    },

    #[error("{op} is limited to graphs with at most {cap} vertices (got {n_vertices})")]
    Capacity {
        op: &'static str,
        cap: usize,
        n_vertices: usize,
    },

    #[error("invalid connection table: {0}")]
    ConnectionTable(String),

    #[error("group mismatch: cannot combine {left} with {right}")]
    GroupMismatch { left: String, right: String },

    #[error("malformed graph: {0}")]
    MalformedGraph(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("certification failed: {0}")]
    Certification(String),

    #[error("internal construction error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn require_dimension(
    op: &'static str,
    n: usize,
    min: usize,
    requirement: &'static str,
) -> Result<()> {
    if n < min {
        Err(Error::DimensionOutOfRange { op, n, requirement })
    } else {
        Ok(())
    }
}
