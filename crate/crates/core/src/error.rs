use thiserror::Error;

use crate::VertexId;

#[derive(Debug, Error)]
pub enum Error {
    #[error("edge {index} ({src} -> {dst}) references a vertex outside [0, {num_vertices})")]
    VertexOutOfRange { index: usize, src: VertexId, dst: VertexId, num_vertices: usize },

    #[error("edge list has {edges} edges but {weights} weights")]
    WeightCountMismatch { edges: usize, weights: usize },

    #[error("graph too large: {0}")]
    TooLarge(String),

    #[error("invalid CSR: {0}")]
    InvalidCsr(String),

    #[error("matrix market parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid generator parameters: {0}")]
    InvalidParams(String),

    #[error("usage error: {0}")]
    Usage(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
