use thiserror::Error;

use crate::types::{EdgeId, VertexId};

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Violations of the finite path invariants.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PathError {
    #[error("path with {edges} edges needs {} vertices, got {vertices}", edges + 1)]
    LengthMismatch { vertices: usize, edges: usize },
    #[error("edge {0} is visited twice")]
    RepeatedEdge(EdgeId),
    #[error("cannot join paths: expected vertex {expected}, found {found}")]
    EndpointMismatch { expected: VertexId, found: VertexId },
    #[error("paths share edge {0}")]
    SharedEdge(EdgeId),
    #[error("edge {edge} at position {position} does not join the adjacent vertices")]
    NotIncident { position: i64, edge: EdgeId },
    #[error("edge {0} is not an edge of the graph")]
    UnknownEdge(EdgeId),
    #[error("vertex {0} is not a vertex of the graph")]
    UnknownVertex(VertexId),
    #[error("path tokens must alternate vertex, edge, ..., vertex (got {0} tokens)")]
    TokenCount(usize),
}

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Path(#[from] PathError),
    #[error("{0}")]
    Domain(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("presentation violates: {}", .0.join("; "))]
    Validation(Vec<String>),
    #[error("{0}")]
    Usage(String),
    #[error("brute force is limited to {limit} edges, graph has {edges}")]
    SizeGuard { limit: usize, edges: usize },
    #[error("step budget exhausted after {0} steps")]
    Exhausted(u64),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
