use thiserror::Error;

use crate::graph::Vertex;

/// Errors raised by graph construction, the algorithms and the searches.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("vertex {0} is not in the graph")]
    UnknownVertex(Vertex),

    #[error("self-loop on vertex {0}")]
    SelfLoop(Vertex),

    #[error("edge {0}-{1} is not in the graph")]
    UnknownEdge(Vertex, Vertex),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("replay failed at choice {index}: {message}")]
    Replay { index: usize, message: String },

    #[error("{what} cap of {cap} exceeded after exploring {explored}")]
    CapExceeded {
        what: &'static str,
        cap: u64,
        explored: u64,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
