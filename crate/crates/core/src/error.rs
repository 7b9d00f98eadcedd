use thiserror::Error;

use crate::catalog::ModuleTriple;

/// Everything that can go wrong between reading a quiver and printing counts.
///
/// Variants fall into three groups (see [`ErrorKind`]): bad input, inputs of
/// an unsupported representation type, and internal invariant breaches that
/// indicate a bug rather than a user mistake.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("quiver has no vertices")]
    Empty,
    #[error("arrow {index} has endpoint {vertex} outside 0..{vertex_count}")]
    VertexOutOfRange {
        index: usize,
        vertex: usize,
        vertex_count: usize,
    },
    #[error("quiver has a directed cycle through vertex {0}")]
    CyclicQuiver(usize),
    #[error("underlying graph is disconnected")]
    Disconnected,
    #[error("underlying graph is neither Dynkin nor extended Dynkin: {0}")]
    Unsupported(String),
    #[error("vertex {0} is neither a sink nor a source")]
    NotSinkOrSource(usize),
    #[error("bad preset name {0:?}")]
    BadPreset(String),
    #[error("could not parse {what}: {detail}")]
    Parse { what: &'static str, detail: String },
    #[error("{0} orientations requested; the sweep is capped at 12 edges")]
    TooManyOrientations(usize),

    #[error("matrix is not unimodular (determinant {0})")]
    NonUnimodular(i128),
    #[error("orbit walk from {0:?} did not close within {1} steps")]
    OrbitOverflow(Vec<i64>, usize),
    #[error("restricted walk at vertex {vertex} exceeded {cap} steps")]
    LoopOverflow { vertex: usize, cap: usize },
    #[error("triple {0} is not in the catalog")]
    IndexOutOfCatalog(ModuleTriple),
    #[error("mutation at position {position} found {found} candidates")]
    CardinalityViolation { position: usize, found: usize },
    #[error("the zero module was never reached from the projective generator")]
    SinkUnreachable,
    #[error("graph has a directed cycle")]
    CycleDetected,
    #[error("frozen rows are not sign-coherent at vertex {0}")]
    SignIncoherence(usize),
    #[error("internal invariant violated: {0}")]
    InternalInvariant(String),
}

/// Coarse grouping of [`Error`] used for exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    BadInput,
    Unsupported,
    Internal,
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Empty
            | Error::VertexOutOfRange { .. }
            | Error::CyclicQuiver(_)
            | Error::Disconnected
            | Error::NotSinkOrSource(_)
            | Error::BadPreset(_)
            | Error::Parse { .. }
            | Error::TooManyOrientations(_) => ErrorKind::BadInput,
            Error::Unsupported(_) => ErrorKind::Unsupported,
            _ => ErrorKind::Internal,
        }
    }

    pub(crate) fn invariant(msg: impl Into<String>) -> Self {
        Error::InternalInvariant(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
