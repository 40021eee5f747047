//! Error type shared by every module of the crate.

use thiserror::Error;

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("singular matrix")]
    Singular,

    #[error("no value bound for parameter `{0}`")]
    MissingBinding(String),

    #[error("unknown parameter `{0}`")]
    UnknownParameter(String),

    #[error("parameter `{0}` declared twice")]
    DuplicateParameter(String),

    #[error("cannot parse linear form `{input}`: {reason}")]
    FormSyntax { input: String, reason: String },

    #[error("invalid polytope: {0}")]
    InvalidPolytope(String),

    #[error("non-simplicial facet through vertices {vertices:?}")]
    NonSimplicialFacet { vertices: Vec<usize> },

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("cone {vertices:?} is not unimodular (|det| = {det})")]
    NotUnimodular { vertices: Vec<usize>, det: String },

    #[error("vertex set {0:?} is not a maximal cone of the fan")]
    UnknownCone(Vec<usize>),

    #[error("polytope is unbounded in coordinate {0}")]
    Unbounded(usize),

    #[error("no generic sample found after {attempts} draws")]
    SamplingFailed { attempts: usize },

    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

impl Error {
    /// True for errors that indicate a bug or an unlucky sample rather than
    /// bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Inconsistent(_) | Error::SamplingFailed { .. })
    }
}
