use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid edge: {0}")]
    InvalidEdge(String),
    #[error("invalid morphism: {0}")]
    InvalidMorphism(String),
    #[error("morphisms are not composable: {0}")]
    NotComposable(String),
    #[error("arity mismatch: expected {expected}, got {actual}")]
    ArityMismatch { expected: usize, actual: usize },
    #[error("invalid map in target category: {0}")]
    InvalidTargetMap(String),
    #[error("out of bounds: {0}")]
    OutOfBounds(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("invalid operad: {0}")]
    InvalidOperad(String),
    #[error("invalid presheaf: {0}")]
    InvalidPresheaf(String),
    /// A construction that must succeed on valid input did not.
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
