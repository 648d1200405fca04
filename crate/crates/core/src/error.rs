use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed element: {0}")]
    MalformedElement(String),

    #[error("not a metagroup: {0}")]
    NotAMetagroup(String),

    #[error("not a central metagroup: {0}")]
    NotCentral(String),

    #[error("reassociation failure: {0}")]
    ReassociationFailure(String),

    #[error("a non-identity permutation requires a central metagroup")]
    PermutationNeedsCentral,

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("invalid group table: {0}")]
    InvalidGroup(String),

    #[error("ring incompatibility: {0}")]
    RingIncompatible(String),

    #[error("resource cap exceeded: {0}")]
    CapExceeded(String),

    #[error("not a cocycle: {0}")]
    NotACocycle(String),

    #[error("not a complex: {0}")]
    NotAComplex(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("bad input: {0}")]
    BadInput(String),
}
