use thiserror::Error;

/// Errors raised by graph, polynomial, class and counting operations.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("not connected")]
    NotConnected,

    #[error("invalid family size: {family} requires n >= {min}, got {n}")]
    InvalidFamilySize {
        family: &'static str,
        min: usize,
        n: usize,
    },

    #[error("not a sphere embedding: {0}")]
    NotSphereEmbedding(String),

    #[error("invalid rotation system: {0}")]
    InvalidRotation(String),

    #[error("variable count mismatch: {0} vs {1}")]
    VarCountMismatch(usize, usize),

    #[error("not variable-disjoint")]
    NotVariableDisjoint,

    #[error("invalid polynomial: {0}")]
    InvalidPolynomial(String),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("point length {got} does not match variable count {expected}")]
    PointLength { expected: usize, got: usize },

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("inexact division: {0}")]
    InexactDivision(String),

    #[error("class identity defect: {0}")]
    Defect(String),

    #[error("domain too large: {0}")]
    DomainTooLarge(String),

    #[error("{0}")]
    Input(String),
}

pub type Result<T> = std::result::Result<T, Error>;
