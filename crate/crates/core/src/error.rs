use alloc::string::String;
use alloc::vec::Vec;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("arity mismatch: expected {expected}, found {found}")]
    Arity { expected: usize, found: usize },

    #[error("not a permutation: {0:?}")]
    NotAPermutation(Vec<usize>),

    #[error("index {index} out of range (limit {limit})")]
    OutOfRange { index: usize, limit: usize },

    #[error("shape mismatch: {0}")]
    Shape(String),

    /// A generator matrix violates a Coxeter relation of `S_N`.
    #[error("module `{module}` violates relation {relation}")]
    Relation { module: String, relation: String },

    #[error("invalid module: {0}")]
    InvalidModule(String),

    #[error("vector not in span: {0}")]
    NotInSpan(String),

    #[error("basis is linearly dependent")]
    Dependent,

    #[error("representation-theoretic inconsistency: {0}")]
    Representation(String),

    /// Consecutive differentials do not compose to zero.
    #[error("not a cochain complex: {0}")]
    NotAComplex(String),

    #[error("operator does not commute with the differential: {0}")]
    Commutation(String),

    #[error("dimension {dim} exceeds cap {cap}")]
    CapExceeded { dim: usize, cap: usize },

    #[error("unsupported: {0}")]
    Unsupported(String),
}
