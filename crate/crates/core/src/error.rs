use thiserror::Error;

use crate::subset::Subset;

/// Every failure mode of the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("the family of bases is empty")]
    EmptyBases,
    #[error("bases have different cardinalities ({first} and {other})")]
    UnequalCardinality { first: usize, other: usize },
    #[error("basis exchange fails: removing {x} from {b1} admits no replacement from {b2}")]
    ExchangeFailure { b1: Subset, b2: Subset, x: usize },
    #[error("subset {subset} is not contained in the ground set of size {size}")]
    NotInGroundSet { subset: Subset, size: usize },
    #[error("rank {rank} exceeds ground set size {size}")]
    InvalidRank { rank: usize, size: usize },
    #[error("vertex index {vertex} out of range for a graph on {num_vertices} vertices")]
    BadVertexIndex { vertex: usize, num_vertices: usize },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("matrix rows have inconsistent lengths")]
    RaggedMatrix,
    #[error("unknown named matroid {0:?}")]
    UnknownName(String),
    #[error("element {element} out of range for a ground set of size {size}")]
    ElementOutOfRange { element: usize, size: usize },
    #[error("ground set of size {size} exceeds the limit of {limit} for this operation")]
    GroundSetTooLarge { size: usize, limit: usize },
    #[error("{0} is not a flat")]
    NotAFlat(Subset),
    #[error("matroid has a loop (element {0})")]
    HasLoop(usize),
    #[error("operation requires a nonempty ground set")]
    EmptyGroundSet,
    #[error("division by (t - 1) left a nonzero remainder")]
    NonzeroRemainder,
    #[error("sequence is empty")]
    EmptySequence,
    #[error("sequence has a negative entry at index {0}")]
    NegativeEntry(usize),
    #[error("matroid is not simple")]
    NotSimple,
    #[error("row space has {points} points, above the enumeration limit {limit}")]
    TooManyPoints { points: u128, limit: u128 },
    #[error("Chow ring too large: {monomials} chain monomials in degree {degree} (limit {limit})")]
    TooLarge { degree: usize, monomials: usize, limit: usize },
    #[error("fan has more than {limit} cones")]
    TooManyCones { limit: usize },
    #[error("product of degrees {left} + {right} exceeds the top degree {top}")]
    DegreeOverflow { left: usize, right: usize, top: usize },
    #[error("expected an element of degree {expected}, got degree {actual}")]
    WrongDegree { expected: usize, actual: usize },
    #[error("degree map is inconsistent: {0}")]
    InconsistentDegree(String),
    #[error("fan is not the Bergman fan of a matroid: {0}")]
    NotAMatroidFan(String),
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
