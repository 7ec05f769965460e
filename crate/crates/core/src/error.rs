use thiserror::Error;

/// Every failure the library reports.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial is not symmetric under q -> 1/q: {0}")]
    NotSymmetric(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid rank {rank} for family {family}")]
    BadRank { family: String, rank: usize },
    #[error("unknown vertex {0}")]
    UnknownVertex(usize),
    #[error("invalid edge: {0}")]
    InvalidEdge(String),
    #[error("diagram is not a tree")]
    NotATree,
    #[error("tail shape violated: {0}")]
    ShapeViolation(String),
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("block relation AB = 2C does not hold")]
    PreconditionABneq2C,
    #[error("not an affine ADE type: {0}")]
    BadType(String),
    #[error("index {0} out of range")]
    IndexOutOfRange(i64),
    #[error("{0} is not a perfect square")]
    NotASquare(i128),
    #[error("braids have different strand counts ({0} vs {1})")]
    StrandMismatch(usize, usize),
    #[error("braid is not pure")]
    NotPure,
    #[error("no Alexander-Conway polynomial known for closure: {0}")]
    UnknownClosure(String),
    #[error("division by the zero polynomial")]
    ZeroDenominator,
}

pub type Result<T> = std::result::Result<T, Error>;
