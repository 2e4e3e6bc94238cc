//! Error type shared by every module. Positions in messages are 1-based.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid R-set: {0}")]
    InvalidRSet(String),
    #[error("invalid tuple: {0}")]
    InvalidTuple(String),
    #[error("tuple is not upper: entry {value} at position {position} is below {position}")]
    NotUpper { position: usize, value: usize },
    #[error("tuple is not R-increasing at position {0}")]
    NotRIncreasing(usize),
    #[error("tuple is not gapless at the divider after position {0}")]
    NotGapless(usize),
    #[error("not an R-permutation: {0}")]
    NotPermutation(String),
    #[error("permutation {0} is R-312-containing")]
    R312Containing(String),
    #[error("invalid critical list: {0}")]
    InvalidCriticalList(String),
    #[error("critical list is not a flag critical list at the divider after position {0}")]
    NotFlagCritical(usize),
    #[error("invalid chain: {0}")]
    InvalidChain(String),
    #[error("R-set mismatch: expected {expected}, found {found}")]
    RSetMismatch { expected: String, found: String },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("tableau is not a key: {0}")]
    NotAKey(String),
    #[error("variable count mismatch: {0} vs {1}")]
    VariableMismatch(usize, usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown name: {0}")]
    Unknown(String),
    #[error("internal error: {0}")]
    Internal(String),
}
