use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at {param} = 1 in {value}")]
    PoleAtSpecialization { param: &'static str, value: String },
    #[error("invalid Fock dimension {0} (need at least 3)")]
    InvalidDimension(usize),
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("L({0}) has no Fock image (need n >= -1)")]
    UnsupportedIndex(i64),
    #[error("guard violation: {0}")]
    GuardViolation(String),
    #[error("tensor arity mismatch: {0} vs {1}")]
    ArityMismatch(usize, usize),
    #[error("T has no Fock image")]
    NoFockImage,
}
