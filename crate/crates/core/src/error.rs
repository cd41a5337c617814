//! Error types shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum AlgebraError {
    #[error("element width {got} does not match algebra atom count {expected}")]
    WidthMismatch { expected: usize, got: usize },
    #[error("dimension index {index} out of range for dimension {dim}")]
    DimensionOutOfRange { index: usize, dim: usize },
    #[error("operation budget exceeded: {what} would exceed {limit}")]
    BudgetExceeded { what: String, limit: usize },
    #[error("invalid structure: {0}")]
    InvalidStructure(String),
    #[error("unsupported parameters: {0}")]
    Unsupported(String),
}

#[derive(Debug, Error)]
pub enum GameError {
    #[error("illegal move: {0}")]
    IllegalMove(String),
    #[error("no response available: {0}")]
    NoResponse(String),
    #[error("strategy not applicable: {0}")]
    NotApplicable(String),
    #[error("book exhausted: {0}")]
    BookExhausted(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
