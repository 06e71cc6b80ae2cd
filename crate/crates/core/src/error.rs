use thiserror::Error;

/// Errors produced by the statistical routines.
#[derive(Debug, Error)]
pub enum Error {
    /// An input cell was NaN or infinite.
    #[error("non-finite value at row {row}, column {column}")]
    NonFinite { row: usize, column: usize },

    /// Structurally invalid input (shape, emptiness, ordering).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A parameter is outside its admissible range.
    #[error("domain error: {0}")]
    Domain(String),
}

pub type Result<T> = std::result::Result<T, Error>;
