use alloc::string::String;

/// Errors raised when building or combining structural objects.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("a structural system needs at least one state")]
    NoStates,
    #[error("vertex {index} out of range for {size} vertices")]
    VertexOutOfRange { index: usize, size: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("invalid cost {0}: costs must be nonnegative")]
    InvalidCost(f64),
    #[error("input column {column} out of range for {columns} columns")]
    ColumnOutOfRange { column: usize, columns: usize },
    #[error("instance has {n} states, above the exhaustive-search limit of {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("placement does not match the digraph: {0}")]
    Inconsistent(String),
}
