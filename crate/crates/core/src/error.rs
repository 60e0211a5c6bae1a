use thiserror::Error;

/// Errors for operations whose preconditions depend on runtime data.
///
/// Contract violations that indicate a caller bug (mismatched series
/// truncations, non-secondary colour passed to a secondary-only
/// operation) panic instead of returning `Err`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
