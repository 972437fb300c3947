use thiserror::Error;

/// Errors surfaced by the library.
///
/// Search budgets do not produce errors; exhausting a budget yields an
/// `Unknown` verdict on the relevant check instead. `Internal` is reserved
/// for conditions that contradict a proved implication and should never
/// occur on correct inputs.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("size limit exceeded: {0}")]
    SizeLimit(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}
