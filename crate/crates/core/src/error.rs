use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument violated the operation's precondition.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    /// The integer sequence is not a quiddity cycle.
    #[error("not a quiddity cycle: {0}")]
    NotACycle(String),
    /// A fundamental-domain cell is not a triangle.
    #[error("arrangement is not simplicial: {0}")]
    NotSimplicial(String),
    /// A mathematical guarantee failed to hold; indicates a bug.
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
}

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}
