//! Error type shared by the whole crate.

use std::time::Duration;

/// Errors reported by graph construction, parsing, and the solvers.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A parameter or vertex set violates a documented precondition.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Malformed edge-list text.
    #[error("parse error: {0}")]
    Parse(String),

    /// The operation requires a connected graph.
    #[error("graph is not connected")]
    Disconnected,

    /// The instance exceeds a configured solver cap.
    #[error("resource cap exceeded: {0}")]
    ResourceCap(String),

    /// A solver ran past its configured time limit.
    #[error("time limit of {0:?} exceeded")]
    TimeLimit(Duration),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }
}
