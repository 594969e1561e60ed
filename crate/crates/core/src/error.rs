use thiserror::Error;

/// Errors raised by the library. Every fallible operation returns [`Result`].
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Input violates an operation's precondition (wrong class, bad index, ...).
    #[error("domain error: {0}")]
    Domain(String),
    /// Matrix or vector dimensions do not line up.
    #[error("shape mismatch: {0}")]
    Shape(String),
    /// A well-formed request outside what the library can compute.
    #[error("unsupported: {0}")]
    Unsupported(String),
    /// Malformed textual input (rationals, JSON documents).
    #[error("parse error: {0}")]
    Parse(String),
    /// An equivariant page failed the commutation check at a cell.
    #[error("action does not commute with d2 at cell ({p},{q})")]
    NotEquivariant { p: usize, q: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
