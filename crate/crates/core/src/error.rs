use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed or inconsistent input.
    #[error("input error: {0}")]
    Input(String),
    /// A mathematical hypothesis required by the operation does not hold.
    #[error("precondition failed: {0}")]
    Precondition(String),
    /// The instance needs numbers outside the rationals.
    #[error("unsupported over the rationals: {0}")]
    Unsupported(String),
    /// A certificate that should hold for every valid instance failed.
    #[error("internal consistency error: {0}")]
    Internal(String),
}

impl Error {
    pub fn input(msg: impl Into<String>) -> Error {
        Error::Input(msg.into())
    }

    pub fn precondition(msg: impl Into<String>) -> Error {
        Error::Precondition(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
