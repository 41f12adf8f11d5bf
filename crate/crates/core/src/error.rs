use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed graph6 input; `offset` is the byte position of the problem.
    #[error("parse: byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    /// The request exceeds a size or search budget of the exact algorithms.
    #[error("capacity: {0}")]
    Capacity(String),

    /// Arguments outside the mathematical domain of the operation.
    #[error("domain: {0}")]
    Domain(String),

    /// Missing or inconsistent parameters.
    #[error("usage: {0}")]
    Usage(String),

    #[error("io: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn parse(offset: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            offset,
            message: message.into(),
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}
