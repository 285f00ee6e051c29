use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("line {line}: self-loop on vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },

    #[error("invalid configuration: {0}")]
    Config(String),

    /// An exhaustive routine or dense structure would exceed its size guard.
    #[error("refused: {0}")]
    ResourceGuard(String),

    #[error("LP solver failed: {0}")]
    Solver(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn config(msg: impl Into<String>) -> Self {
        Error::Config(msg.into())
    }

    pub(crate) fn guard(msg: impl Into<String>) -> Self {
        Error::ResourceGuard(msg.into())
    }
}
