use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid grid extent: {0}")]
    InvalidExtent(String),
    #[error("unsupported order: {0}")]
    UnsupportedOrder(String),
    #[error("no positive optimal weights exist at xi = {xi}")]
    NoPositiveWeights { xi: f64 },
    #[error("inadmissible state: {0}")]
    InadmissibleState(String),
    #[error("solution blew up at step {step} (t = {time:.6e}): {detail}")]
    BlowUp {
        step: usize,
        time: f64,
        detail: String,
    },
    #[error("unknown problem `{0}`")]
    UnknownProblem(String),
    #[error("missing reference solution: {0}")]
    MissingReference(String),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
