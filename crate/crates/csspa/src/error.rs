use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument fell outside the domain a formula or sampler is defined on.
    #[error("domain error: {0}")]
    Domain(String),

    /// Two scores compared exactly equal. The model has continuous score
    /// distributions, so an exact tie is a probability-zero event and always
    /// indicates a bug rather than a legitimate outcome.
    #[error("exact score tie: {0}")]
    Tie(String),

    /// A strategy broke the rules of the game (broadcast an unsampled
    /// credential, queried while queries were disabled, ...).
    #[error("protocol violation: {0}")]
    Protocol(String),

    /// The requested configuration is valid for the model but not supported
    /// by this component (e.g. lookahead with beta < 1).
    #[error("unsupported configuration: {0}")]
    Unsupported(String),

    /// A work budget (node count, depth x samples, ...) was exceeded.
    #[error("resource budget exceeded: {0}")]
    Resource(String),

    /// A cycle ran past the per-cycle round cap, which suggests the strategy
    /// is not positive recurrent at these parameters.
    #[error("possible non-recurrence: {0}")]
    NonRecurrence(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("serialization failed: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Process exit code for the CLI: 2 for domain/config errors, 3 for
    /// resource/budget errors, 4 for the non-recurrence diagnostic.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Domain(_) | Error::Tie(_) | Error::Protocol(_) | Error::Unsupported(_) => 2,
            Error::Resource(_) | Error::Io(_) | Error::Json(_) => 3,
            Error::NonRecurrence(_) => 4,
        }
    }
}

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
