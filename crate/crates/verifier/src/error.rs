use thiserror::Error;

#[derive(Debug, Error)]
pub enum VerifierError {
    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),
    #[error("theorem {theorem} has no hypothesis `{name}` (known: {known})")]
    UnknownHypothesis {
        theorem: String,
        name: String,
        known: String,
    },
    #[error("corpus line {line}: {msg}")]
    Corpus { line: usize, msg: String },
    #[error("{theorem} on {entry}: {source}")]
    Check {
        theorem: String,
        entry: String,
        source: ringlab_core::Error,
    },
    #[error(transparent)]
    Core(#[from] ringlab_core::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, VerifierError>;
