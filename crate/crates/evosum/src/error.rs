use std::path::PathBuf;

/// Errors produced by corpus ingestion, scoring, and training.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A story file contained no highlight content.
    #[error("story has no reference summary (no `@highlight` content)")]
    EmptyReference,

    /// A story file contained no article lines before the first highlight.
    #[error("story has no article lines")]
    EmptyArticle,

    /// A sentence with zero tokens was submitted for scoring.
    #[error("sentence has no tokens")]
    EmptySentence,

    /// A corpus-level operation was given no documents.
    #[error("corpus is empty")]
    EmptyCorpus,

    /// Training requires at least one vocabulary entry.
    #[error("vocabulary is empty")]
    EmptyVocabulary,

    /// A chromosome's length does not match the vocabulary size.
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    /// A weight fell outside the [0, 1] range.
    #[error("weight {value} at index {index} is outside [0, 1]")]
    WeightOutOfRange { index: usize, value: f64 },

    /// A token string violated the token invariants.
    #[error("invalid token {0:?}: must be non-empty, lowercase, without whitespace")]
    InvalidToken(String),

    /// Configuration values that cannot be run.
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    /// A weights file failed validation; `line` is 1-based.
    #[error("malformed weights file at line {line}: {message}")]
    WeightsFormat { line: usize, message: String },

    /// Filesystem failure, tagged with the offending path.
    #[error("io failure on {path}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
