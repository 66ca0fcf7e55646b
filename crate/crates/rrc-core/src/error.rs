//! Error type shared across the crate.

use std::path::PathBuf;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("I/O error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{path}:{line}: {message}")]
    ModelFormat {
        path: PathBuf,
        line: usize,
        message: String,
    },

    #[error("language {language}: missing model file {expected}")]
    MissingLanguageFile { language: String, expected: String },

    #[error("language {language}: invalid rank-table entry {word:?}: {reason}")]
    InvalidEntry {
        language: String,
        word: String,
        reason: String,
    },

    #[error("unknown language {language:?}")]
    UnknownLanguage { language: String },

    #[error("invalid override rank {rank} (ranks are 1-based)")]
    InvalidRank { rank: u64 },

    #[error("invalid model parameters: {0}")]
    InvalidParams(String),

    #[error("language {language}: corpus yields no characters")]
    EmptyCorpus { language: String },

    #[error("language {language}: no corpus files declared")]
    EmptyCorpusSpec { language: String },

    #[error("cannot evaluate an empty prediction list")]
    EmptyEvaluation,
}

impl Error {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
