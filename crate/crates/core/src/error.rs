//! Error type shared by all toolkit modules.

use std::path::PathBuf;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid term: {0}")]
    InvalidTerm(String),

    #[error("{path}:{line}: {msg}")]
    Parse {
        path: String,
        line: usize,
        msg: String,
    },

    #[error("{path}:{line}: relation references unknown synset id `{id}`")]
    ReferentialIntegrity {
        path: String,
        line: usize,
        id: String,
    },

    #[error("invalid edge policy: {0}")]
    InvalidPolicy(String),

    #[error("invalid token pattern `{pattern}`: {message}")]
    Pattern { pattern: String, message: String },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("no polar seed terms present in the graph")]
    EmptySeeds,

    #[error("inconsistent seeds: {0}")]
    InconsistentSeeds(String),

    #[error("numeric overflow after {iterations} iterations; rerun with a smaller max_iterations")]
    NumericOverflow { iterations: usize },

    #[error("degenerate seeds: {0}")]
    DegenerateSeeds(String),

    #[error("degenerate features: every candidate has an empty feature vector")]
    DegenerateFeatures,

    #[error("term `{0}` is not in the filtered vocabulary")]
    OutOfVocabulary(String),

    #[error("empty corpus: {0}")]
    EmptyCorpus(String),

    #[error("invalid span: {0}")]
    InvalidSpan(String),

    #[error("cannot read `{path}`: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    /// True for errors caused by ill-formed inputs or configuration, as
    /// opposed to failures that occur while running an algorithm.
    pub fn is_validation(&self) -> bool {
        matches!(
            self,
            Error::InvalidTerm(_)
                | Error::Parse { .. }
                | Error::ReferentialIntegrity { .. }
                | Error::InvalidPolicy(_)
                | Error::Pattern { .. }
                | Error::InvalidParams(_)
                | Error::InvalidSpan(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
