use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid Lie type: {0}")]
    InvalidType(String),

    #[error("invalid node set: {0}")]
    InvalidNodes(String),

    #[error("invalid weighted diagram: {0}")]
    InvalidWeights(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid flag: {0}")]
    InvalidFlag(String),

    #[error("type mismatch: {0} against {1}")]
    TypeMismatch(String, String),

    #[error("inconsistent degree ratios around a cycle: {0}")]
    InconsistentCycle(String),

    #[error("degree propagation failed: {0}")]
    Degree(String),

    #[error("unknown orbit '{label}' in {algebra}")]
    UnknownOrbit { algebra: String, label: String },

    #[error("atlas: {0}")]
    Atlas(String),

    #[error("atlas parse error: {0}")]
    AtlasParse(#[from] serde_json::Error),

    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("matrix realization: {0}")]
    Realization(String),

    #[error("random draws did not agree: {0}")]
    NonGeneric(String),
}

pub type Result<T> = std::result::Result<T, Error>;
