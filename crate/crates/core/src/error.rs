use std::path::PathBuf;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{path}: no sequences found")]
    EmptyInput { path: PathBuf },

    #[error("{path}:{line}: {reason}")]
    Malformed {
        path: PathBuf,
        line: usize,
        reason: String,
    },

    #[error("sequence {0} is empty")]
    EmptySequence(usize),

    #[error("prefix length {requested} out of range 1..={available}")]
    PrefixOutOfRange { requested: usize, available: usize },

    #[error("need at least {required} sequences, got {actual}")]
    TooFewSequences { required: usize, actual: usize },

    #[error("invalid anchor chain: {0}")]
    InvalidChain(String),

    #[error("invalid strategy configuration: {0}")]
    InvalidConfig(String),

    #[error("ragged alignment: row {row} has {len} columns, expected {expected}")]
    RaggedRows {
        row: usize,
        len: usize,
        expected: usize,
    },

    #[error("invalid guide tree: {0}")]
    InvalidTree(String),

    #[error("degenerate least-squares problem: {0}")]
    DegenerateFit(String),
}
