use thiserror::Error;

use crate::model::Measure;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range (n = {n})")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {vertex} in snapshot {snapshot}")]
    SelfLoop { snapshot: usize, vertex: usize },

    #[error("duplicate edge {u} {v} in snapshot {snapshot}")]
    DuplicateEdge { snapshot: usize, u: usize, v: usize },

    #[error("temporal graph needs at least one snapshot")]
    NoSnapshots,

    #[error("path is empty")]
    EmptyPath,

    #[error("vertex {vertex} repeated in path")]
    RepeatedVertex { vertex: usize },

    #[error("path endpoints do not match the terminals {s} and {t}")]
    TerminalMismatch { s: usize, t: usize },

    #[error("operation requires a {expected} measure, got {got}")]
    WrongMeasure { expected: &'static str, got: Measure },

    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("rank {rank} exceeds universe size {universe}")]
    RankExceedsUniverse { rank: usize, universe: usize },

    #[error("element {element} is outside the matroid universe of size {universe}")]
    OutsideUniverse { element: usize, universe: usize },

    #[error("path catalog for snapshot {snapshot} exceeds the cap of {cap} paths")]
    CatalogTooLarge { snapshot: usize, cap: usize },

    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid witness: {0}")]
    InvalidWitness(String),

    #[error("{0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}
