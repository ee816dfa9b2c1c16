use thiserror::Error;

/// Errors produced by any burnlab operation.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("vertex ({row},{col}) out of range for a {m}x{n} grid")]
    VertexOutOfRange { row: u64, col: u64, m: u64, n: u64 },

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("graph is disconnected; radius is infinite")]
    Disconnected,

    #[error("invalid schedule: source {index} at {vertex} was already burned when chosen")]
    InvalidSchedule { index: usize, vertex: String },

    #[error("branch not applicable: {0}")]
    BranchInapplicable(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
