//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("parse error at row {row}: {message}")]
    Parse { row: usize, message: String },

    /// A normalized Laplacian or random-walk quantity was requested on a
    /// graph with a zero-degree vertex. The index is 1-based.
    #[error("vertex {0} is isolated (zero degree)")]
    IsolatedVertex(usize),

    #[error("graph is disconnected where a connected graph is required")]
    Disconnected,

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    /// Exhaustive enumeration was requested on an instance beyond the cap.
    #[error("instance too large for exhaustive enumeration: n={n}, cap={max}")]
    InstanceTooLarge { n: usize, max: usize },

    /// A cut objective is undefined for a cluster (zero volume or zero
    /// within-cluster weight). The cluster id is 1-based.
    #[error("objective undefined for cluster {cluster}: {reason}")]
    UndefinedObjective { cluster: usize, reason: String },

    /// Row normalization is undefined on a near-zero embedding row.
    /// The row index is 1-based.
    #[error("embedding row {0} has near-zero norm, row normalization undefined")]
    ZeroEmbeddingRow(usize),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Whether the error reflects a computational failure on valid usage
    /// (isolated vertex, disconnected graph, oversized instance, undefined
    /// objective) rather than bad parameters or unreadable input. The CLI
    /// maps computational errors to exit code 2 and the rest to exit 1.
    pub fn is_computational(&self) -> bool {
        matches!(
            self,
            Error::IsolatedVertex(_)
                | Error::Disconnected
                | Error::InstanceTooLarge { .. }
                | Error::UndefinedObjective { .. }
                | Error::ZeroEmbeddingRow(_)
        )
    }
}
