use thiserror::Error;

/// Errors raised by graph construction, parsing and the algorithms on top.
#[derive(Debug, Error)]
pub enum Error {
    #[error("edge #{index} ({u}, {v}) references a node outside 0..{node_count}")]
    NodeOutOfRange {
        index: usize,
        u: usize,
        v: usize,
        node_count: usize,
    },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("graph has no nodes")]
    EmptyGraph,

    #[error("graph is disconnected: node {node} is unreachable from node {source_node}")]
    Disconnected { source_node: usize, node: usize },

    #[error("matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },

    #[error("eigensolver did not converge after {sweeps} sweeps (off-diagonal norm {residual:e})")]
    NoConvergence { sweeps: usize, residual: f64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("requested {requested} inter-community edges but only {max} cross pairs are allowed")]
    TooManyInterEdges { requested: usize, max: usize },

    #[error("could not draw a connected instance within {retries} attempts")]
    ConnectivityUnattainable { retries: usize },

    #[error("partitions disagree on the node set: {0}")]
    NodeSetMismatch(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
