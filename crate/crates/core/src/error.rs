use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has {n} vertices, above the cap of {cap}")]
    TooManyVertices { n: usize, cap: usize },
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("vertex map is not injective")]
    NotInjective,
    #[error("vertex map has {got} entries, expected {expected}")]
    MapLength { expected: usize, got: usize },
    #[error("edge {0}-{1} of the subgraph is missing in the host")]
    MissingHostEdge(usize, usize),
    #[error("slice index {k} exceeds distance {distance}")]
    SliceOutOfRange { k: usize, distance: usize },
    #[error("vertex {0} lies inside the separating disk")]
    InsideDisk(usize),
    #[error("{what}: search budget of {budget} nodes exceeded")]
    BudgetExceeded { what: &'static str, budget: u64 },
    #[error("graph is not distance-hereditary")]
    NotDistanceHereditary,
    #[error("invalid pruning step at position {position}: {reason}")]
    InvalidStep { position: usize, reason: String },
    #[error("ordering is not a permutation of the vertex set")]
    NotPermutation,
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}
