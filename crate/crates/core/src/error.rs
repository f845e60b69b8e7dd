use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("non-finite coordinate ({x}, {y})")]
    NonFinite { x: f64, y: f64 },
    #[error("degenerate direction: points coincide")]
    DegenerateDirection,
    #[error("invalid cone count k={0}: must be at least 1")]
    InvalidConeCount(u32),
    #[error("invalid cone index {index} for k={k}")]
    InvalidConeIndex { index: u32, k: u32 },
    #[error("node set is empty")]
    EmptyNodeSet,
    #[error("duplicate node id {0:?}")]
    DuplicateId(String),
    #[error("nodes {first:?} and {second:?} share coordinates")]
    DuplicateCoordinates { first: String, second: String },
    #[error("unknown node {0:?}")]
    UnknownNode(String),
    #[error("node index {index} out of range for {len} nodes")]
    NodeOutOfRange { index: usize, len: usize },
    #[error("operation requires an undirected graph")]
    RequiresUndirected,
    #[error("graph is already undirected")]
    AlreadyUndirected,
    #[error("graphs are defined over different node sets")]
    NodeSetMismatch,
    #[error("already delivered: source equals target")]
    AlreadyDelivered,
    #[error("self-loop on node {0}")]
    SelfLoop(usize),
    #[error("k outside 1..5: theorem guarantees no counterexample (k={0})")]
    SearchConeCount(u32),
    #[error("geometry check requires k >= 6 (k={0})")]
    ProofConeCount(u32),
    #[error("invalid node count: {0}")]
    InvalidNodeCount(String),
    #[error("corpus entry {found} where {expected} was required")]
    WrongCorpusEntry { expected: String, found: String },
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}
