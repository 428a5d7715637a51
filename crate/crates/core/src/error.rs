use thiserror::Error;

/// Errors produced while parsing or building graphs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("line {line}: vertex {vertex} out of range for {vertex_count} vertices")]
    VertexOutOfRange {
        line: usize,
        vertex: usize,
        vertex_count: usize,
    },
    #[error("line {line}: loop edge at vertex {vertex}")]
    LoopEdge { line: usize, vertex: usize },
    #[error("line {line}: duplicate edge {u}-{v}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("expected {expected} edges, found {found}")]
    EdgeCountMismatch { expected: usize, found: usize },
    #[error("graph is disconnected; distances are undefined")]
    Disconnected,
    #[error("graph has no vertices")]
    Empty,
}

/// Errors from the palindromicity audits.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PalindromeError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("diameter {0} is even; the odd-diameter bound does not apply")]
    EvenDiameter(usize),
}

/// Errors from the tree families and Hamming graphs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("refusing to materialize {requested} vertices (limit {limit})")]
    TooLarge { requested: String, limit: usize },
}

/// Errors from free-tree enumeration.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("tree order {n} outside supported range 1..={limit}")]
    OrderOutOfRange { n: usize, limit: usize },
    #[error("malformed level sequence: {0}")]
    MalformedLevels(String),
    #[error("shard count must be at least 1")]
    NoShards,
}

/// Error returned when a coefficient vector violates the pair-count identity.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DistributionError {
    #[error("coefficient vector is empty")]
    Empty,
    #[error("pair counts sum to {found}, expected {expected}")]
    PairCount { expected: String, found: String },
}
