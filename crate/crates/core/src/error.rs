use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {v} out of range for graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("{0}-{1} is not an edge")]
    NotAnEdge(usize, usize),
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("graph order {n} exceeds bound {bound}; use inertia counting instead")]
    SizeBound { n: usize, bound: usize },
    #[error("operation undefined on the empty graph")]
    EmptyGraph,
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("sets do not partition the vertex set")]
    InvalidPartition,
    #[error("index {k} outside 1..={n}")]
    IndexOutOfRange { k: usize, n: usize },
    #[error("eigenvector certificate must be a nonzero vector")]
    ZeroVector,
    #[error("vector length {got}, expected {want}")]
    VectorLength { got: usize, want: usize },
    #[error("component of vertex {0} is the Heawood graph; no increasing set exists")]
    HeawoodComponent(usize),
    #[error("cycle is not induced")]
    NotInduced,
    #[error("cycle has odd length")]
    OddCycle,
    #[error("removing all vertices leaves nothing to interlace")]
    EmptyRemainder,
    #[error("infeasible generator config: {0}")]
    InfeasibleConfig(String),
    #[error("{0}")]
    Invalid(String),
}
