use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("a hypergraph needs at least one vertex")]
    EmptyVertexSet,

    #[error("edge {edge} has fewer than two vertices")]
    SingletonEdge { edge: usize },

    #[error("edges {first} and {second} contain the same vertex set")]
    DuplicateEdge { first: usize, second: usize },

    #[error("vertex {vertex} is out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("edge {edge} lists vertex {vertex} more than once")]
    DuplicateVertexInEdge { edge: usize, vertex: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unknown vertex label `{0}`")]
    UnknownLabel(String),

    #[error("bad parameters: {0}")]
    BadParameters(String),

    #[error("requested {requested} distinct edges but only {available} exist")]
    Unsatisfiable { requested: u128, available: u128 },

    #[error("eigensolver did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    ConvergenceFailure { sweeps: usize, off_norm: f64 },

    #[error("operation needs at least two vertices, got {n}")]
    TooSmall { n: usize },

    #[error("hypergraph has no edges")]
    NoEdges,

    #[error("hypergraph is not uniform (edge sizes {k_min}..={k_max})")]
    NotUniform { k_min: usize, k_max: usize },

    #[error("weight function is not positive and symmetric on adjacent pair ({i}, {j})")]
    BadWeightFunction { i: usize, j: usize },

    #[error("subset must be neither empty nor the full vertex set")]
    DegenerateSubset,

    #[error("exact enumeration is capped at {cap} vertices, got {n}")]
    TooLarge { n: usize, cap: usize },

    #[error("hypergraph is disconnected")]
    Disconnected,
}
