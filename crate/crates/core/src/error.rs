use thiserror::Error;

use crate::local::OddWheelWitness;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("common neighbourhood of the empty set is undefined")]
    EmptyVertexSet,
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("weighting is identically zero")]
    ZeroWeighting,
    #[error("negative weight at vertex {0}")]
    NegativeWeight(usize),
    #[error("expected {expected} weights, got {got}")]
    WeightCount { expected: usize, got: usize },
    #[error("not locally bipartite: {0}")]
    NotLocallyBipartite(OddWheelWitness),
    #[error("malformed rational `{0}`")]
    BadRational(String),
    #[error("checkpoint: {0}")]
    Checkpoint(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
