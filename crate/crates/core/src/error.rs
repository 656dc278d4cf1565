use thiserror::Error;

use crate::graph::VertexId;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex id {id} out of range for a graph with {n} vertices")]
    VertexOutOfRange { id: VertexId, n: usize },
    #[error("edge #{index} has nonpositive weight")]
    NonPositiveEdgeWeight { index: usize },
    #[error("vertex {vertex} has nonpositive weight")]
    NonPositiveVertexWeight { vertex: VertexId },
    #[error("expected {expected} vertex weights, got {got}")]
    WeightCount { expected: usize, got: usize },
    #[error("root {0} cannot be absorbed into itself")]
    RootAbsorbed(VertexId),
    #[error("source and sink are both vertex {0}")]
    SameTerminals(VertexId),
    #[error("edge ({from}, {to}) admits no finite vertex cut")]
    AdjacentTerminals { from: VertexId, to: VertexId },
    #[error("graph needs at least two vertices")]
    TooSmall,
    #[error("{n} vertices exceeds the exhaustive-search limit of {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("vertex {0} is not an eligible sink for this root")]
    IneligibleSink(VertexId),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("weight arithmetic overflowed 64 bits")]
    Overflow,
}

pub type Result<T> = std::result::Result<T, Error>;
