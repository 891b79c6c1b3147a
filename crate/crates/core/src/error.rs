use std::path::PathBuf;

use crate::graph::Graph6Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    InvalidVertex { vertex: usize, n: usize },

    #[error("graph order {n} is outside the supported range 1..={max}")]
    InvalidOrder { n: usize, max: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("unknown graph family `{0}`")]
    UnknownFamily(String),

    #[error("family {family} needs at least {min} vertices, got {n}")]
    FamilyTooSmall {
        family: crate::graph::Family,
        n: usize,
        min: usize,
    },

    #[error("labeled enumeration is capped at n = {max}, got {n}")]
    EnumerationTooLarge { n: usize, max: usize },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("partition is for {partition} vertices but the graph has {graph}")]
    PartitionOrderMismatch { partition: usize, graph: usize },

    #[error("labeling is not a bijection onto 1..={0}")]
    NotBijective(usize),

    #[error("vertices {u} and {v} are not on opposite sides (u in v1, v in v2)")]
    NotOppositeSides { u: usize, v: usize },

    #[error("graph is not connected")]
    Disconnected,

    #[error("signature does not match the one induced by the partition")]
    SignatureMismatch,

    #[error("edge {u}-{v} is not an edge of the graph")]
    NotAnEdge { u: usize, v: usize },

    #[error("{0}")]
    Precondition(String),

    #[error("unknown check `{0}`")]
    UnknownCheck(String),

    #[error(transparent)]
    Graph6(#[from] Graph6Error),

    #[error("line {line}: {source}")]
    Line {
        line: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("{path}: {source}")]
    File {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
