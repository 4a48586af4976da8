use thiserror::Error;

use crate::vertex_set::BITSET_CAP;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph has {0} vertices; at most {cap} are supported", cap = BITSET_CAP)]
    CapacityExceeded(usize),
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("edge ({0}, {1}) has an endpoint outside 0..{2}")]
    VertexOutOfRange(usize, usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("adjacency is not symmetric: {1} is in N({0}) but not the reverse")]
    Asymmetric(usize, usize),
    #[error("{family} needs {requirement}, got {got}")]
    FamilyParameter {
        family: &'static str,
        requirement: &'static str,
        got: usize,
    },
    #[error("generalized corona needs {expected} attached graphs, got {got}")]
    CoronaArity { expected: usize, got: usize },
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph has an isolated vertex")]
    IsolatedVertex,
    #[error("graph is not a tree")]
    NotATree,
    #[error("total connected game needs at least two vertices")]
    TooSmallForTotalGame,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty input")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside the graph6 range 63..=126")]
    BadByte { offset: usize, byte: u8 },
    #[error("truncated graph6 size header")]
    TruncatedHeader,
    #[error("graph6 size header for {0} vertices is not in its shortest form")]
    NonCanonicalHeader(usize),
    #[error("graph6 body has {got} bytes, expected {expected}")]
    BodyLength { expected: usize, got: usize },
    #[error("graph6 padding bits are not zero")]
    NonZeroPadding,
    #[error("line {line}: {message}")]
    EdgeList { line: usize, message: String },
    #[error("family spec at offset {offset}: {message}")]
    FamilySpec { offset: usize, message: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GameError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("position is terminal; no move to choose")]
    Terminal,
    #[error("naive search is limited to {limit} vertices, graph has {got}")]
    TooLargeForNaive { limit: usize, got: usize },
    #[error("played set contains vertices outside the graph")]
    PlayedOutOfRange,
}
