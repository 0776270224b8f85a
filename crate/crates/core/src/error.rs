use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("set is not gated with respect to vertex {0}")]
    NotGated(usize),
    #[error("boundary vertex undefined: interval is empty or the whole sphere")]
    Undefined,
    #[error("sample is not realizable by the concept class")]
    NotRealizable,
    #[error("malformed compressed sample: {0}")]
    MalformedInput(String),
    #[error("graph is not a cactus")]
    NotCactus,
    #[error("graph is not a tree")]
    NotTree,
    #[error("graph is not a cycle")]
    NotCycle,
    #[error("graph is not a cube-free median graph")]
    NotMedian,
    #[error("graph is not a split graph")]
    NotSplit,
    #[error("invalid interval representation: {0}")]
    InvalidRepresentation(String),
    #[error("invalid embedding: {0}")]
    InvalidEmbedding(String),
    #[error("unsupported generator spec: {0}")]
    UnsupportedSpec(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
