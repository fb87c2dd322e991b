use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph order {0} exceeds the supported maximum of {max}", max = crate::graph::MAX_VERTICES)]
    TooManyVertices(usize),
    #[error("vertex sets overlap at vertex {0}")]
    OverlappingSets(usize),
    #[error("circulant offset {offset} outside [1, {max}] for order {order}")]
    InvalidOffset { offset: usize, order: usize, max: usize },
    #[error("circulant needs at least one offset")]
    NoOffsets,
    #[error("{0} requires a graph with at least {1} vertices")]
    TooFewVertices(&'static str, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {offset}: character 0x{byte:02x} outside the printable graph6 range")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("byte {offset}: malformed length header")]
    MalformedHeader { offset: usize },
    #[error("byte {offset}: data ends early, expected {expected} bytes in total")]
    Truncated { offset: usize, expected: usize },
    #[error("byte {offset}: trailing data after the adjacency bits")]
    TrailingData { offset: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("{what} {value} outside the admissible range [{lo}, {hi}]")]
    DriverOutOfRange {
        what: &'static str,
        value: u32,
        lo: u32,
        hi: u32,
    },
    #[error("line {line}: {reason}")]
    Transcription { line: usize, reason: String },
}
