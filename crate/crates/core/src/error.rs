use thiserror::Error;

use crate::graph::Edge;

/// Failures while decoding one of the supported text formats.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("empty input")]
    Empty,
    #[error("input is not valid UTF-8")]
    InvalidUtf8,
    #[error("line {line}: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("line {line}: endpoint {vertex} out of range for order {order}")]
    EndpointOutOfRange {
        line: usize,
        vertex: usize,
        order: usize,
    },
    #[error("line {line}: loop at vertex {vertex}")]
    Loop { line: usize, vertex: usize },
    #[error("line {line}: duplicate edge {edge}")]
    DuplicateEdge { line: usize, edge: Edge },
    #[error("header declares {declared} edges but {found} were listed")]
    EdgeCountMismatch { declared: usize, found: usize },
    #[error("graph6: invalid character {byte:#04x} at offset {offset}")]
    InvalidCharacter { offset: usize, byte: u8 },
    #[error("graph6: bit field truncated, expected {expected} bytes but found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("graph6: unexpected trailing data at offset {offset}")]
    TrailingData { offset: usize },
    #[error("graph6: only the short form (n <= 62) is supported")]
    UnsupportedOrder,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {0}")]
    DuplicateEdge(Edge),
    #[error("edge {0} is not present")]
    MissingEdge(Edge),
    #[error("{0}")]
    InvalidArgument(String),
    #[error("outside theorem domain: {0}")]
    OutsideTheoremDomain(String),
    #[error("{what} {value} exceeds cap {cap}")]
    CapExceeded {
        what: &'static str,
        value: usize,
        cap: usize,
    },
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
