use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph has {n} vertices, at most {max} are supported")]
    TooManyVertices { n: usize, max: usize },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("invalid generator parameter: {0}")]
    InvalidParameter(String),
}

/// Input error with the 1-based line it was found on.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("missing header")]
    MissingHeader,
    #[error("malformed header: {0:?}")]
    MalformedHeader(String),
    #[error("malformed line: {0:?}")]
    MalformedLine(String),
    #[error("expected {expected} edges, found {found}")]
    EdgeCountMismatch { expected: usize, found: usize },
    #[error("vertex {0} listed twice")]
    DuplicateVertex(usize),
    #[error("{0}")]
    Graph(#[from] GraphError),
}

impl ParseError {
    pub(crate) fn new(line: usize, kind: impl Into<ParseErrorKind>) -> Self {
        ParseError {
            line,
            kind: kind.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabelError {
    #[error("shifting label {label} of vertex {vertex} by {delta} makes it negative")]
    NegativeLabel { vertex: usize, label: u32, delta: i64 },
    #[error("label {label} of vertex {vertex} exceeds the top label {top}")]
    OutOfRange { vertex: usize, label: u32, top: i64 },
}
