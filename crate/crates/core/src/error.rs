use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("{n} vertices exceeds the supported maximum of {max}")]
    TooManyVertices { n: usize, max: usize },
    #[error("endpoint {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("duplicate arc ({0}, {1})")]
    DuplicateArc(usize, usize),
    #[error("digraph has opposite arcs between {0} and {1}; not an orientation")]
    OppositeArcs(usize, usize),
    #[error("invalid family: {0}")]
    InvalidFamily(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("graph has {edges} edges, above the enumeration cap of {cap} (raise --max-edges to override)")]
    EdgeCapExceeded { edges: usize, cap: usize },
    #[error("graph too large for the brute-force oracle ({vertices} vertices, {edges} edges; limits 12 and 16)")]
    OracleCapExceeded { vertices: usize, edges: usize },
    #[error("vertex set is not independent: {0} and {1} are adjacent")]
    NotIndependent(usize, usize),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("unknown verify suite `{0}`")]
    UnknownSuite(String),
    #[error("I/O error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
