use thiserror::Error;

/// Errors produced by graph construction, the exact oracles and the
/// cross-checks.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("{0}-{1} is not an edge of the graph")]
    MissingEdge(usize, usize),
    #[error("{0}-{1} is already an edge of the graph")]
    EdgePresent(usize, usize),
    #[error("vertex sets overlap at vertex {0}")]
    OverlappingSets(usize),
    #[error("invalid matching: {0}")]
    InvalidMatching(String),
    #[error("matching of size {size} is not maximum (maximum is {maximum})")]
    NotMaximum { size: usize, maximum: usize },
    #[error("{what} refused: graph has {n} vertices, cap is {cap}")]
    CapExceeded { what: &'static str, n: usize, cap: usize },
    #[error("alternating-structure search exceeded its budget of {0} steps")]
    BudgetExceeded(u64),
    #[error("graph is not König-Egerváry")]
    NotKoenigEgervary,
    #[error("graph is disconnected ({0} components)")]
    Disconnected(usize),
    #[error("empty family of stable sets")]
    EmptyFamily,
    #[error("vertex set is not stable: edge {0}-{1} inside it")]
    NotStable(usize, usize),
    #[error("edge {0}-{1} closes a blossom inside B")]
    BlossomClosed(usize, usize),
    #[error("check {check} failed: {detail}")]
    Violation { check: &'static str, detail: String },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("I/O error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
