use thiserror::Error;

/// Errors shared by all graph operations and solvers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("vertex {vertex} out of range (n = {n})")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("graph is not bipartite; odd cycle: {cycle:?}")]
    NotBipartite { cycle: Vec<usize> },

    #[error("graph is not a tree")]
    NotATree,

    #[error("graph has no edges")]
    Edgeless,

    #[error("graph is not in class {0}")]
    NotInClass(&'static str),

    #[error("{what} exceeds cap {cap} (got {got})")]
    CapExceeded {
        what: &'static str,
        cap: usize,
        got: usize,
    },

    #[error("atom {0} is not a petal")]
    NotAPetal(usize),

    #[error("peeling atom {0} would empty the flower")]
    PeelWouldEmpty(usize),

    #[error("invalid atom index {0}")]
    BadAtomIndex(usize),

    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
