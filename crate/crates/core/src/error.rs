use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{what}: instance has {size} vertices, exact-oracle cap is {cap}")]
    InstanceTooLarge {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("vertex {vertex}: sigma member {member} is not within distance {depth}")]
    OutOfBall {
        vertex: usize,
        member: usize,
        depth: usize,
    },

    #[error("vertex {vertex}: sigma contains the vertex itself")]
    SelfInSigma { vertex: usize },

    #[error("invalid neighborhood system: {0}")]
    InvalidSystem(String),

    #[error("invalid ordering: {0}")]
    InvalidOrdering(String),

    #[error("invalid coloring: {0}")]
    InvalidColoring(String),

    #[error("invalid realizer: {0}")]
    InvalidRealizer(String),

    #[error("coloring is not a star coloring")]
    NotAStarColoring,

    #[error("expected a depth-{expected} system, got depth {found}")]
    WrongDepth { expected: usize, found: usize },

    #[error("expected rho = {expected}, got {found}")]
    WrongRho { expected: usize, found: usize },

    #[error("no color left for vertex {vertex}")]
    ListExhausted { vertex: usize },

    #[error("vertices {u} and {v} share no sigma set")]
    NotASigmaClique { u: usize, v: usize },

    #[error("hypergraph has {have} vertices, need at least {need}")]
    TooFewVertices { have: usize, need: usize },

    #[error("no good sample after {rounds} rounds")]
    SamplingBudgetExhausted { rounds: usize },

    #[error(
        "clique too small: need {needed}, found {found} \
         (outside-witness graph has {edges} edges, threshold {threshold})"
    )]
    CliqueTooSmall {
        needed: usize,
        found: usize,
        edges: usize,
        threshold: usize,
    },

    #[error("edge {edge}: path of length {len} exceeds {max}")]
    PathTooLong { edge: usize, len: usize, max: usize },

    #[error("edge {edge}: path has no internal vertex")]
    PathTooShort { edge: usize },

    #[error("invalid hypergraph: {0}")]
    InvalidHypergraph(String),

    #[error("{0}")]
    Precondition(String),
}
