use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("invalid graph6 string: {0}")]
    Graph6(String),
    #[error("self-loop at vertex {0} in a simple graph")]
    SelfLoop(usize),
    #[error("{what}: {n} exceeds the size cap {cap}")]
    SizeCap { what: &'static str, n: usize, cap: usize },
    #[error("vertex-set capacity ({cap}) exceeded by {0} vertices", cap = crate::VertexSet::CAPACITY)]
    Capacity(usize),
    #[error("cycle budget of {budget} exceeded ({found} cycles found before stopping)")]
    CycleBudget { budget: u64, found: u64 },
    #[error("trace budget of {0} exceeded")]
    TraceBudget(u64),
    #[error("walk budget of {0} exceeded")]
    WalkBudget(u64),
    #[error("jump at vertex {vertex} not allowed: {why}")]
    Jump { vertex: usize, why: &'static str },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
}
