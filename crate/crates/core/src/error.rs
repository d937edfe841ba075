use thiserror::Error;

/// Errors raised by graph construction, analysis and search.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    OutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("edge {{{0}, {1}}} has color 0; colors must be positive")]
    BadColor(usize, usize),
    #[error("no edge {{{0}, {1}}}")]
    NoSuchEdge(usize, usize),
    #[error("a graph needs at least one vertex")]
    NoVertices,
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("invalid packing: {0}")]
    InvalidPacking(String),
    #[error("vertex {0} is not covered by the packing")]
    NotInV0(usize),
    #[error("minimum color degree {actual} is below the requested floor {floor}")]
    DegreeTooLow { actual: usize, floor: usize },
    #[error("node budget of {budget} exhausted; best level proved: {best_proved}")]
    BudgetExceeded { budget: u64, best_proved: usize },
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
