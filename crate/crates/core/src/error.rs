use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph order {0} exceeds the 64-vertex limit")]
    OrderOverflow(usize),
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("adjacency rows are not a simple undirected graph: {0}")]
    InvalidAdjacency(String),
    #[error("invalid linear forest: {0}")]
    InvalidForest(String),
    #[error("invalid graph6 input: {0}")]
    Graph6(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("invalid attachment: {0}")]
    InvalidAttachment(String),
    #[error("{operation} is limited to graphs of order at most {limit}, got {order}")]
    SizeGuard {
        operation: &'static str,
        limit: usize,
        order: usize,
    },
    #[error("search budget of {budget} nodes exceeded")]
    BudgetExceeded { budget: u64 },
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
}

impl Error {
    /// Stable machine-readable tag used in error reports.
    pub fn code(&self) -> &'static str {
        match self {
            Error::OrderOverflow(_) => "order_overflow",
            Error::VertexOutOfRange { .. } => "vertex_out_of_range",
            Error::SelfLoop(_) => "self_loop",
            Error::InvalidAdjacency(_) => "invalid_adjacency",
            Error::InvalidForest(_) => "invalid_forest",
            Error::Graph6(_) => "graph6",
            Error::InvalidParameter(_) => "invalid_parameter",
            Error::InvalidAttachment(_) => "invalid_attachment",
            Error::SizeGuard { .. } => "size_guard",
            Error::BudgetExceeded { .. } => "budget_exceeded",
            Error::Hypothesis(_) => "hypothesis",
        }
    }
}
