use thiserror::Error;

/// Maximum number of vertices a [`Graph`](crate::Graph) can hold.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph order {0} exceeds the {MAX_VERTICES}-vertex limit")]
    TooManyVertices(usize),

    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("enumeration needs {needed} candidate sets, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },

    #[error("order {requested} exceeds the enumeration cap of {cap}")]
    OrderCapExceeded { requested: usize, cap: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
