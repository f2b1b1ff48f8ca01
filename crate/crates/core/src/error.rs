use thiserror::Error;

use crate::decomp::Violation;
use crate::graph::VertexId;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("self-loop at line {line}")]
    SelfLoop { line: usize },

    #[error("self-loop on vertex {0} is not allowed")]
    SelfLoopEdge(VertexId),

    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),

    #[error("graph is not even")]
    NotEven,

    #[error("graph is not connected")]
    Disconnected,

    #[error("invalid cycle decomposition: {}", format_violations(.0))]
    InvalidDecomposition(Vec<Violation>),

    #[error("CI graph is cyclic; use decycle_general")]
    CyclicCi,

    #[error("exact oracle refused: graph has {vertices} vertices, limit is {limit}")]
    OracleLimit { vertices: usize, limit: usize },

    #[error("evaluation budget must be positive")]
    ZeroBudget,

    #[error("exhaustive search exceeded the budget of {0} evaluations")]
    BudgetExceeded(usize),

    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error("bad family spec: {0}")]
    Family(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

fn format_violations(vs: &[Violation]) -> String {
    vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; ")
}
