use alloc::string::String;
use num_bigint::BigUint;
use thiserror::Error;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range (graph has {num_vertices} vertices)")]
    InvalidVertex { vertex: usize, num_vertices: usize },

    #[error("edge {edge} out of range (graph has {num_edges} edges)")]
    InvalidEdge { edge: usize, num_edges: usize },

    #[error("graphs do not share the same underlying multigraph")]
    UnderlyingMismatch,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid group: {0}")]
    InvalidGroup(String),

    #[error("element does not belong to the group: {0}")]
    ElementMismatch(String),

    #[error("search of {estimate} leaves exceeds the budget of {budget}")]
    BudgetExceeded { estimate: BigUint, budget: u64 },

    #[error("underdetermined fit: {0}")]
    Underdetermined(String),
}
