use thiserror::Error;

use crate::pebble::PebblingMove;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("invalid edge ({u}, {v}) for a graph of order {order}")]
    InvalidEdge { u: usize, v: usize, order: usize },
    #[error("graph is disconnected: no path from {u} to {v}")]
    DisconnectedGraph { u: usize, v: usize },
    #[error("invalid specification: {0}")]
    InvalidSpec(String),
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("expected {expected} entries, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("vertex {vertex} holds {available} pebble(s), a move needs 2")]
    InsufficientPebbles { vertex: usize, available: u32 },
    #[error("vertices {from} and {to} are not adjacent")]
    NonAdjacentMove { from: usize, to: usize },
    #[error("move #{index} ({mv}) is illegal: {reason}")]
    IllegalMoveAt {
        index: usize,
        mv: PebblingMove,
        reason: Box<Error>,
    },
    #[error("final configuration leaves vertices {uncovered:?} uncovered")]
    NotCoveredAtEnd { uncovered: Vec<usize> },

    #[error("state budget exhausted after {states} states")]
    BudgetExceeded { states: u64 },
    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("internal assertion failed: {0}")]
    InternalAssertion(String),
    #[error("strategy incomplete: {0}")]
    StrategyIncomplete(String),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}
