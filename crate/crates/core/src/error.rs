use thiserror::Error;

use crate::hypercore::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("vertex {vertex} out of range for a hypergraph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("{what} supports at most {max} vertices, got {n}")]
    SizeLimit {
        what: &'static str,
        n: usize,
        max: usize,
    },

    #[error("uniformity {0} is not supported here")]
    UnsupportedUniformity(usize),

    #[error("uniformity mismatch: expected {expected}, found {found}")]
    UniformityMismatch { expected: usize, found: usize },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// No hypergraph on `n` vertices avoids the family.
    #[error("no Q-free 3-graph on {n} vertices exists")]
    NoWitness { n: usize },

    /// The input contains a forbidden induced configuration.
    #[error("input is not free of the forbidden family: {witness} spans {count} edges")]
    ForbiddenSubgraph { witness: VertexSet, count: usize },

    /// A structural claim made during an extraction did not hold.
    #[error("structural claim failed: {0}")]
    ClaimFailed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
