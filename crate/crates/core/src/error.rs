use thiserror::Error;

use crate::algebra::Monomial;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("cannot substitute a non-monomial for {var} raised to a negative power")]
    NonInvertibleSubstitution { var: String },

    #[error("inexact division: {0}")]
    InexactDivision(String),

    #[error("factor {index} has {rows} rows but the rank is {rank}")]
    RankViolation { index: usize, rows: usize, rank: usize },

    #[error("current weight {0:?} has negative parts; only partitions are accepted here")]
    NonPartitionWeight(Vec<i64>),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("factorization violated by exponent vectors {offending:?}")]
    FactorizationViolation { offending: Vec<Monomial> },

    #[error("vertex {vertex} has {count} outgoing arrows; catabolism needs at most one")]
    BranchingVertex { vertex: String, count: usize },

    #[error("variable groups do not match: {0}")]
    GroupMismatch(String),

    #[error("the quiver is not a cyclic quiver")]
    NotCyclic,

    #[error("{pointer}: {message}")]
    Schema { pointer: String, message: String },

    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
