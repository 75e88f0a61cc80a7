use thiserror::Error;

use crate::root::Root;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("root [{i},{j}] is not a positive root of A_{rank}")]
    InvalidRoot { i: usize, j: usize, rank: usize },

    #[error("roots {0} and {1} are comparable; minimal roots must form an antichain")]
    NotAntichain(Root, Root),

    #[error("set is not upward closed: {lower} is present, {upper} is above it but missing")]
    NotUpwardClosed { lower: Root, upper: Root },

    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("invalid ballot sequence: {0}")]
    InvalidBallot(String),

    #[error("cut points must be strictly increasing within 1..={max}, got {cuts:?}")]
    BadCutPoints { cuts: Vec<usize>, max: usize },

    #[error("partitions have different sizes ({0} vs {1})")]
    SizeMismatch(usize, usize),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("move `{mv}` is not licensed on {ideal}")]
    IllegalMove { mv: String, ideal: String },

    #[error("rank {rank} exceeds the limit {limit} for {what}")]
    RankLimit {
        rank: usize,
        limit: usize,
        what: &'static str,
    },

    #[error("{0} is not a prime below 2^32")]
    NotPrime(u64),

    #[error("oracle anomaly: trial results {0} and {1} are dominance-incomparable")]
    OracleAnomaly(String, String),

    #[error("consistency failure: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
