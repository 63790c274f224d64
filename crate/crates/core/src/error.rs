use std::path::PathBuf;

use thiserror::Error;

use crate::srg::SrgParams;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter tuple: {0}")]
    InvalidParams(String),

    #[error("{params} violates the basic identity mu(v-k-1) = k(k-lambda-1)")]
    BasicIdentity { params: SrgParams },

    #[error("{params} is infeasible: {reason}")]
    Infeasible { params: SrgParams, reason: String },

    #[error("degree d = {d} out of range 0..={k}")]
    DegreeOutOfRange { d: i64, k: i64 },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("{params} is imprimitive (k = rho), the lower spectral bound is undefined")]
    Imprimitive { params: SrgParams },

    #[error("graph error: {0}")]
    Graph(String),

    #[error("graph6 error: {0}")]
    Graph6(String),

    #[error("graph of order {order} exceeds the search limit {limit}")]
    OrderLimit { order: usize, limit: usize },

    #[error("bound comparison violated for {params}, d = {d}: {detail}")]
    BoundViolation {
        params: SrgParams,
        d: i64,
        detail: String,
    },

    #[error("{}:{line}: malformed row: {reason}", path.display())]
    MalformedRow {
        path: PathBuf,
        line: u64,
        reason: String,
    },

    #[error("{0}")]
    Csv(#[from] csv::Error),

    #[error("{0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
