// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid preference system: {0}")]
    InvalidPreferences(String),
    #[error("invalid matching: {0}")]
    InvalidMatching(String),
    #[error("unknown edge: {0}")]
    UnknownEdge(String),
    #[error("unknown element: {0}")]
    UnknownElement(String),
    #[error("preference system has ties; this operation requires strict preferences")]
    NotStrict,
    #[error("graph is not bipartite: {0}")]
    NotBipartite(String),
    #[error("instance too large for exhaustive search: {per_side} vertices on one side (limit {limit})")]
    InstanceTooLarge { per_side: usize, limit: usize },
    #[error("no master list exists on either side")]
    NoMasterList,
    #[error("internal consistency failure: proposer-optimal stable matchings differ under a master list")]
    UniquenessViolated,
    #[error("edge {0} has zero cost; budgeted solvers require every cost to be at least 1")]
    ZeroCostEdge(String),
    #[error("Pareto closure exceeded {0} improvement steps")]
    NonTermination(usize),
    #[error("malformed clause: {0}")]
    MalformedClause(String),
    #[error("bad partition: {0}")]
    BadPartition(String),
    #[error("invalid axis: {0}")]
    InvalidAxis(String),
    #[error("invalid valuation: {0}")]
    InvalidValuation(String),
    #[error("arithmetic overflow")]
    Overflow,
    #[error("JSON error: {0}")]
    Json(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
