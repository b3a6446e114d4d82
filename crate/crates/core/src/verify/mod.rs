// SPDX-License-Identifier: Apache-2.0

//! Verifiers for popularity, Pareto-optimality and the characterisation of
//! popular matchings with a single blocking edge.
//!
//! The structural checks require strict preferences. The exhaustive oracles
//! in [`oracle`] work directly from the definitions, accept ties, and are
//! guarded by a per-side size limit.

mod gm;
pub mod oracle;
mod pareto;
mod popularity;
mod single_blocking;

pub use gm::{build_gm, GmSubgraph};
pub use oracle::{is_popular_bruteforce, BruteForce};
pub use pareto::{find_pareto_improvement, is_pareto_improvement, pareto_closure};
pub use popularity::{is_popular, PopularityVerdict};
pub use single_blocking::{check_single_blocking, SingleBlockingReport};
