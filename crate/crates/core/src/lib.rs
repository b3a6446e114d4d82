// SPDX-License-Identifier: Apache-2.0

//! Popular and Pareto-optimal matchings with bounded instability in
//! bipartite preference systems.
//!
//! The crate is organised in layers:
//!
//! - [`model`]: preference systems, matchings, valuations and the JSON
//!   instance format.
//! - [`verify`]: popularity, Pareto-optimality and single-blocking-edge
//!   checks, each paired with an exhaustive oracle.
//! - [`structure`]: master-list recovery and single-peakedness checks.
//! - [`solvers`]: Gale–Shapley, the master-list solvers, the rotation poset
//!   and maximum-weight stable matchings, and the hint-enumerating solver
//!   for Pareto-optimal matchings within a blocking budget.
//! - [`generators`]: the SAT and multicolored-clique reductions, plus seeded
//!   random instances.
//!
//! Arithmetic on utilities, costs and weights is generic over [`Weight`]
//! (any signed primitive integer). The aliases below fix the scalar to
//! `i64`, which is what the JSON format and the CLI use.

pub mod error;
pub mod generators;
pub mod kernels;
pub mod model;
pub mod num;
pub mod solvers;
pub mod structure;
pub mod verify;

pub use error::{Error, Result};
pub use model::{Edge, Element, Matching, PreferenceSystem, Side, Vertex};
pub use num::Weight;

/// Scalar used for utilities and costs throughout the i64 API.
pub type Utility = i64;

pub type Valuation = model::Valuation<Utility>;
pub type Instance = model::Instance<Utility>;
pub type RotationPoset = solvers::RotationPoset<Utility>;
pub type HintWeights = solvers::HintWeights<Utility>;
pub type Solution = solvers::Solution<Utility>;

/// Wide variants for instances whose weight sums may exceed `i64`.
pub type WideValuation = model::Valuation<i128>;
pub type WideInstance = model::Instance<i128>;
