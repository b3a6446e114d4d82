// SPDX-License-Identifier: Apache-2.0

//! Constructive algorithms and the exhaustive optimum oracle.

mod budget;
mod gale_shapley;
mod hints;
mod master_list;
mod oracle;
mod pareto;
mod rotations;

pub use budget::find_matching_within_budget;
pub use gale_shapley::gale_shapley;
pub use hints::{enumerate_hints, Hint, HintWeights};
pub use master_list::{search_fixed_instability, solve_fixed_instability, solve_popular_budgeted_ml, unique_stable_master_list};
pub use oracle::{brute_force_optimum, Criterion};
pub use pareto::{solve_pareto_budgeted, ParetoSolution};
pub use rotations::{build_rotation_poset, max_weight_stable_matching, Rotation, RotationPoset};

use crate::error::Result;
use crate::model::{blocking_edges, is_feasible, Edge, Instance, Matching};
use crate::num::Weight;

/// A matching together with its utility, blocking edges and their cost.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution<W: Weight> {
    pub matching: Matching,
    pub utility: W,
    pub blocking_edges: Vec<Edge>,
    pub cost: W,
}

impl<W: Weight> Solution<W> {
    /// Computes the derived fields of `matching`.
    pub fn of(inst: &Instance<W>, matching: Matching) -> Result<Self> {
        let blocking = blocking_edges(&inst.ps, &matching)?;
        Ok(Solution {
            utility: inst.utility_of(&matching)?,
            cost: inst.val.total_cost(&blocking)?,
            blocking_edges: blocking,
            matching,
        })
    }

    /// Like [`Solution::of`], but `None` unless `ω ≥ t` and `c(bp) ≤ k`.
    pub fn evaluate(inst: &Instance<W>, matching: Matching) -> Result<Option<Self>> {
        let sol = Self::of(inst, matching)?;
        debug_assert_eq!(
            is_feasible(inst, &sol.matching)?,
            sol.utility >= inst.val.objective_t && sol.cost <= inst.val.budget_k
        );
        Ok((sol.utility >= inst.val.objective_t && sol.cost <= inst.val.budget_k).then_some(sol))
    }
}
