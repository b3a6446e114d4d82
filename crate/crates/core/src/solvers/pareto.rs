// SPDX-License-Identifier: Apache-2.0

use super::gale_shapley::gale_shapley;
use super::hints::{enumerate_hints, Hint, HintWeights};
use super::rotations::max_weight_stable_matching;
use super::Solution;
use crate::error::Result;
use crate::model::{Edge, Instance, PreferenceSystem, Side};
use crate::num::Weight;
use crate::verify::find_pareto_improvement;

/// A Pareto-optimal matching together with the hint that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParetoSolution<W: Weight> {
    pub solution: Solution<W>,
    pub hint: Hint,
}

/// Maximum-utility Pareto-optimal matching with `ω ≥ t` and `c(bp) ≤ k`.
///
/// For each hint `(S, F)` takes a maximum-`w_H` stable matching `M_H` of
/// `G − S` and accepts it when it is feasible, avoids `F`, and admits no
/// Pareto-improvement in `G`. Ties keep the first hint in canonical order.
pub fn solve_pareto_budgeted<W: Weight>(inst: &Instance<W>) -> Result<Option<ParetoSolution<W>>> {
    let ps = &inst.ps;
    ps.require_strict()?;
    let mut best: Option<ParetoSolution<W>> = None;
    // hints arrive grouped by S
    let mut cached: Option<(Vec<Edge>, PreferenceSystem, usize)> = None;
    for hint in enumerate_hints(inst)? {
        if cached.as_ref().is_none_or(|(s, _, _)| *s != hint.s) {
            let g = ps.without_edges(&hint.s)?;
            let size = gale_shapley(&g, Side::A)?.len();
            cached = Some((hint.s.clone(), g, size));
        }
        let (_, g, size) = cached.as_ref().unwrap();
        let w = HintWeights::new(inst, hint, *size)?;
        let (m, _) = max_weight_stable_matching(g, |e| w.weight(e).unwrap_or_else(W::zero))?;
        if m.edges().iter().any(|e| w.hint.f.contains(e)) {
            continue;
        }
        let Some(sol) = Solution::evaluate(inst, m)? else { continue };
        if best.as_ref().is_some_and(|b| b.solution.utility >= sol.utility) {
            continue;
        }
        if find_pareto_improvement(ps, &sol.matching)?.is_none() {
            best = Some(ParetoSolution { solution: sol, hint: w.hint });
        }
    }
    Ok(best)
}
