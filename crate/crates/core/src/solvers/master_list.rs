// SPDX-License-Identifier: Apache-2.0

use std::ops::ControlFlow;

use itertools::Itertools;

use super::gale_shapley::gale_shapley;
use super::rotations::build_rotation_poset;
use super::Solution;
use crate::error::{Error, Result};
use crate::model::{blocking_edges, Edge, Instance, Matching, PreferenceSystem, Side};
use crate::num::Weight;
use crate::structure::find_any_master_list;
use crate::verify::is_popular;

/// The unique stable matching of a system with a master list on one side.
pub fn unique_stable_master_list(ps: &PreferenceSystem) -> Result<Matching> {
    ps.require_strict()?;
    if find_any_master_list(ps)?.is_none() {
        return Err(Error::NoMasterList);
    }
    let ma = gale_shapley(ps, Side::A)?;
    if ma != gale_shapley(ps, Side::B)? {
        return Err(Error::UniquenessViolated);
    }
    Ok(ma)
}

/// The popular matching whose blocking edges are exactly `s`, if any.
///
/// Such a matching must be the unique stable matching of `G − S`, so there
/// is at most one candidate to test.
pub fn solve_fixed_instability(ps: &PreferenceSystem, s: &[Edge]) -> Result<Option<Matching>> {
    ps.require_strict()?;
    if let Some(e) = s.iter().find(|&&e| !ps.contains_edge(e)) {
        return Err(Error::UnknownEdge(format!("({}, {})", e.a, e.b)));
    }
    let mut wanted = s.to_vec();
    wanted.sort_unstable();
    wanted.dedup();
    let candidate = unique_stable_master_list(&ps.without_edges(&wanted)?)?;
    if blocking_edges(ps, &candidate)? == wanted && is_popular(ps, &candidate)?.popular {
        Ok(Some(candidate))
    } else {
        Ok(None)
    }
}

/// Largest budget-respecting subset size.
pub(crate) fn max_subset_size<W: Weight>(inst: &Instance<W>) -> usize {
    inst.val.budget_k.to_usize().unwrap_or(usize::MAX).min(inst.ps.num_edges())
}

/// Maximum-utility popular matching with `ω ≥ t` and `c(bp) ≤ k`, for
/// systems with a master list on one side and positive costs.
///
/// Tries the unique stable matching of `G − S` for every `S` with
/// `c(S) ≤ k`, by size and then lexicographically. Ties keep the first.
pub fn solve_popular_budgeted_ml<W: Weight>(inst: &Instance<W>) -> Result<Option<Solution<W>>> {
    let ps = &inst.ps;
    ps.require_strict()?;
    inst.require_positive_costs()?;
    if find_any_master_list(ps)?.is_none() {
        return Err(Error::NoMasterList);
    }
    let mut best: Option<Solution<W>> = None;
    for size in 0..=max_subset_size(inst) {
        for s in ps.edges().iter().copied().combinations(size) {
            if inst.val.total_cost(&s)? > inst.val.budget_k {
                continue;
            }
            let m = unique_stable_master_list(&ps.without_edges(&s)?)?;
            let Some(sol) = Solution::evaluate(inst, m)? else { continue };
            if best.as_ref().is_some_and(|b| b.utility >= sol.utility) {
                continue;
            }
            if is_popular(ps, &sol.matching)?.popular {
                best = Some(sol);
            }
        }
    }
    Ok(best)
}

/// Exact search for a popular matching with blocking edges exactly `s`, on
/// any strict system.
///
/// Such a matching is stable in `G − S`, so every stable matching of `G − S`
/// is enumerated through its rotation poset and tested in `G`.
pub fn search_fixed_instability(ps: &PreferenceSystem, s: &[Edge]) -> Result<Option<Matching>> {
    ps.require_strict()?;
    if let Some(e) = s.iter().find(|&&e| !ps.contains_edge(e)) {
        return Err(Error::UnknownEdge(format!("({}, {})", e.a, e.b)));
    }
    let mut wanted = s.to_vec();
    wanted.sort_unstable();
    wanted.dedup();
    let poset = build_rotation_poset(&ps.without_edges(&wanted)?, |_| 0i64)?;
    let found = poset.for_each_stable_matching(|m| {
        let test = || -> Result<bool> { Ok(blocking_edges(ps, m)? == wanted && is_popular(ps, m)?.popular) };
        match test() {
            Ok(false) => ControlFlow::Continue(()),
            Ok(true) => ControlFlow::Break(Ok(m.clone())),
            Err(e) => ControlFlow::Break(Err(e)),
        }
    });
    found.transpose()
}
