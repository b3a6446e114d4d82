// SPDX-License-Identifier: Apache-2.0

use std::cmp::Reverse;
use std::ops::ControlFlow;

use super::Solution;
use crate::error::Result;
use crate::model::enumerate::for_each_matching;
use crate::model::Instance;
use crate::num::Weight;
use crate::verify::BruteForce;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Criterion {
    Popular,
    Pareto,
}

/// Maximum-utility feasible matching meeting `criterion`, by exhaustive
/// enumeration. Ties keep the first matching in canonical order. Works with
/// ties in the preferences.
pub fn brute_force_optimum<W: Weight>(
    inst: &Instance<W>,
    criterion: Criterion,
    guard: BruteForce,
) -> Result<Option<Solution<W>>> {
    guard.check_size(&inst.ps)?;
    let mut feasible = Vec::new();
    let mut failure = None;
    for_each_matching(&inst.ps, |m| match Solution::evaluate(inst, m.clone()) {
        Ok(Some(sol)) => {
            feasible.push(sol);
            ControlFlow::Continue(())
        }
        Ok(None) => ControlFlow::Continue(()),
        Err(e) => {
            failure = Some(e);
            ControlFlow::Break(())
        }
    });
    if let Some(e) = failure {
        return Err(e);
    }
    // stable sort keeps canonical order among equal utilities
    feasible.sort_by_key(|s| Reverse(s.utility));
    for sol in feasible {
        let ok = match criterion {
            Criterion::Popular => guard.is_popular(&inst.ps, &sol.matching)?.popular,
            Criterion::Pareto => guard.pareto_improvement(&inst.ps, &sol.matching)?.is_none(),
        };
        if ok {
            return Ok(Some(sol));
        }
    }
    Ok(None)
}
