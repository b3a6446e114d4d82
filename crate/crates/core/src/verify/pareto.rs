// SPDX-License-Identifier: Apache-2.0

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::kernels::max_weight_matching;
use crate::model::{Edge, Matching, PreferenceSystem, Side, Vertex};

/// Whether `other` Pareto-improves `m`: nobody is worse off and somebody is
/// strictly better off. Ties are allowed.
pub fn is_pareto_improvement(ps: &PreferenceSystem, m: &Matching, other: &Matching) -> Result<bool> {
    m.check_in(ps)?;
    other.check_in(ps)?;
    let mut better = false;
    for side in [Side::A, Side::B] {
        for index in 0..ps.len(side) {
            let v = Vertex { side, index };
            match ps.compare(v, other.partner(v), m.partner(v)) {
                Ordering::Less => return Ok(false),
                Ordering::Greater => better = true,
                Ordering::Equal => {}
            }
        }
    }
    Ok(better)
}

/// Finds a Pareto-improvement of `m`, or `None` if `m` is Pareto-optimal.
///
/// Works on the subgraph of edges both endpoints weakly prefer to their
/// `M`-state. Each edge scores `B` per `M`-matched endpoint plus one per
/// strictly improved endpoint, with `B` larger than any possible number of
/// improvements. An improvement exists iff the best matching covers every
/// `M`-matched vertex and improves at least one.
pub fn find_pareto_improvement(ps: &PreferenceSystem, m: &Matching) -> Result<Option<Matching>> {
    ps.require_strict()?;
    m.check_in(ps)?;
    let big = 2 * ps.num_edges() as i64 + 1;
    let mut weighted: Vec<(Edge, i64)> = Vec::new();
    for &e in ps.edges() {
        let (a, b) = (Vertex::a(e.a), Vertex::b(e.b));
        let for_a = ps.compare(a, Some(e.b), m.partner(a));
        let for_b = ps.compare(b, Some(e.a), m.partner(b));
        if for_a == Ordering::Less || for_b == Ordering::Less {
            continue;
        }
        let covered = m.is_matched(a) as i64 + m.is_matched(b) as i64;
        let gained = (for_a == Ordering::Greater) as i64 + (for_b == Ordering::Greater) as i64;
        weighted.push((e, big * covered + gained));
    }
    let (best, chosen) = max_weight_matching(ps.num_a(), ps.num_b(), &weighted)?;
    if best < big * 2 * m.len() as i64 + 1 {
        return Ok(None);
    }
    let better = Matching::new(ps, chosen)?;
    debug_assert!(is_pareto_improvement(ps, m, &better)?);
    Ok(Some(better))
}

/// Applies Pareto-improvements until none is left.
pub fn pareto_closure(ps: &PreferenceSystem, m: &Matching) -> Result<Matching> {
    let n = ps.num_vertices().max(1);
    let limit = n * n;
    let mut cur = m.clone();
    for _ in 0..=limit {
        match find_pareto_improvement(ps, &cur)? {
            Some(next) => cur = next,
            None => return Ok(cur),
        }
    }
    Err(Error::NonTermination(limit))
}
