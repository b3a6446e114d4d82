// SPDX-License-Identifier: Apache-2.0

use std::cmp::Ordering;

use crate::error::Result;
use crate::kernels::max_weight_matching;
use crate::model::{Edge, Matching, PreferenceSystem, Vertex};

/// Outcome of a popularity check. A witness is a matching that wins the
/// head-to-head vote against the tested one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PopularityVerdict {
    pub popular: bool,
    pub witness: Option<Matching>,
}

fn vote(ps: &PreferenceSystem, v: Vertex, new: usize, m: &Matching) -> i64 {
    match ps.compare(v, Some(new), m.partner(v)) {
        Ordering::Greater => 1,
        Ordering::Less => -1,
        Ordering::Equal => 0,
    }
}

/// Decides popularity of `m` under strict preferences.
///
/// The vote difference `Δ(M', M)` equals `C + Σ_{e ∈ M'} w(e)`, where
/// `w(a, b)` collects both endpoint votes and cancels the default vote each
/// endpoint casts when left exposed in `M'`, and `C` is the sum of those
/// defaults (`−|V(M)|`). So `m` is popular iff the maximum-weight matching
/// keeps `C + w(M') ≤ 0`.
pub fn is_popular(ps: &PreferenceSystem, m: &Matching) -> Result<PopularityVerdict> {
    ps.require_strict()?;
    m.check_in(ps)?;
    // an exposed vertex votes -1 if it is matched in m, 0 otherwise
    let exposed = |v: Vertex| if m.is_matched(v) { -1i64 } else { 0 };
    let weighted: Vec<(Edge, i64)> = ps
        .edges()
        .iter()
        .map(|&e| {
            let (a, b) = (Vertex::a(e.a), Vertex::b(e.b));
            let w = vote(ps, a, e.b, m) + vote(ps, b, e.a, m) - exposed(a) - exposed(b);
            (e, w)
        })
        .collect();
    let base = -2 * m.len() as i64;
    let (best, chosen) = max_weight_matching(ps.num_a(), ps.num_b(), &weighted)?;
    if base + best <= 0 {
        return Ok(PopularityVerdict {
            popular: true,
            witness: None,
        });
    }
    let witness = Matching::new(ps, chosen)?;
    debug_assert_eq!(crate::model::delta_votes(ps, m, &witness)?, base + best);
    Ok(PopularityVerdict {
        popular: false,
        witness: Some(witness),
    })
}
