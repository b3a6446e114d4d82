// SPDX-License-Identifier: Apache-2.0

use crate::error::Result;
use crate::model::{Edge, Matching, PreferenceSystem, Side, Vertex};

/// Deferred acceptance with `proposing` making offers. Returns the stable
/// matching optimal for the proposing side.
pub fn gale_shapley(ps: &PreferenceSystem, proposing: Side) -> Result<Matching> {
    ps.require_strict()?;
    let receiving = proposing.other();
    let lists: Vec<Vec<usize>> = (0..ps.len(proposing))
        .map(|i| ps.groups(Vertex { side: proposing, index: i }).iter().map(|g| g[0]).collect())
        .collect();
    let mut next = vec![0usize; lists.len()];
    let mut held: Vec<Option<usize>> = vec![None; ps.len(receiving)];
    let mut free: Vec<usize> = (0..lists.len()).rev().collect();
    while let Some(p) = free.pop() {
        let Some(&r) = lists[p].get(next[p]) else { continue };
        next[p] += 1;
        let rv = Vertex { side: receiving, index: r };
        if ps.prefers(rv, Some(p), held[r]) {
            if let Some(old) = held[r].replace(p) {
                free.push(old);
            }
        } else {
            free.push(p);
        }
    }
    let edges = held.iter().enumerate().filter_map(|(r, p)| {
        p.map(|p| match proposing {
            Side::A => Edge::new(p, r),
            Side::B => Edge::new(r, p),
        })
    });
    Matching::new(ps, edges)
}
