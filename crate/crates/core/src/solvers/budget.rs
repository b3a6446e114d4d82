// SPDX-License-Identifier: Apache-2.0

//! Bounded search for large matchings with few blocking edges.

use crate::error::Result;
use crate::model::{Edge, Matching, PreferenceSystem, Vertex};

/// Finds a matching with at least `min_size` edges and at most
/// `max_blocking` blocking edges, or proves that none exists.
///
/// Depth-first over side `A` in index order, each vertex trying its list
/// best-first and then staying unmatched. A branch is cut when a maximum
/// matching of the undecided part cannot reach `min_size`, or when more than
/// `max_blocking` edges already block whatever the undecided vertices do.
pub fn find_matching_within_budget(ps: &PreferenceSystem, min_size: usize, max_blocking: usize) -> Result<Option<Matching>> {
    ps.require_strict()?;
    let mut search = Search {
        ps,
        min_size,
        max_blocking,
        m: Matching::empty(ps),
        lists: (0..ps.num_a()).map(|a| ps.neighbors(Vertex::a(a)).collect()).collect(),
    };
    Ok(search.go(0).then_some(search.m))
}

struct Search<'a> {
    ps: &'a PreferenceSystem,
    min_size: usize,
    max_blocking: usize,
    m: Matching,
    lists: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn go(&mut self, next: usize) -> bool {
        if self.m.len() + self.reachable(next) < self.min_size || self.forced_blocking(next) > self.max_blocking {
            return false;
        }
        if next == self.ps.num_a() {
            return true;
        }
        for i in 0..self.lists[next].len() {
            let b = self.lists[next][i];
            if self.m.partner_of_b(b).is_none() {
                let e = Edge::new(next, b);
                self.m.insert(e);
                if self.go(next + 1) {
                    return true;
                }
                self.m.remove(e);
            }
        }
        self.go(next + 1)
    }

    /// Size of a maximum matching between undecided `A` vertices and free
    /// `B` vertices.
    fn reachable(&self, next: usize) -> usize {
        let mut owner: Vec<Option<usize>> = vec![None; self.ps.num_b()];
        let mut size = 0;
        for a in next..self.ps.num_a() {
            let mut seen = vec![false; self.ps.num_b()];
            if self.augment(a, &mut owner, &mut seen) {
                size += 1;
            }
        }
        size
    }

    fn augment(&self, a: usize, owner: &mut [Option<usize>], seen: &mut [bool]) -> bool {
        for &b in &self.lists[a] {
            if seen[b] || self.m.partner_of_b(b).is_some() {
                continue;
            }
            seen[b] = true;
            if owner[b].is_none_or(|a2| self.augment(a2, owner, seen)) {
                owner[b] = Some(a);
                return true;
            }
        }
        false
    }

    /// Edges at decided `A` vertices that block every completion.
    fn forced_blocking(&self, next: usize) -> usize {
        let ps = self.ps;
        let mut count = 0;
        for a in 0..next {
            let va = Vertex::a(a);
            for &b in &self.lists[a] {
                if !ps.prefers(va, Some(b), self.m.partner_of_a(a)) {
                    continue;
                }
                let vb = Vertex::b(b);
                let blocks = match self.m.partner_of_b(b) {
                    Some(a2) => ps.prefers(vb, Some(a), Some(a2)),
                    // b stays below a unless an undecided vertex it prefers takes it
                    None => ps.neighbors(vb).take_while(|&x| x != a).all(|x| x < next),
                };
                count += usize::from(blocks);
            }
        }
        count
    }
}
