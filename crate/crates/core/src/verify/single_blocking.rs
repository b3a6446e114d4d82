// SPDX-License-Identifier: Apache-2.0

use std::collections::VecDeque;

use super::gm::build_gm;
use crate::error::{Error, Result};
use crate::model::{blocks, is_stable, Edge, Matching, PreferenceSystem};

/// The four conditions that together characterise a popular matching whose
/// only blocking edge is `e = (u, v)`.
///
/// - `c1`: `e` blocks `M` in `G`.
/// - `c2`: `M` is stable in `G − e`.
/// - `c3i`: `(G − e)_M` has no alternating path from an `M`-exposed vertex
///   to `u` or `v` of even length (ending in an `M`-edge).
/// - `c3ii`: `(G − e)_M` has no alternating path from `u` to `v` that starts
///   and ends with an `M`-edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SingleBlockingReport {
    pub c1: bool,
    pub c2: bool,
    pub c3i: bool,
    pub c3ii: bool,
}

impl SingleBlockingReport {
    pub fn all(&self) -> bool {
        self.c1 && self.c2 && self.c3i && self.c3ii
    }
}

/// Evaluates the four conditions for `m` and edge `e` of `ps`.
///
/// When `e ∈ m` both `c1` and `c2` fail; the path conditions are then
/// evaluated for `m − e`.
pub fn check_single_blocking(ps: &PreferenceSystem, m: &Matching, e: Edge) -> Result<SingleBlockingReport> {
    ps.require_strict()?;
    m.check_in(ps)?;
    if !ps.contains_edge(e) {
        return Err(Error::UnknownEdge(format!("({}, {})", e.a, e.b)));
    }
    let c1 = blocks(ps, m, e);
    let g = ps.without_edges(&[e])?;
    let mut m = m.clone();
    let in_m = m.contains(e);
    if in_m {
        m.remove(e);
    }
    let c2 = !in_m && is_stable(&g, &m)?;
    let gm = build_gm(&g, &m)?;
    let (adj_a, adj_b) = gm.adjacency();
    let (na, nb) = (g.num_a(), g.num_b());
    // node ids: A vertices 0..na, B vertices na..na+nb; the state bit says
    // whether the last edge on the path was an M-edge
    let node = |side_b: bool, i: usize| if side_b { na + i } else { i };
    let walk = |starts: &[(usize, bool)]| -> Vec<[bool; 2]> {
        let mut seen = vec![[false; 2]; na + nb];
        let mut queue = VecDeque::new();
        for &(x, last_m) in starts {
            if !seen[x][last_m as usize] {
                seen[x][last_m as usize] = true;
                queue.push_back((x, last_m));
            }
        }
        while let Some((x, last_m)) = queue.pop_front() {
            let (side_b, i) = if x < na { (false, x) } else { (true, x - na) };
            let partner = if side_b { m.partner_of_b(i) } else { m.partner_of_a(i) };
            let nbrs = if side_b { &adj_b[i] } else { &adj_a[i] };
            for &y in nbrs {
                let is_m = partner == Some(y);
                if is_m == last_m {
                    continue;
                }
                let next = (node(!side_b, y), is_m);
                if !seen[next.0][next.1 as usize] {
                    seen[next.0][next.1 as usize] = true;
                    queue.push_back(next);
                }
            }
        }
        seen
    };
    // c3i: start at every exposed vertex with "last edge was M" so the first
    // step is a non-M edge; the empty path counts
    let exposed: Vec<(usize, bool)> = (0..na)
        .filter(|&a| m.partner_of_a(a).is_none())
        .map(|a| (node(false, a), true))
        .chain((0..nb).filter(|&b| m.partner_of_b(b).is_none()).map(|b| (node(true, b), true)))
        .collect();
    let reach = walk(&exposed);
    let (u, v) = (node(false, e.a), node(true, e.b));
    let c3i = !reach[u][1] && !reach[v][1];
    // c3ii: from u, first edge in M
    let from_u = walk(&[(u, false)]);
    let c3ii = !from_u[v][1];
    Ok(SingleBlockingReport { c1, c2, c3i, c3ii })
}
