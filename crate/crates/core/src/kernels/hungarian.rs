// SPDX-License-Identifier: Apache-2.0

//! Maximum-weight bipartite matching via the Hungarian method with
//! potentials (shortest augmenting paths on a dense square matrix).

use crate::error::{Error, Result};
use crate::model::Edge;
use crate::num::Weight;

/// Maximum-weight matching (of any cardinality) on the bipartite graph with
/// `num_a × num_b` vertices and the given weighted edges.
///
/// Only positive-weight edges can be part of an optimum, so the problem is
/// solved as an assignment on the square matrix padded with zeros, and
/// zero-weight cells are dropped from the result. Returns the optimum value
/// and the chosen edges in canonical order.
pub fn max_weight_matching<W: Weight>(num_a: usize, num_b: usize, edges: &[(Edge, W)]) -> Result<(W, Vec<Edge>)> {
    let n = num_a.max(num_b);
    if n == 0 {
        return Ok((W::zero(), Vec::new()));
    }
    let mut weight = vec![W::zero(); n * n];
    let mut max_w = W::zero();
    for &(e, w) in edges {
        if e.a >= num_a || e.b >= num_b {
            return Err(Error::UnknownEdge(format!("({}, {})", e.a, e.b)));
        }
        let cell = &mut weight[e.a * n + e.b];
        if w > *cell {
            *cell = w;
            max_w = max_w.max(w);
        }
    }
    // potentials are bounded by a small multiple of n * max_w
    W::try_from_usize(4 * n + 4)?.mul_checked(max_w.max(W::one()))?;

    let cost = |i: usize, j: usize| -weight[(i - 1) * n + (j - 1)];
    let inf = W::max_value();
    let mut u = vec![W::zero(); n + 1];
    let mut v = vec![W::zero(); n + 1];
    let mut p = vec![0usize; n + 1];
    let mut way = vec![0usize; n + 1];
    for i in 1..=n {
        p[0] = i;
        let mut j0 = 0;
        let mut minv = vec![inf; n + 1];
        let mut used = vec![false; n + 1];
        loop {
            used[j0] = true;
            let i0 = p[j0];
            let mut delta = inf;
            let mut j1 = 0;
            for j in 1..=n {
                if used[j] {
                    continue;
                }
                let cur = cost(i0, j) - u[i0] - v[j];
                if cur < minv[j] {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if minv[j] < delta {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for j in 0..=n {
                if used[j] {
                    u[p[j]] = u[p[j]] + delta;
                    v[j] = v[j] - delta;
                } else {
                    minv[j] = minv[j] - delta;
                }
            }
            j0 = j1;
            if p[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }

    let mut chosen = Vec::new();
    let mut total = W::zero();
    for (b, &pj) in p.iter().enumerate().skip(1).map(|(j, pj)| (j - 1, pj)) {
        let a = pj - 1;
        let w = weight[a * n + b];
        if a < num_a && b < num_b && w > W::zero() {
            chosen.push(Edge::new(a, b));
            total = total.add_checked(w)?;
        }
    }
    chosen.sort_unstable();
    Ok((total, chosen))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn brute(num_a: usize, num_b: usize, edges: &[(Edge, i64)]) -> i64 {
        fn rec(a: usize, num_a: usize, used: &mut Vec<bool>, w: &[Vec<Option<i64>>]) -> i64 {
            if a == num_a {
                return 0;
            }
            let mut best = rec(a + 1, num_a, used, w);
            for b in 0..used.len() {
                if let Some(x) = w[a][b] {
                    if !used[b] {
                        used[b] = true;
                        best = best.max(x + rec(a + 1, num_a, used, w));
                        used[b] = false;
                    }
                }
            }
            best
        }
        let mut w = vec![vec![None; num_b]; num_a];
        for &(e, x) in edges {
            w[e.a][e.b] = Some(x);
        }
        rec(0, num_a, &mut vec![false; num_b], &w)
    }

    #[test]
    fn small_cases() {
        assert_eq!(max_weight_matching::<i64>(0, 0, &[]).unwrap(), (0, vec![]));
        let e = |a, b| Edge::new(a, b);
        // choose the two outer edges over the heavy middle one
        let edges = [(e(0, 0), 3), (e(0, 1), 5), (e(1, 1), 3)];
        assert_eq!(max_weight_matching(2, 2, &edges).unwrap(), (6, vec![e(0, 0), e(1, 1)]));
        let edges = [(e(0, 0), 3), (e(0, 1), 7), (e(1, 1), 3)];
        assert_eq!(max_weight_matching(2, 2, &edges).unwrap(), (7, vec![e(0, 1)]));
        // negative edges are never used
        let edges = [(e(0, 0), -1), (e(1, 2), 4)];
        assert_eq!(max_weight_matching(2, 3, &edges).unwrap(), (4, vec![e(1, 2)]));
    }

    proptest! {
        #[test]
        fn matches_exhaustive_search(
            num_a in 0usize..5,
            num_b in 0usize..5,
            cells in proptest::collection::vec(proptest::option::of(-3i64..10), 25),
        ) {
            let edges: Vec<(Edge, i64)> = (0..num_a)
                .flat_map(|a| (0..num_b).map(move |b| (a, b)))
                .filter_map(|(a, b)| cells[a * 5 + b].map(|w| (Edge::new(a, b), w)))
                .collect();
            let (value, chosen) = max_weight_matching(num_a, num_b, &edges).unwrap();
            prop_assert_eq!(value, brute(num_a, num_b, &edges));
            let mut seen_a = std::collections::HashSet::new();
            let mut seen_b = std::collections::HashSet::new();
            let mut sum = 0;
            for e in &chosen {
                prop_assert!(seen_a.insert(e.a) && seen_b.insert(e.b));
                sum += edges.iter().find(|(f, _)| f == e).unwrap().1;
            }
            prop_assert_eq!(sum, value);
        }
    }
}
