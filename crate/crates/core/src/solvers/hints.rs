// SPDX-License-Identifier: Apache-2.0

use std::collections::{BTreeSet, HashMap};

use itertools::Itertools;

use super::master_list::max_subset_size;
use crate::error::Result;
use crate::model::{Edge, Instance};
use crate::num::Weight;

/// A guess `(S, F)`: `S` is the blocking set and `F` the edges among
/// `V(S)` outside `S` that the matching avoids.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Hint {
    pub s: Vec<Edge>,
    pub f: Vec<Edge>,
}

/// Edges of `G[V(S)] − S`, in canonical order.
fn inner_edges<W: Weight>(inst: &Instance<W>, s: &[Edge]) -> Vec<Edge> {
    let a: BTreeSet<usize> = s.iter().map(|e| e.a).collect();
    let b: BTreeSet<usize> = s.iter().map(|e| e.b).collect();
    inst.ps
        .edges()
        .iter()
        .copied()
        .filter(|e| a.contains(&e.a) && b.contains(&e.b) && !s.contains(e))
        .collect()
}

/// All matchings of the edge list `r`, as index sets, in lexicographic
/// order with the empty matching first.
fn sub_matchings(r: &[Edge]) -> Vec<Vec<usize>> {
    fn go(r: &[Edge], from: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(cur.clone());
        for i in from..r.len() {
            if cur.iter().all(|&j| !r[j].adjacent(&r[i])) {
                cur.push(i);
                go(r, i + 1, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(r, 0, &mut Vec::new(), &mut out);
    out
}

/// Streams every hint of the instance in canonical order: `S` by size and
/// then lexicographically with `c(S) ≤ k`, and for each `S` the sets `F`
/// whose complement in `G[V(S)] − S` is a matching, ordered by that
/// complement.
pub fn enumerate_hints<W: Weight>(inst: &Instance<W>) -> Result<impl Iterator<Item = Hint> + '_> {
    inst.require_positive_costs()?;
    let iter = (0..=max_subset_size(inst))
        .flat_map(move |size| inst.ps.edges().iter().copied().combinations(size))
        .filter(move |s| inst.val.total_cost(s).is_ok_and(|c| c <= inst.val.budget_k))
        .flat_map(move |s| {
            let r = inner_edges(inst, &s);
            sub_matchings(&r).into_iter().map(move |keep| Hint {
                s: s.clone(),
                f: r.iter().enumerate().filter(|(i, _)| !keep.contains(i)).map(|(_, &e)| e).collect(),
            })
        });
    Ok(iter)
}

/// Edge weights `w_H` for a hint: `0` on `F`, `ω(e) + w_0` elsewhere, and
/// nothing on `S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HintWeights<W: Weight> {
    pub hint: Hint,
    pub w0: W,
    weights: HashMap<Edge, W>,
}

impl<W: Weight> HintWeights<W> {
    /// `stable_size` is the size of any stable matching of `G − S`.
    pub fn new(inst: &Instance<W>, hint: Hint, stable_size: usize) -> Result<Self> {
        let top = inst.val.max_utility().max(W::one());
        let w0 = W::try_from_usize(stable_size)?.mul_checked(top)?;
        let mut weights = HashMap::new();
        for &e in inst.ps.edges() {
            if hint.s.contains(&e) {
                continue;
            }
            let w = if hint.f.contains(&e) {
                W::zero()
            } else {
                inst.val.utility(e).unwrap_or_else(W::zero).add_checked(w0)?
            };
            weights.insert(e, w);
        }
        Ok(HintWeights { hint, w0, weights })
    }

    pub fn weight(&self, e: Edge) -> Option<W> {
        self.weights.get(&e).copied()
    }
}
