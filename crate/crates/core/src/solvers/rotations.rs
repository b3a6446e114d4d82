// SPDX-License-Identifier: Apache-2.0

//! Rotations of the stable matching lattice and maximum-weight stable
//! matchings via a minimum-cut closure.
//!
//! Side `A` plays the proposing role: `man_optimal` is the `A`-optimal
//! stable matching and every rotation moves `A`-vertices down their lists.

use std::cmp::Ordering;
use std::ops::ControlFlow;

use super::gale_shapley::gale_shapley;
use crate::error::Result;
use crate::kernels::FlowNetwork;
use crate::model::{Edge, Matching, PreferenceSystem, Side, Vertex};
use crate::num::{checked_sum, Weight};

/// A cyclic exchange `(a_0, b_0), …, (a_{r-1}, b_{r-1})`; eliminating it
/// matches each `a_i` with `b_{i+1 mod r}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Rotation {
    pub pairs: Vec<Edge>,
}

impl Rotation {
    /// Edges removed from the matching.
    pub fn leaving(&self) -> &[Edge] {
        &self.pairs
    }

    /// Edges added to the matching.
    pub fn entering(&self) -> Vec<Edge> {
        let r = self.pairs.len();
        (0..r).map(|i| Edge::new(self.pairs[i].a, self.pairs[(i + 1) % r].b)).collect()
    }

    fn eliminate(&self, m: &mut Matching) {
        for &e in &self.pairs {
            m.remove(e);
        }
        for e in self.entering() {
            m.insert(e);
        }
    }

    fn undo(&self, m: &mut Matching) {
        for e in self.entering() {
            m.remove(e);
        }
        for &e in &self.pairs {
            m.insert(e);
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RotationPoset<W: Weight> {
    pub man_optimal: Matching,
    pub woman_optimal: Matching,
    /// In discovery order, which is a linear extension of the precedence.
    pub rotations: Vec<Rotation>,
    /// Direct predecessors of each rotation, sorted.
    pub precedence: Vec<Vec<usize>>,
    /// Net weight change when the rotation is eliminated.
    pub rotation_weight: Vec<W>,
}

/// First `b` after `M(a)` on `a`'s list that prefers `a` to its partner.
fn successor(ps: &PreferenceSystem, m: &Matching, a: usize) -> Option<usize> {
    let va = Vertex::a(a);
    let start = ps.state_rank(va, m.partner_of_a(a));
    ps.groups(va)
        .iter()
        .skip(start as usize + 1)
        .map(|g| g[0])
        .find(|&b| ps.prefers(Vertex::b(b), Some(a), m.partner_of_b(b)))
}

pub fn build_rotation_poset<W: Weight>(ps: &PreferenceSystem, weight: impl Fn(Edge) -> W) -> Result<RotationPoset<W>> {
    let man_optimal = gale_shapley(ps, Side::A)?;
    let woman_optimal = gale_shapley(ps, Side::B)?;
    let mut cur = man_optimal.clone();
    let mut rotations = Vec::new();
    // for each b: the rotations that changed its partner, in order
    let mut history: Vec<Vec<(usize, usize)>> = vec![Vec::new(); ps.num_b()];
    let mut pos = vec![usize::MAX; ps.num_a()];
    while let Some(start) = (0..ps.num_a()).find(|&a| cur.partner_of_a(a) != woman_optimal.partner_of_a(a)) {
        let mut seq = Vec::new();
        let mut x = start;
        while pos[x] == usize::MAX {
            pos[x] = seq.len();
            seq.push(x);
            let b = successor(ps, &cur, x).expect("a vertex above its worst stable partner has a successor");
            x = cur.partner_of_b(b).expect("successor is matched in a stable matching");
        }
        let cycle = &seq[pos[x]..];
        let rot = Rotation {
            pairs: cycle.iter().map(|&a| Edge::new(a, cur.partner_of_a(a).unwrap())).collect(),
        };
        for &a in &seq {
            pos[a] = usize::MAX;
        }
        let id = rotations.len();
        for e in rot.entering() {
            history[e.b].push((id, e.a));
        }
        rot.eliminate(&mut cur);
        rotations.push(rot);
    }
    debug_assert_eq!(cur, woman_optimal);

    let mut precedence = vec![Vec::new(); rotations.len()];
    for (id, rot) in rotations.iter().enumerate() {
        for (e, next) in rot.pairs.iter().zip(rot.entering()) {
            let va = Vertex::a(e.a);
            let (lo, hi) = (ps.rank(va, e.b).unwrap(), ps.rank(va, next.b).unwrap());
            for g in &ps.groups(va)[lo as usize..hi as usize] {
                let x = g[0];
                if let Some(p) = lifter(ps, &man_optimal, &history[x], x, e.a) {
                    if p != id {
                        precedence[id].push(p);
                    }
                }
            }
        }
        precedence[id].sort_unstable();
        precedence[id].dedup();
    }

    let rotation_weight = rotations
        .iter()
        .map(|r| {
            let gain = checked_sum(r.entering().into_iter().map(&weight))?;
            let loss = checked_sum(r.leaving().iter().map(|&e| weight(e)))?;
            gain.sub_checked(loss)
        })
        .collect::<Result<Vec<W>>>()?;
    Ok(RotationPoset {
        man_optimal,
        woman_optimal,
        rotations,
        precedence,
        rotation_weight,
    })
}

/// The rotation that first gives `x` a partner at least as good as `a`,
/// unless `x` starts there.
fn lifter(ps: &PreferenceSystem, m0: &Matching, history: &[(usize, usize)], x: usize, a: usize) -> Option<usize> {
    let vx = Vertex::b(x);
    if ps.compare(vx, m0.partner_of_b(x), Some(a)) != Ordering::Less {
        return None;
    }
    history
        .iter()
        .find(|&&(_, p)| ps.compare(vx, Some(p), Some(a)) != Ordering::Less)
        .map(|&(id, _)| id)
}

impl<W: Weight> RotationPoset<W> {
    pub fn len(&self) -> usize {
        self.rotations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rotations.is_empty()
    }

    /// Whether `chosen` contains every predecessor of each member.
    pub fn is_closed(&self, chosen: &[bool]) -> bool {
        (0..self.len()).all(|r| !chosen[r] || self.precedence[r].iter().all(|&p| chosen[p]))
    }

    /// The stable matching reached by eliminating the closed set `chosen`
    /// from the `A`-optimal matching.
    pub fn matching_for(&self, chosen: &[bool]) -> Matching {
        debug_assert!(self.is_closed(chosen));
        let mut m = self.man_optimal.clone();
        for (r, rot) in self.rotations.iter().enumerate() {
            if chosen[r] {
                rot.eliminate(&mut m);
            }
        }
        m
    }

    /// Visits every stable matching once, one per closed rotation set.
    pub fn for_each_stable_matching<T>(&self, mut visit: impl FnMut(&Matching) -> ControlFlow<T>) -> Option<T> {
        let mut chosen = vec![false; self.len()];
        let mut m = self.man_optimal.clone();
        match self.walk(0, &mut chosen, &mut m, &mut visit) {
            ControlFlow::Break(t) => Some(t),
            ControlFlow::Continue(()) => None,
        }
    }

    fn walk<T>(
        &self,
        r: usize,
        chosen: &mut [bool],
        m: &mut Matching,
        visit: &mut impl FnMut(&Matching) -> ControlFlow<T>,
    ) -> ControlFlow<T> {
        if r == self.len() {
            return visit(m);
        }
        self.walk(r + 1, chosen, m, visit)?;
        if self.precedence[r].iter().all(|&p| chosen[p]) {
            chosen[r] = true;
            self.rotations[r].eliminate(m);
            let out = self.walk(r + 1, chosen, m, visit);
            self.rotations[r].undo(m);
            chosen[r] = false;
            out?;
        }
        ControlFlow::Continue(())
    }

    /// Maximum-weight closed rotation set, by minimum cut.
    pub fn max_weight_closure(&self) -> Result<Vec<bool>> {
        let n = self.len();
        let (source, sink) = (n, n + 1);
        let mut total = W::one();
        for w in &self.rotation_weight {
            total = total.add_checked(w.abs())?;
        }
        let mut net = FlowNetwork::new(n + 2);
        for (r, &w) in self.rotation_weight.iter().enumerate() {
            if w > W::zero() {
                net.add_edge(source, r, w);
            } else if w < W::zero() {
                net.add_edge(r, sink, -w);
            }
            for &p in &self.precedence[r] {
                net.add_edge(r, p, total);
            }
        }
        net.max_flow(source, sink)?;
        let side = net.source_side(source);
        Ok(side[..n].to_vec())
    }
}

/// A stable matching of maximum total weight, together with that weight.
pub fn max_weight_stable_matching<W: Weight>(
    ps: &PreferenceSystem,
    weight: impl Fn(Edge) -> W,
) -> Result<(Matching, W)> {
    let poset = build_rotation_poset(ps, &weight)?;
    let chosen = poset.max_weight_closure()?;
    let m = poset.matching_for(&chosen);
    let total = checked_sum(m.edges().into_iter().map(&weight))?;
    Ok((m, total))
}
