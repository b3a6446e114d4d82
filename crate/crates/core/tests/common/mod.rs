// SPDX-License-Identifier: Apache-2.0
#![allow(dead_code)]

use std::collections::HashMap;
use std::ops::ControlFlow;

use popmatch::model::{delta_votes, enumerate::for_each_matching, is_stable, Valuation};
use popmatch::{Edge, Instance, Matching, PreferenceSystem};
use rand::seq::SliceRandom;
use rand::Rng;

/// a1: b2 > b1; a2: b1 > b2 > b3; a3: b3 > b2 and the mirrored B lists,
/// with S = {(a1,b2), (a2,b1)} of utility 1, every other edge 2, t = 6, k = 2.
pub fn example1() -> Instance {
    let ps = PreferenceSystem::strict_from_names(
        &["a1", "a2", "a3"],
        &["b1", "b2", "b3"],
        &[
            ("a1", &["b2", "b1"]),
            ("a2", &["b1", "b2", "b3"]),
            ("a3", &["b3", "b2"]),
            ("b1", &["a2", "a1"]),
            ("b2", &["a1", "a3", "a2"]),
            ("b3", &["a2", "a3"]),
        ],
    )
    .unwrap();
    let s = example1_s(&ps);
    let val = Valuation::from_fn(&ps, |e| if s.contains(&e) { 1 } else { 2 }, |_| 1, 6, 2).unwrap();
    Instance::new(ps, val).unwrap()
}

pub fn example1_s(ps: &PreferenceSystem) -> Vec<Edge> {
    let mut s = vec![ps.edge_by_names("a1", "b2").unwrap(), ps.edge_by_names("a2", "b1").unwrap()];
    s.sort();
    s
}

pub fn names(ps: &PreferenceSystem, pairs: &[(&str, &str)]) -> Matching {
    Matching::from_names(ps, pairs).unwrap()
}

/// Greedy matching over a shuffled edge list.
pub fn random_matching(ps: &PreferenceSystem, rng: &mut impl Rng) -> Matching {
    let mut edges = ps.edges().to_vec();
    edges.shuffle(rng);
    let mut m = Matching::empty(ps);
    for e in edges {
        if m.partner_of_a(e.a).is_none() && m.partner_of_b(e.b).is_none() && rng.gen_bool(0.7) {
            m.insert(e);
        }
    }
    m
}

/// Popularity by comparing against every matching.
pub fn popular_by_enumeration(ps: &PreferenceSystem, m: &Matching) -> bool {
    for_each_matching(ps, |m2| {
        if delta_votes(ps, m, m2).unwrap() > 0 {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })
    .is_none()
}

pub fn stable_by_enumeration(ps: &PreferenceSystem) -> Vec<Matching> {
    let mut out = Vec::new();
    for_each_matching(ps, |m| {
        if is_stable(ps, m).unwrap() {
            out.push(m.clone());
        }
        ControlFlow::<()>::Continue(())
    });
    out
}

/// Size of a maximum matching, by augmenting paths.
pub fn maximum_matching_size(ps: &PreferenceSystem) -> usize {
    let mut adj: HashMap<usize, Vec<usize>> = HashMap::new();
    for e in ps.edges() {
        adj.entry(e.a).or_default().push(e.b);
    }
    let mut owner = vec![None; ps.num_b()];
    fn augment(a: usize, adj: &HashMap<usize, Vec<usize>>, owner: &mut [Option<usize>], seen: &mut [bool]) -> bool {
        for &b in adj.get(&a).into_iter().flatten() {
            if !seen[b] {
                seen[b] = true;
                if owner[b].is_none() || augment(owner[b].unwrap(), adj, owner, seen) {
                    owner[b] = Some(a);
                    return true;
                }
            }
        }
        false
    }
    (0..ps.num_a()).filter(|&a| augment(a, &adj, &mut owner, &mut vec![false; ps.num_b()])).count()
}

/// Satisfying assignment by trying all `2^n` assignments.
pub fn brute_force_sat(num_vars: usize, clauses: &[[i32; 3]]) -> Option<Vec<bool>> {
    (0u64..1 << num_vars)
        .map(|bits| (0..num_vars).map(|i| bits >> i & 1 == 1).collect::<Vec<bool>>())
        .find(|x| {
            clauses.iter().all(|c| c.iter().any(|&l| x[l.unsigned_abs() as usize - 1] == (l > 0)))
        })
}
