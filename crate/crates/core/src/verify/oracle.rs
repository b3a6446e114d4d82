// SPDX-License-Identifier: Apache-2.0

//! Definition-level exhaustive checks. These share no code with the
//! matching-based verifiers they are used to validate.
//!
//! Both searches visit candidate matchings in canonical order (see
//! [`crate::model::enumerate`]) and report the first hit.

use std::cmp::Ordering;

use super::popularity::PopularityVerdict;
use crate::error::{Error, Result};
use crate::model::{Edge, Matching, PreferenceSystem, Vertex};

/// Size guard for exhaustive searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BruteForce {
    /// Largest number of vertices allowed on either side.
    pub limit: usize,
}

impl Default for BruteForce {
    fn default() -> Self {
        BruteForce { limit: Self::DEFAULT_LIMIT }
    }
}

impl BruteForce {
    pub const DEFAULT_LIMIT: usize = 16;

    pub fn with_limit(limit: usize) -> Self {
        BruteForce { limit }
    }

    /// No size guard at all.
    pub fn forced() -> Self {
        BruteForce { limit: usize::MAX }
    }

    pub fn check_size(&self, ps: &PreferenceSystem) -> Result<()> {
        let per_side = ps.num_a().max(ps.num_b());
        if per_side > self.limit {
            return Err(Error::InstanceTooLarge {
                per_side,
                limit: self.limit,
            });
        }
        Ok(())
    }

    /// Finds the first matching `M'` in canonical order that is more popular
    /// than `m`. Ties are allowed.
    ///
    /// The search is the canonical depth-first enumeration, cut off wherever
    /// the partial vote plus the best vote every undecided vertex could still
    /// cast is not positive.
    pub fn is_popular(&self, ps: &PreferenceSystem, m: &Matching) -> Result<PopularityVerdict> {
        self.check_size(ps)?;
        m.check_in(ps)?;
        let na = ps.num_a();
        let vote = |v: Vertex, state: Option<usize>| match ps.compare(v, state, m.partner(v)) {
            Ordering::Greater => 1i64,
            Ordering::Less => -1,
            Ordering::Equal => 0,
        };
        let best = |v: Vertex| ps.neighbors(v).map(|u| vote(v, Some(u))).fold(vote(v, None), i64::max);
        let best_b: Vec<i64> = (0..ps.num_b()).map(|b| best(Vertex::b(b))).collect();
        let mut rest_a = vec![0i64; na + 1];
        for a in (0..na).rev() {
            rest_a[a] = rest_a[a + 1] + best(Vertex::a(a));
        }
        let mut search = VoteSearch {
            adj: sorted_adjacency(ps),
            vote: &vote,
            best_b: &best_b,
            rest_a: &rest_a,
            cur: Matching::empty(ps),
        };
        let free_best = best_b.iter().sum();
        let witness = search.run(0, 0, free_best);
        Ok(PopularityVerdict {
            popular: witness.is_none(),
            witness,
        })
    }

    /// First Pareto-improvement of `m` in canonical order, by a depth-first
    /// search that only extends assignments in which nobody is worse off.
    pub fn pareto_improvement(&self, ps: &PreferenceSystem, m: &Matching) -> Result<Option<Matching>> {
        self.check_size(ps)?;
        m.check_in(ps)?;
        let adj = sorted_adjacency(ps);
        let mut cur = Matching::empty(ps);
        Ok(improve(ps, m, &adj, 0, &mut cur, false))
    }
}

fn sorted_adjacency(ps: &PreferenceSystem) -> Vec<Vec<usize>> {
    (0..ps.num_a())
        .map(|a| {
            let mut n: Vec<usize> = ps.neighbors(Vertex::a(a)).collect();
            n.sort_unstable();
            n
        })
        .collect()
}

struct VoteSearch<'a, F: Fn(Vertex, Option<usize>) -> i64> {
    adj: Vec<Vec<usize>>,
    vote: &'a F,
    best_b: &'a [i64],
    rest_a: &'a [i64],
    cur: Matching,
}

impl<F: Fn(Vertex, Option<usize>) -> i64> VoteSearch<'_, F> {
    /// `partial` holds the votes of decided `A`-vertices and of `B`-vertices
    /// matched so far; `free_best` bounds the votes of the other `B`-vertices.
    fn run(&mut self, a: usize, partial: i64, free_best: i64) -> Option<Matching> {
        if partial + self.rest_a[a] + free_best <= 0 {
            return None;
        }
        if a == self.adj.len() {
            let exposed: i64 = (0..self.best_b.len())
                .filter(|&b| self.cur.partner_of_b(b).is_none())
                .map(|b| (self.vote)(Vertex::b(b), None))
                .sum();
            return (partial + exposed > 0).then(|| self.cur.clone());
        }
        let va = Vertex::a(a);
        if let Some(found) = self.run(a + 1, partial + (self.vote)(va, None), free_best) {
            return Some(found);
        }
        for i in 0..self.adj[a].len() {
            let b = self.adj[a][i];
            if self.cur.partner_of_b(b).is_some() {
                continue;
            }
            let gain = (self.vote)(va, Some(b)) + (self.vote)(Vertex::b(b), Some(a));
            let e = Edge::new(a, b);
            self.cur.insert(e);
            let found = self.run(a + 1, partial + gain, free_best - self.best_b[b]);
            self.cur.remove(e);
            if found.is_some() {
                return found;
            }
        }
        None
    }
}

fn improve(
    ps: &PreferenceSystem,
    m: &Matching,
    adj: &[Vec<usize>],
    a: usize,
    cur: &mut Matching,
    improved: bool,
) -> Option<Matching> {
    if a == adj.len() {
        let mut any = improved;
        for b in 0..ps.num_b() {
            let v = Vertex::b(b);
            match ps.compare(v, cur.partner(v), m.partner(v)) {
                Ordering::Less => return None,
                Ordering::Greater => any = true,
                Ordering::Equal => {}
            }
        }
        return any.then(|| cur.clone());
    }
    let va = Vertex::a(a);
    if m.partner(va).is_none() {
        if let Some(found) = improve(ps, m, adj, a + 1, cur, improved) {
            return Some(found);
        }
    }
    for &b in &adj[a] {
        if cur.partner_of_b(b).is_some() {
            continue;
        }
        let for_a = ps.compare(va, Some(b), m.partner(va));
        let for_b = ps.compare(Vertex::b(b), Some(a), m.partner_of_b(b));
        if for_a == Ordering::Less || for_b == Ordering::Less {
            continue;
        }
        let gain = improved || for_a == Ordering::Greater || for_b == Ordering::Greater;
        let e = Edge::new(a, b);
        cur.insert(e);
        let found = improve(ps, m, adj, a + 1, cur, gain);
        cur.remove(e);
        if found.is_some() {
            return found;
        }
    }
    None
}

/// [`BruteForce::is_popular`] with the default size guard.
pub fn is_popular_bruteforce(ps: &PreferenceSystem, m: &Matching) -> Result<PopularityVerdict> {
    BruteForce::default().is_popular(ps, m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::delta_votes;
    use crate::model::enumerate::{all_matchings, for_each_matching};
    use std::ops::ControlFlow;

    fn brute(ps: &PreferenceSystem, m: &Matching) -> Option<Matching> {
        for_each_matching(ps, |other| {
            if delta_votes(ps, m, other).unwrap() > 0 {
                ControlFlow::Break(other.clone())
            } else {
                ControlFlow::Continue(())
            }
        })
    }

    #[test]
    fn pruned_search_finds_the_first_witness() {
        // both a's rank b1 first, both b's rank a1 first
        let ps = PreferenceSystem::strict_from_names(
            &["a1", "a2"],
            &["b1", "b2"],
            &[
                ("a1", &["b1", "b2"]),
                ("a2", &["b1", "b2"]),
                ("b1", &["a1", "a2"]),
                ("b2", &["a1", "a2"]),
            ],
        )
        .unwrap();
        let matchings = all_matchings(&ps);
        assert_eq!(matchings.len(), 7);
        for m in &matchings {
            let v = BruteForce::default().is_popular(&ps, m).unwrap();
            assert_eq!(v.witness, brute(&ps, m));
            assert_eq!(v.popular, v.witness.is_none());
        }
    }

    #[test]
    fn empty_system() {
        let ps = PreferenceSystem::strict_from_names(&[], &[], &[]).unwrap();
        assert!(is_popular_bruteforce(&ps, &Matching::empty(&ps)).unwrap().popular);
    }

    #[test]
    fn size_guard() {
        let names: Vec<String> = (0..17).map(|i| format!("a{i}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let lists: Vec<(&str, &[&str])> = refs.iter().map(|&n| (n, &[][..])).collect();
        let ps = PreferenceSystem::strict_from_names(&refs, &[], &lists).unwrap();
        let m = Matching::empty(&ps);
        assert_eq!(
            is_popular_bruteforce(&ps, &m).unwrap_err(),
            Error::InstanceTooLarge { per_side: 17, limit: 16 }
        );
        assert!(BruteForce::forced().is_popular(&ps, &m).unwrap().popular);
    }
}
