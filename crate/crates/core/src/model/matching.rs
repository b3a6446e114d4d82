// SPDX-License-Identifier: Apache-2.0

use std::cmp::Ordering;

use super::prefs::{Edge, PreferenceSystem, Side, Vertex};
use crate::error::{Error, Result};

/// A set of pairwise non-adjacent edges, stored as partner arrays.
///
/// Unmatched vertices hold `None`; there are no phantom partners.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matching {
    partner_a: Vec<Option<usize>>,
    partner_b: Vec<Option<usize>>,
}

impl Matching {
    pub fn empty(ps: &PreferenceSystem) -> Self {
        Self::with_sizes(ps.num_a(), ps.num_b())
    }

    pub fn with_sizes(num_a: usize, num_b: usize) -> Self {
        Matching {
            partner_a: vec![None; num_a],
            partner_b: vec![None; num_b],
        }
    }

    /// Builds a matching of `ps` from edges, rejecting non-edges and shared
    /// endpoints.
    pub fn new(ps: &PreferenceSystem, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let mut m = Self::empty(ps);
        for e in edges {
            if !ps.contains_edge(e) {
                return Err(Error::InvalidMatching(format!("({}, {}) is not an edge", e.a, e.b)));
            }
            if m.partner_a[e.a].is_some() || m.partner_b[e.b].is_some() {
                return Err(Error::InvalidMatching(format!("{} shares an endpoint", ps.edge_key(e))));
            }
            m.partner_a[e.a] = Some(e.b);
            m.partner_b[e.b] = Some(e.a);
        }
        Ok(m)
    }

    /// Builds a matching from `"<a> <b>"`-style name pairs.
    pub fn from_names(ps: &PreferenceSystem, pairs: &[(&str, &str)]) -> Result<Self> {
        let edges = pairs
            .iter()
            .map(|(x, y)| ps.edge_by_names(x, y).map_err(|e| Error::InvalidMatching(e.to_string())))
            .collect::<Result<Vec<_>>>()?;
        Self::new(ps, edges)
    }

    pub fn num_a(&self) -> usize {
        self.partner_a.len()
    }

    pub fn num_b(&self) -> usize {
        self.partner_b.len()
    }

    pub fn partner(&self, v: Vertex) -> Option<usize> {
        match v.side {
            Side::A => self.partner_a[v.index],
            Side::B => self.partner_b[v.index],
        }
    }

    pub fn partner_of_a(&self, a: usize) -> Option<usize> {
        self.partner_a[a]
    }

    pub fn partner_of_b(&self, b: usize) -> Option<usize> {
        self.partner_b[b]
    }

    pub fn is_matched(&self, v: Vertex) -> bool {
        self.partner(v).is_some()
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.partner_a.get(e.a).copied().flatten() == Some(e.b)
    }

    pub fn len(&self) -> usize {
        self.partner_a.iter().filter(|p| p.is_some()).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Matched edges in canonical order.
    pub fn edges(&self) -> Vec<Edge> {
        self.partner_a
            .iter()
            .enumerate()
            .filter_map(|(a, p)| p.map(|b| Edge::new(a, b)))
            .collect()
    }

    /// Matched vertices, `A` side first.
    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        let a = (0..self.partner_a.len()).filter(|&i| self.partner_a[i].is_some()).map(Vertex::a);
        let b = (0..self.partner_b.len()).filter(|&i| self.partner_b[i].is_some()).map(Vertex::b);
        a.chain(b)
    }

    /// Adds an edge between two currently unmatched vertices.
    pub fn insert(&mut self, e: Edge) {
        debug_assert!(self.partner_a[e.a].is_none() && self.partner_b[e.b].is_none());
        self.partner_a[e.a] = Some(e.b);
        self.partner_b[e.b] = Some(e.a);
    }

    pub fn remove(&mut self, e: Edge) {
        debug_assert!(self.contains(e));
        self.partner_a[e.a] = None;
        self.partner_b[e.b] = None;
    }

    /// Re-validates against `ps`: sizes agree and every edge exists.
    pub fn check_in(&self, ps: &PreferenceSystem) -> Result<()> {
        if self.partner_a.len() != ps.num_a() || self.partner_b.len() != ps.num_b() {
            return Err(Error::InvalidMatching("matching does not fit the preference system".into()));
        }
        for e in self.edges() {
            if !ps.contains_edge(e) {
                return Err(Error::InvalidMatching(format!("({}, {}) is not an edge", e.a, e.b)));
            }
            if self.partner_b[e.b] != Some(e.a) {
                return Err(Error::InvalidMatching("inconsistent partner arrays".into()));
            }
        }
        Ok(())
    }

    pub fn to_names(&self, ps: &PreferenceSystem) -> Vec<(String, String)> {
        self.edges()
            .into_iter()
            .map(|e| {
                let (a, b) = ps.edge_names(e);
                (a.to_string(), b.to_string())
            })
            .collect()
    }
}

/// Whether `e` blocks `m`: `e` is not in `m` and both endpoints are unmatched
/// or strictly prefer each other to their partners.
pub(crate) fn blocks(ps: &PreferenceSystem, m: &Matching, e: Edge) -> bool {
    !m.contains(e)
        && ps.prefers(Vertex::a(e.a), Some(e.b), m.partner_of_a(e.a))
        && ps.prefers(Vertex::b(e.b), Some(e.a), m.partner_of_b(e.b))
}

/// All blocking edges of `m` in canonical order.
pub fn blocking_edges(ps: &PreferenceSystem, m: &Matching) -> Result<Vec<Edge>> {
    m.check_in(ps)?;
    Ok(ps.edges().iter().copied().filter(|&e| blocks(ps, m, e)).collect())
}

pub fn is_stable(ps: &PreferenceSystem, m: &Matching) -> Result<bool> {
    m.check_in(ps)?;
    Ok(!ps.edges().iter().any(|&e| blocks(ps, m, e)))
}

/// Vertices preferring `m2` to `m`, minus vertices preferring `m` to `m2`.
///
/// Positive exactly when `m2` is more popular than `m`.
pub fn delta_votes(ps: &PreferenceSystem, m: &Matching, m2: &Matching) -> Result<i64> {
    m.check_in(ps)?;
    m2.check_in(ps)?;
    let mut delta = 0i64;
    for side in [Side::A, Side::B] {
        for index in 0..ps.len(side) {
            let v = Vertex { side, index };
            delta += match ps.compare(v, m2.partner(v), m.partner(v)) {
                Ordering::Greater => 1,
                Ordering::Less => -1,
                Ordering::Equal => 0,
            };
        }
    }
    Ok(delta)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one_edge() -> PreferenceSystem {
        PreferenceSystem::strict_from_names(&["a"], &["b"], &[("a", &["b"]), ("b", &["a"])]).unwrap()
    }

    #[test]
    fn one_edge_blocking() {
        let ps = one_edge();
        let empty = Matching::empty(&ps);
        assert_eq!(blocking_edges(&ps, &empty).unwrap(), vec![Edge::new(0, 0)]);
        let full = Matching::from_names(&ps, &[("a", "b")]).unwrap();
        assert!(blocking_edges(&ps, &full).unwrap().is_empty());
        assert!(is_stable(&ps, &full).unwrap());
        assert!(!is_stable(&ps, &empty).unwrap());
    }

    #[test]
    fn invalid_matchings() {
        let ps = PreferenceSystem::strict_from_names(
            &["a1", "a2"],
            &["b1"],
            &[("a1", &["b1"]), ("a2", &["b1"]), ("b1", &["a1", "a2"])],
        )
        .unwrap();
        assert!(matches!(
            Matching::from_names(&ps, &[("a1", "b1"), ("a2", "b1")]),
            Err(Error::InvalidMatching(_))
        ));
        assert!(matches!(Matching::new(&ps, [Edge::new(0, 3)]), Err(Error::InvalidMatching(_))));
        // a matching built for another system
        let other = Matching::with_sizes(1, 1);
        assert!(matches!(blocking_edges(&ps, &other), Err(Error::InvalidMatching(_))));
        // a matching of G that uses an edge missing from G - e
        let m = Matching::from_names(&ps, &[("a1", "b1")]).unwrap();
        let smaller = ps.without_edges(&[Edge::new(0, 0)]).unwrap();
        assert!(matches!(blocking_edges(&smaller, &m), Err(Error::InvalidMatching(_))));
    }

    #[test]
    fn votes_on_a_path() {
        // a1 - b1 - a2 with b1 preferring a1
        let ps = PreferenceSystem::strict_from_names(
            &["a1", "a2"],
            &["b1"],
            &[("a1", &["b1"]), ("a2", &["b1"]), ("b1", &["a1", "a2"])],
        )
        .unwrap();
        let m = Matching::from_names(&ps, &[("a2", "b1")]).unwrap();
        let m2 = Matching::from_names(&ps, &[("a1", "b1")]).unwrap();
        assert_eq!(delta_votes(&ps, &m, &m).unwrap(), 0);
        assert_eq!(delta_votes(&ps, &m, &m2).unwrap(), 1);
        assert_eq!(delta_votes(&ps, &m2, &m).unwrap(), -1);
    }

    #[test]
    fn edges_are_canonical() {
        let ps = PreferenceSystem::strict_from_names(
            &["a1", "a2"],
            &["b1", "b2"],
            &[
                ("a1", &["b2", "b1"]),
                ("a2", &["b1", "b2"]),
                ("b1", &["a1", "a2"]),
                ("b2", &["a2", "a1"]),
            ],
        )
        .unwrap();
        let m = Matching::from_names(&ps, &[("a2", "b1"), ("a1", "b2")]).unwrap();
        assert_eq!(m.edges(), vec![Edge::new(0, 1), Edge::new(1, 0)]);
        assert_eq!(m.len(), 2);
        assert_eq!(m.vertices().count(), 4);
        assert_eq!(m.to_names(&ps)[0], ("a1".to_string(), "b2".to_string()));
    }
}
