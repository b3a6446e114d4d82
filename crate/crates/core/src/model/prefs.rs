// SPDX-License-Identifier: Apache-2.0

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    A,
    B,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::A => Side::B,
            Side::B => Side::A,
        }
    }

    fn slot(self) -> usize {
        match self {
            Side::A => 0,
            Side::B => 1,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::A => "A",
            Side::B => "B",
        })
    }
}

/// A vertex addressed by side and dense per-side index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex {
    pub side: Side,
    pub index: usize,
}

impl Vertex {
    pub fn a(index: usize) -> Self {
        Vertex { side: Side::A, index }
    }

    pub fn b(index: usize) -> Self {
        Vertex { side: Side::B, index }
    }
}

/// An edge between `A`-vertex `a` and `B`-vertex `b`.
///
/// The derived ordering is lexicographic on `(a, b)`, which is the canonical
/// order of every edge-valued output.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub a: usize,
    pub b: usize,
}

impl Edge {
    pub fn new(a: usize, b: usize) -> Self {
        Edge { a, b }
    }

    pub fn endpoint(&self, side: Side) -> usize {
        match side {
            Side::A => self.a,
            Side::B => self.b,
        }
    }

    /// Whether the two edges share an endpoint.
    pub fn adjacent(&self, other: &Edge) -> bool {
        self.a == other.a || self.b == other.b
    }
}

/// Element addressed by name, used by [`PreferenceSystem::restrict`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Element {
    Vertex(String),
    Edge(String, String),
}

/// Rank value standing for "unmatched": worse than every neighbor.
pub const UNMATCHED_RANK: u32 = u32::MAX;

/// A bipartite graph `G = (A, B; E)` with a weak order over the neighbors of
/// every vertex.
///
/// Each preference list is a sequence of rank-groups in decreasing order of
/// preference; a group holds indices of opposite-side vertices that are tied.
/// The system is strict exactly when every group is a singleton.
///
/// Immutable after construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreferenceSystem {
    names: [Vec<String>; 2],
    lookup: [HashMap<String, usize>; 2],
    prefs: [Vec<Vec<Vec<usize>>>; 2],
    ranks: [Vec<HashMap<usize, u32>>; 2],
    edges: Vec<Edge>,
    edge_ids: HashMap<Edge, usize>,
    strict: bool,
}

impl PreferenceSystem {
    /// Builds and validates a system from names and index-based rank-group
    /// lists.
    pub fn new(
        side_a: Vec<String>,
        side_b: Vec<String>,
        prefs_a: Vec<Vec<Vec<usize>>>,
        prefs_b: Vec<Vec<Vec<usize>>>,
    ) -> Result<Self> {
        let invalid = |msg: String| Error::InvalidPreferences(msg);
        if prefs_a.len() != side_a.len() || prefs_b.len() != side_b.len() {
            return Err(invalid("one preference list per vertex is required".into()));
        }
        let mut lookup: [HashMap<String, usize>; 2] = [HashMap::new(), HashMap::new()];
        for (slot, names) in [&side_a, &side_b].into_iter().enumerate() {
            for (i, n) in names.iter().enumerate() {
                if n.is_empty() || n.contains(char::is_whitespace) {
                    return Err(invalid(format!("vertex id {n:?} must be non-empty without whitespace")));
                }
                if lookup[0].contains_key(n) || lookup[slot].insert(n.clone(), i).is_some() {
                    return Err(invalid(format!("duplicate vertex id {n:?}")));
                }
            }
        }

        let mut ranks: [Vec<HashMap<usize, u32>>; 2] = [Vec::new(), Vec::new()];
        let mut strict = true;
        for (slot, (lists, other_len)) in [(&prefs_a, side_b.len()), (&prefs_b, side_a.len())]
            .into_iter()
            .enumerate()
        {
            let names = if slot == 0 { &side_a } else { &side_b };
            for (i, groups) in lists.iter().enumerate() {
                let mut rank = HashMap::new();
                for (r, group) in groups.iter().enumerate() {
                    if group.is_empty() {
                        return Err(invalid(format!("empty rank-group in the list of {}", names[i])));
                    }
                    if group.len() > 1 {
                        strict = false;
                    }
                    for &u in group {
                        if u >= other_len {
                            return Err(invalid(format!("neighbor index {u} out of range for {}", names[i])));
                        }
                        if rank.insert(u, r as u32).is_some() {
                            return Err(invalid(format!("neighbor listed twice by {}", names[i])));
                        }
                    }
                }
                ranks[slot].push(rank);
            }
        }

        let mut edges = Vec::new();
        for (a, rank) in ranks[0].iter().enumerate() {
            for &b in rank.keys() {
                if !ranks[1][b].contains_key(&a) {
                    return Err(invalid(format!(
                        "{} lists {} but not vice versa",
                        side_a[a], side_b[b]
                    )));
                }
                edges.push(Edge::new(a, b));
            }
        }
        let total_b: usize = ranks[1].iter().map(HashMap::len).sum();
        if total_b != edges.len() {
            let (b, a) = ranks[1]
                .iter()
                .enumerate()
                .flat_map(|(b, r)| r.keys().map(move |&a| (b, a)))
                .find(|&(b, a)| !ranks[0][a].contains_key(&b))
                .expect("asymmetric count implies a one-sided entry");
            return Err(invalid(format!("{} lists {} but not vice versa", side_b[b], side_a[a])));
        }
        edges.sort_unstable();
        let edge_ids = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();

        Ok(PreferenceSystem {
            names: [side_a, side_b],
            lookup,
            prefs: [prefs_a, prefs_b],
            ranks,
            edges,
            edge_ids,
            strict,
        })
    }

    /// Convenience constructor for strict systems given by names.
    ///
    /// `lists` holds one `(vertex, ranked neighbors)` entry per vertex that has
    /// neighbors; vertices without an entry get an empty list.
    pub fn strict_from_names(side_a: &[&str], side_b: &[&str], lists: &[(&str, &[&str])]) -> Result<Self> {
        let mut builder = PreferenceSystemBuilder::new();
        for (side, names) in [(Side::A, side_a), (Side::B, side_b)] {
            for n in names {
                if builder.vertex(n).is_some() {
                    return Err(Error::InvalidPreferences(format!("duplicate vertex id {n:?}")));
                }
                builder.add_vertex(side, n);
            }
        }
        for (v, list) in lists {
            builder.set_strict_list(v, list)?;
        }
        builder.build()
    }

    pub fn len(&self, side: Side) -> usize {
        self.names[side.slot()].len()
    }

    pub fn num_a(&self) -> usize {
        self.len(Side::A)
    }

    pub fn num_b(&self) -> usize {
        self.len(Side::B)
    }

    pub fn num_vertices(&self) -> usize {
        self.num_a() + self.num_b()
    }

    pub fn is_empty(&self) -> bool {
        self.num_vertices() == 0
    }

    pub fn names(&self, side: Side) -> &[String] {
        &self.names[side.slot()]
    }

    pub fn name(&self, v: Vertex) -> &str {
        &self.names[v.side.slot()][v.index]
    }

    pub fn vertex(&self, name: &str) -> Option<Vertex> {
        if let Some(&i) = self.lookup[0].get(name) {
            return Some(Vertex::a(i));
        }
        self.lookup[1].get(name).map(|&i| Vertex::b(i))
    }

    pub fn vertex_on(&self, side: Side, name: &str) -> Option<usize> {
        self.lookup[side.slot()].get(name).copied()
    }

    /// All edges in canonical `(a, b)` order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edge_id(&self, e: Edge) -> Option<usize> {
        self.edge_ids.get(&e).copied()
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.edge_ids.contains_key(&e)
    }

    /// Looks up the edge between two named vertices, in either order.
    pub fn edge_by_names(&self, x: &str, y: &str) -> Result<Edge> {
        let (a, b) = match (self.vertex(x), self.vertex(y)) {
            (Some(p), Some(q)) if p.side == Side::A && q.side == Side::B => (p.index, q.index),
            (Some(p), Some(q)) if p.side == Side::B && q.side == Side::A => (q.index, p.index),
            _ => return Err(Error::UnknownEdge(format!("{x} {y}"))),
        };
        let e = Edge::new(a, b);
        if self.contains_edge(e) {
            Ok(e)
        } else {
            Err(Error::UnknownEdge(format!("{x} {y}")))
        }
    }

    /// Parses an `"<a-id> <b-id>"` edge key.
    pub fn parse_edge_key(&self, key: &str) -> Result<Edge> {
        let mut parts = key.split(' ');
        match (parts.next(), parts.next(), parts.next()) {
            (Some(a), Some(b), None) => match (self.vertex_on(Side::A, a), self.vertex_on(Side::B, b)) {
                (Some(a), Some(b)) if self.contains_edge(Edge::new(a, b)) => Ok(Edge::new(a, b)),
                _ => Err(Error::UnknownEdge(key.to_string())),
            },
            _ => Err(Error::UnknownEdge(key.to_string())),
        }
    }

    pub fn edge_key(&self, e: Edge) -> String {
        format!("{} {}", self.names[0][e.a], self.names[1][e.b])
    }

    pub fn edge_names(&self, e: Edge) -> (&str, &str) {
        (&self.names[0][e.a], &self.names[1][e.b])
    }

    /// Rank-groups of `v`, most preferred first.
    pub fn groups(&self, v: Vertex) -> &[Vec<usize>] {
        &self.prefs[v.side.slot()][v.index]
    }

    /// Neighbors of `v` in decreasing order of preference (ties in list order).
    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = usize> + '_ {
        self.groups(v).iter().flatten().copied()
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.ranks[v.side.slot()][v.index].len()
    }

    pub fn max_degree(&self) -> usize {
        self.ranks.iter().flatten().map(HashMap::len).max().unwrap_or(0)
    }

    /// Rank-group index of neighbor `u` in the list of `v` (0 = best).
    pub fn rank(&self, v: Vertex, u: usize) -> Option<u32> {
        self.ranks[v.side.slot()][v.index].get(&u).copied()
    }

    /// Rank of a matching state: partner rank, or [`UNMATCHED_RANK`].
    pub fn state_rank(&self, v: Vertex, state: Option<usize>) -> u32 {
        match state {
            Some(u) => self
                .rank(v, u)
                .expect("matching partner must be a neighbor"),
            None => UNMATCHED_RANK,
        }
    }

    /// Compares two states of `v`; `Greater` means `v` prefers `x` to `y`.
    pub fn compare(&self, v: Vertex, x: Option<usize>, y: Option<usize>) -> Ordering {
        self.state_rank(v, y).cmp(&self.state_rank(v, x))
    }

    /// Whether `v` strictly prefers state `x` to state `y`.
    pub fn prefers(&self, v: Vertex, x: Option<usize>, y: Option<usize>) -> bool {
        self.compare(v, x, y) == Ordering::Greater
    }

    pub fn is_strict(&self) -> bool {
        self.strict
    }

    pub fn require_strict(&self) -> Result<()> {
        if self.strict {
            Ok(())
        } else {
            Err(Error::NotStrict)
        }
    }

    /// The system `G - X` with edges `X` removed; vertex indices are kept.
    pub fn without_edges(&self, removed: &[Edge]) -> Result<Self> {
        let mut gone: [HashSet<(usize, usize)>; 2] = [HashSet::new(), HashSet::new()];
        for &e in removed {
            if !self.contains_edge(e) {
                return Err(Error::UnknownEdge(format!("({}, {})", e.a, e.b)));
            }
            gone[0].insert((e.a, e.b));
            gone[1].insert((e.b, e.a));
        }
        if removed.is_empty() {
            return Ok(self.clone());
        }
        let filter = |slot: usize| -> Vec<Vec<Vec<usize>>> {
            self.prefs[slot]
                .iter()
                .enumerate()
                .map(|(v, groups)| {
                    groups
                        .iter()
                        .map(|g| g.iter().copied().filter(|&u| !gone[slot].contains(&(v, u))).collect::<Vec<_>>())
                        .filter(|g| !g.is_empty())
                        .collect()
                })
                .collect()
        };
        let prefs_a = filter(0);
        let prefs_b = filter(1);
        PreferenceSystem::new(self.names[0].clone(), self.names[1].clone(), prefs_a, prefs_b)
    }

    /// The system `G - X` for a set of named vertices and edges.
    ///
    /// Removing only edges keeps every vertex index; removing vertices
    /// compacts indices while preserving input order and names.
    pub fn restrict(&self, x: &[Element]) -> Result<Self> {
        let mut dead: [BTreeSet<usize>; 2] = [BTreeSet::new(), BTreeSet::new()];
        let mut edges = Vec::new();
        for el in x {
            match el {
                Element::Vertex(n) => {
                    let v = self.vertex(n).ok_or_else(|| Error::UnknownElement(n.clone()))?;
                    dead[v.side.slot()].insert(v.index);
                }
                Element::Edge(p, q) => {
                    let e = self
                        .edge_by_names(p, q)
                        .map_err(|_| Error::UnknownElement(format!("{p} {q}")))?;
                    edges.push(e);
                }
            }
        }
        let trimmed = self.without_edges(&edges)?;
        if dead[0].is_empty() && dead[1].is_empty() {
            return Ok(trimmed);
        }
        let remap = |slot: usize| -> Vec<Option<usize>> {
            let mut next = 0;
            (0..trimmed.names[slot].len())
                .map(|i| {
                    if dead[slot].contains(&i) {
                        None
                    } else {
                        next += 1;
                        Some(next - 1)
                    }
                })
                .collect()
        };
        let maps = [remap(0), remap(1)];
        let mut names: [Vec<String>; 2] = [Vec::new(), Vec::new()];
        let mut prefs: [Vec<Vec<Vec<usize>>>; 2] = [Vec::new(), Vec::new()];
        for slot in 0..2 {
            let other = 1 - slot;
            for (i, groups) in trimmed.prefs[slot].iter().enumerate() {
                if maps[slot][i].is_none() {
                    continue;
                }
                names[slot].push(trimmed.names[slot][i].clone());
                prefs[slot].push(
                    groups
                        .iter()
                        .map(|g| g.iter().filter_map(|&u| maps[other][u]).collect::<Vec<_>>())
                        .filter(|g| !g.is_empty())
                        .collect(),
                );
            }
        }
        let [na, nb] = names;
        let [pa, pb] = prefs;
        PreferenceSystem::new(na, nb, pa, pb)
    }
}

/// Incremental name-based construction of a [`PreferenceSystem`].
#[derive(Debug, Default, Clone)]
pub struct PreferenceSystemBuilder {
    names: [Vec<String>; 2],
    lookup: HashMap<String, Vertex>,
    prefs: [Vec<Vec<Vec<usize>>>; 2],
}

impl PreferenceSystemBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds a vertex, returning its index on its side. Re-adding a name
    /// returns the existing index.
    pub fn add_vertex(&mut self, side: Side, name: &str) -> usize {
        if let Some(v) = self.lookup.get(name) {
            return v.index;
        }
        let slot = side.slot();
        let index = self.names[slot].len();
        self.names[slot].push(name.to_string());
        self.prefs[slot].push(Vec::new());
        self.lookup.insert(name.to_string(), Vertex { side, index });
        index
    }

    pub fn vertex(&self, name: &str) -> Option<Vertex> {
        self.lookup.get(name).copied()
    }

    /// Sets the list of `name` from rank-groups of opposite-side names.
    pub fn set_list(&mut self, name: &str, groups: &[Vec<&str>]) -> Result<()> {
        let v = self
            .vertex(name)
            .ok_or_else(|| Error::InvalidPreferences(format!("unknown vertex {name:?}")))?;
        let mut out = Vec::with_capacity(groups.len());
        for g in groups {
            let mut group = Vec::with_capacity(g.len());
            for u in g {
                match self.lookup.get(*u) {
                    Some(w) if w.side != v.side => group.push(w.index),
                    Some(_) => {
                        return Err(Error::NotBipartite(format!("{name} lists same-side vertex {u}")))
                    }
                    None => return Err(Error::InvalidPreferences(format!("{name} lists unknown vertex {u:?}"))),
                }
            }
            out.push(group);
        }
        self.prefs[v.side.slot()][v.index] = out;
        Ok(())
    }

    pub fn set_strict_list(&mut self, name: &str, list: &[&str]) -> Result<()> {
        let groups: Vec<Vec<&str>> = list.iter().map(|u| vec![*u]).collect();
        self.set_list(name, &groups)
    }

    pub fn build(self) -> Result<PreferenceSystem> {
        let [na, nb] = self.names;
        let [pa, pb] = self.prefs;
        PreferenceSystem::new(na, nb, pa, pb)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path() -> PreferenceSystem {
        // a1 - b1 - a2, b1 prefers a1
        PreferenceSystem::strict_from_names(
            &["a1", "a2"],
            &["b1"],
            &[("a1", &["b1"]), ("a2", &["b1"]), ("b1", &["a1", "a2"])],
        )
        .unwrap()
    }

    #[test]
    fn basic_accessors() {
        let ps = path();
        assert_eq!(ps.num_a(), 2);
        assert_eq!(ps.num_b(), 1);
        assert_eq!(ps.edges(), &[Edge::new(0, 0), Edge::new(1, 0)]);
        assert!(ps.is_strict());
        assert_eq!(ps.rank(Vertex::b(0), 1), Some(1));
        assert!(ps.prefers(Vertex::b(0), Some(0), Some(1)));
        assert!(ps.prefers(Vertex::a(1), Some(0), None));
        assert!(!ps.prefers(Vertex::a(1), None, None));
        assert_eq!(ps.edge_key(Edge::new(1, 0)), "a2 b1");
        assert_eq!(ps.parse_edge_key("a2 b1").unwrap(), Edge::new(1, 0));
        assert!(ps.parse_edge_key("b1 a2").is_err());
        assert_eq!(ps.edge_by_names("b1", "a2").unwrap(), Edge::new(1, 0));
        assert_eq!(ps.max_degree(), 2);
    }

    #[test]
    fn rejects_asymmetric_lists() {
        let err = PreferenceSystem::strict_from_names(&["a"], &["b"], &[("a", &["b"])]).unwrap_err();
        assert!(matches!(err, Error::InvalidPreferences(_)));
        let err = PreferenceSystem::strict_from_names(&["a"], &["b"], &[("b", &["a"])]).unwrap_err();
        assert!(matches!(err, Error::InvalidPreferences(_)));
    }

    #[test]
    fn rejects_same_side_and_duplicates() {
        let err = PreferenceSystem::strict_from_names(&["a", "x"], &["b"], &[("a", &["x"])]).unwrap_err();
        assert!(matches!(err, Error::NotBipartite(_)));
        let err = PreferenceSystem::strict_from_names(&["a", "a"], &[], &[]).unwrap_err();
        assert!(matches!(err, Error::InvalidPreferences(_)));
        let err = PreferenceSystem::strict_from_names(&["a"], &["a"], &[]).unwrap_err();
        assert!(matches!(err, Error::InvalidPreferences(_)));
        let err = PreferenceSystem::strict_from_names(&["a"], &["b"], &[("a", &["b", "b"]), ("b", &["a"])])
            .unwrap_err();
        assert!(matches!(err, Error::InvalidPreferences(_)));
    }

    #[test]
    fn ties_make_system_weak() {
        let mut b = PreferenceSystemBuilder::new();
        b.add_vertex(Side::A, "a");
        b.add_vertex(Side::B, "b1");
        b.add_vertex(Side::B, "b2");
        b.set_list("a", &[vec!["b1", "b2"]]).unwrap();
        b.set_strict_list("b1", &["a"]).unwrap();
        b.set_strict_list("b2", &["a"]).unwrap();
        let ps = b.build().unwrap();
        assert!(!ps.is_strict());
        assert_eq!(ps.require_strict(), Err(Error::NotStrict));
        assert!(!ps.prefers(Vertex::a(0), Some(0), Some(1)));
        assert!(!ps.prefers(Vertex::a(0), Some(1), Some(0)));
    }

    #[test]
    fn restrict_edges_keeps_indices() {
        let ps = path();
        assert_eq!(ps.restrict(&[]).unwrap(), ps);
        let r = ps.restrict(&[Element::Edge("a1".into(), "b1".into())]).unwrap();
        assert_eq!(r.num_a(), 2);
        assert_eq!(r.edges(), &[Edge::new(1, 0)]);
        assert_eq!(r.rank(Vertex::b(0), 1), Some(0));
        assert_eq!(r.groups(Vertex::a(0)).len(), 0);
    }

    #[test]
    fn restrict_vertices_compacts() {
        let ps = path();
        let r = ps.restrict(&[Element::Vertex("a1".into())]).unwrap();
        assert_eq!(r.names(Side::A), &["a2".to_string()]);
        assert_eq!(r.edges(), &[Edge::new(0, 0)]);
        let err = ps.restrict(&[Element::Vertex("zz".into())]).unwrap_err();
        assert_eq!(err, Error::UnknownElement("zz".into()));
        let err = ps.restrict(&[Element::Edge("a1".into(), "a2".into())]).unwrap_err();
        assert!(matches!(err, Error::UnknownElement(_)));
    }
}
