// SPDX-License-Identifier: Apache-2.0

use crate::error::Result;
use crate::model::{Edge, Matching, PreferenceSystem, Vertex};

/// The subgraph `G_M`: `G` without its `(−,−)` edges, i.e. the non-matching
/// edges whose endpoints both prefer their `M`-partners to each other.
#[derive(Clone, Debug)]
pub struct GmSubgraph<'a> {
    pub base: &'a PreferenceSystem,
    pub kept_edges: Vec<Edge>,
    pub matching: Matching,
}

impl GmSubgraph<'_> {
    pub fn contains(&self, e: Edge) -> bool {
        self.kept_edges.binary_search(&e).is_ok()
    }

    /// Adjacency lists `(A-side, B-side)` of the kept edges.
    pub fn adjacency(&self) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
        let mut adj_a = vec![Vec::new(); self.base.num_a()];
        let mut adj_b = vec![Vec::new(); self.base.num_b()];
        for e in &self.kept_edges {
            adj_a[e.a].push(e.b);
            adj_b[e.b].push(e.a);
        }
        (adj_a, adj_b)
    }
}

/// Whether `e ∉ m` and both endpoints are matched to partners they prefer
/// over each other.
pub(crate) fn is_minus_minus(ps: &PreferenceSystem, m: &Matching, e: Edge) -> bool {
    let (a, b) = (Vertex::a(e.a), Vertex::b(e.b));
    !m.contains(e)
        && m.is_matched(a)
        && m.is_matched(b)
        && ps.prefers(a, m.partner(a), Some(e.b))
        && ps.prefers(b, m.partner(b), Some(e.a))
}

pub fn build_gm<'a>(ps: &'a PreferenceSystem, m: &Matching) -> Result<GmSubgraph<'a>> {
    ps.require_strict()?;
    m.check_in(ps)?;
    let kept_edges = ps.edges().iter().copied().filter(|&e| !is_minus_minus(ps, m, e)).collect();
    Ok(GmSubgraph {
        base: ps,
        kept_edges,
        matching: m.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::model::PreferenceSystemBuilder;
    use crate::model::Side;

    fn square() -> PreferenceSystem {
        PreferenceSystem::strict_from_names(
            &["a1", "a2"],
            &["b1", "b2"],
            &[
                ("a1", &["b1", "b2"]),
                ("a2", &["b2", "b1"]),
                ("b1", &["a1", "a2"]),
                ("b2", &["a2", "a1"]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn empty_matching_keeps_everything() {
        let ps = square();
        let gm = build_gm(&ps, &Matching::empty(&ps)).unwrap();
        assert_eq!(gm.kept_edges, ps.edges());
    }

    #[test]
    fn deletes_minus_minus_edges() {
        let ps = square();
        let m = Matching::from_names(&ps, &[("a1", "b1"), ("a2", "b2")]).unwrap();
        let gm = build_gm(&ps, &m).unwrap();
        // everyone has their top choice, so both cross edges are (-,-)
        assert_eq!(gm.kept_edges, m.edges());
        assert!(gm.contains(Edge::new(0, 0)) && !gm.contains(Edge::new(0, 1)));
    }

    #[test]
    fn one_edge_keeps_matching_edge() {
        let ps = PreferenceSystem::strict_from_names(&["a"], &["b"], &[("a", &["b"]), ("b", &["a"])]).unwrap();
        let m = Matching::from_names(&ps, &[("a", "b")]).unwrap();
        assert_eq!(build_gm(&ps, &m).unwrap().kept_edges, vec![Edge::new(0, 0)]);
    }

    #[test]
    fn rejects_ties() {
        let mut b = PreferenceSystemBuilder::new();
        b.add_vertex(Side::A, "a");
        b.add_vertex(Side::B, "b1");
        b.add_vertex(Side::B, "b2");
        b.set_list("a", &[vec!["b1", "b2"]]).unwrap();
        b.set_strict_list("b1", &["a"]).unwrap();
        b.set_strict_list("b2", &["a"]).unwrap();
        let ps = b.build().unwrap();
        assert_eq!(build_gm(&ps, &Matching::empty(&ps)).unwrap_err(), Error::NotStrict);
    }
}
