// SPDX-License-Identifier: Apache-2.0

//! Exhaustive matching enumeration in canonical order.
//!
//! The canonical order is the depth-first order that visits `A`-vertices by
//! index and, for each, first leaves it unmatched and then tries its
//! neighbors by increasing `B`-index.

use std::ops::ControlFlow;

use super::{Matching, PreferenceSystem};

/// Calls `visit` on every matching of `ps` in canonical order, stopping
/// early when it returns `Break`.
pub fn for_each_matching<T>(
    ps: &PreferenceSystem,
    mut visit: impl FnMut(&Matching) -> ControlFlow<T>,
) -> Option<T> {
    let adj: Vec<Vec<usize>> = (0..ps.num_a())
        .map(|a| {
            let mut n: Vec<usize> = ps.neighbors(super::Vertex::a(a)).collect();
            n.sort_unstable();
            n
        })
        .collect();
    let mut m = Matching::empty(ps);
    match walk(&adj, 0, &mut m, &mut visit) {
        ControlFlow::Break(t) => Some(t),
        ControlFlow::Continue(()) => None,
    }
}

fn walk<T>(
    adj: &[Vec<usize>],
    a: usize,
    m: &mut Matching,
    visit: &mut impl FnMut(&Matching) -> ControlFlow<T>,
) -> ControlFlow<T> {
    if a == adj.len() {
        return visit(m);
    }
    walk(adj, a + 1, m, visit)?;
    for &b in &adj[a] {
        if m.partner_of_b(b).is_none() {
            let e = super::Edge::new(a, b);
            m.insert(e);
            let r = walk(adj, a + 1, m, visit);
            m.remove(e);
            r?;
        }
    }
    ControlFlow::Continue(())
}

/// All matchings of `ps` in canonical order.
pub fn all_matchings(ps: &PreferenceSystem) -> Vec<Matching> {
    let mut out = Vec::new();
    for_each_matching::<()>(ps, |m| {
        out.push(m.clone());
        ControlFlow::Continue(())
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_complete_bipartite() {
        // matchings of K_{2,2}: 1 + 4 + 2
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
        let all = all_matchings(&ps);
        assert_eq!(all.len(), 7);
        assert!(all[0].is_empty());
        let mut dedup = all.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), 7);
    }

    #[test]
    fn empty_system_has_one_matching() {
        let ps = PreferenceSystem::strict_from_names(&[], &[], &[]).unwrap();
        assert_eq!(all_matchings(&ps).len(), 1);
    }

    #[test]
    fn early_exit() {
        let ps = PreferenceSystem::strict_from_names(&["a"], &["b"], &[("a", &["b"]), ("b", &["a"])]).unwrap();
        let found = for_each_matching(&ps, |m| if m.len() == 1 { ControlFlow::Break(m.clone()) } else { ControlFlow::Continue(()) });
        assert_eq!(found.unwrap().len(), 1);
    }
}
