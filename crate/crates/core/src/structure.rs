// SPDX-License-Identifier: Apache-2.0

//! Master lists and single-peaked axes.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::model::{PreferenceSystem, Side, Vertex};

/// A strict order over all vertices of `side` from which every list on the
/// other side arises by restriction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MasterListCertificate {
    pub side: Side,
    /// Vertex indices on `side`, most preferred first.
    pub order: Vec<usize>,
}

impl MasterListCertificate {
    /// Checks the restriction property against every list of the other side.
    pub fn validate(&self, ps: &PreferenceSystem) -> bool {
        let n = ps.len(self.side);
        if !is_permutation(&self.order, n) {
            return false;
        }
        let mut pos = vec![0; n];
        for (i, &x) in self.order.iter().enumerate() {
            pos[x] = i;
        }
        let other = self.side.other();
        (0..ps.len(other)).all(|w| {
            let groups = ps.groups(Vertex { side: other, index: w });
            groups.iter().all(|g| g.len() == 1) && groups.windows(2).all(|p| pos[p[0][0]] < pos[p[1][0]])
        })
    }

    pub fn names<'a>(&self, ps: &'a PreferenceSystem) -> Vec<&'a str> {
        self.order
            .iter()
            .map(|&i| ps.name(Vertex { side: self.side, index: i }))
            .collect()
    }
}

fn is_permutation(order: &[usize], n: usize) -> bool {
    let mut seen = vec![false; n];
    order.len() == n && order.iter().all(|&x| x < n && !std::mem::replace(&mut seen[x], true))
}

/// Recovers a master list over `side`, preferring lower input indices among
/// incomparable vertices.
pub fn find_master_list(ps: &PreferenceSystem, side: Side) -> Result<Option<MasterListCertificate>> {
    ps.require_strict()?;
    let n = ps.len(side);
    let other = side.other();
    let mut succ = vec![Vec::new(); n];
    let mut indeg = vec![0usize; n];
    for w in 0..ps.len(other) {
        for pair in ps.groups(Vertex { side: other, index: w }).windows(2) {
            let (x, y) = (pair[0][0], pair[1][0]);
            succ[x].push(y);
            indeg[y] += 1;
        }
    }
    let mut heap: BinaryHeap<Reverse<usize>> = (0..n).filter(|&x| indeg[x] == 0).map(Reverse).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(Reverse(x)) = heap.pop() {
        order.push(x);
        for &y in &succ[x] {
            indeg[y] -= 1;
            if indeg[y] == 0 {
                heap.push(Reverse(y));
            }
        }
    }
    if order.len() < n {
        return Ok(None);
    }
    let cert = MasterListCertificate { side, order };
    Ok(cert.validate(ps).then_some(cert))
}

/// A master list over either side, trying `A` first.
pub fn find_any_master_list(ps: &PreferenceSystem) -> Result<Option<MasterListCertificate>> {
    match find_master_list(ps, Side::A)? {
        Some(c) => Ok(Some(c)),
        None => find_master_list(ps, Side::B),
    }
}

/// Whether `ps` is single-peaked with respect to the axes, given as
/// permutations of the vertex indices of each side.
pub fn validate_single_peaked(ps: &PreferenceSystem, axis_a: &[usize], axis_b: &[usize]) -> Result<bool> {
    ps.require_strict()?;
    let mut pos = [Vec::new(), Vec::new()];
    for (k, (side, axis)) in [(Side::A, axis_a), (Side::B, axis_b)].into_iter().enumerate() {
        if !is_permutation(axis, ps.len(side)) {
            return Err(Error::InvalidAxis(format!("axis for side {side:?} is not a permutation of its vertices")));
        }
        pos[k] = vec![0; axis.len()];
        for (i, &x) in axis.iter().enumerate() {
            pos[k][x] = i;
        }
    }
    for side in [Side::A, Side::B] {
        let axis_pos = &pos[side.other() as usize];
        for index in 0..ps.len(side) {
            let v = Vertex { side, index };
            let mut nbrs: Vec<usize> = ps.neighbors(v).collect();
            nbrs.sort_by_key(|&u| axis_pos[u]);
            let ranks: Vec<u32> = nbrs.iter().map(|&u| ps.rank(v, u).unwrap()).collect();
            // improve towards the peak, then only get worse
            let mut i = 1;
            while i < ranks.len() && ranks[i] < ranks[i - 1] {
                i += 1;
            }
            if (i..ranks.len()).any(|j| ranks[j] < ranks[j - 1]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_cycle_has_no_master_list() {
        let ps = PreferenceSystem::strict_from_names(
            &["a1", "a2"],
            &["b1", "b2"],
            &[
                ("a1", &["b1", "b2"]),
                ("a2", &["b1", "b2"]),
                ("b1", &["a1", "a2"]),
                ("b2", &["a2", "a1"]),
            ],
        )
        .unwrap();
        assert_eq!(find_master_list(&ps, Side::A).unwrap(), None);
        let cert = find_master_list(&ps, Side::B).unwrap().unwrap();
        assert_eq!(cert.order, vec![0, 1]);
        assert!(cert.validate(&ps));
    }

    #[test]
    fn vacuous_constraints_give_input_order() {
        let ps = PreferenceSystem::strict_from_names(
            &["a1", "a2", "a3"],
            &["b1"],
            &[("a1", &[]), ("a2", &["b1"]), ("a3", &[]), ("b1", &["a2"])],
        )
        .unwrap();
        assert_eq!(find_master_list(&ps, Side::A).unwrap().unwrap().order, vec![0, 1, 2]);
    }

    #[test]
    fn incomparable_vertices_tie_break_by_index() {
        let ps = PreferenceSystem::strict_from_names(
            &["a1", "a2", "a3"],
            &["b1", "b2"],
            &[
                ("a1", &["b2"]),
                ("a2", &["b1"]),
                ("a3", &["b1", "b2"]),
                ("b1", &["a3", "a2"]),
                ("b2", &["a3", "a1"]),
            ],
        )
        .unwrap();
        assert_eq!(find_master_list(&ps, Side::A).unwrap().unwrap().order, vec![2, 0, 1]);
    }

    #[test]
    fn single_peaked_examples() {
        // a has three neighbours; its worst one sits in the middle of the axis
        let ps = PreferenceSystem::strict_from_names(
            &["a"],
            &["b1", "b2", "b3"],
            &[("a", &["b1", "b3", "b2"]), ("b1", &["a"]), ("b2", &["a"]), ("b3", &["a"])],
        )
        .unwrap();
        assert!(!validate_single_peaked(&ps, &[0], &[0, 1, 2]).unwrap());
        assert!(validate_single_peaked(&ps, &[0], &[0, 2, 1]).unwrap());
        assert!(matches!(validate_single_peaked(&ps, &[0], &[0, 1]), Err(Error::InvalidAxis(_))));
        assert!(matches!(validate_single_peaked(&ps, &[0], &[0, 1, 1]), Err(Error::InvalidAxis(_))));
        let empty = PreferenceSystem::strict_from_names(&[], &[], &[]).unwrap();
        assert!(validate_single_peaked(&empty, &[], &[]).unwrap());
    }
}
