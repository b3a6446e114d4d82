// SPDX-License-Identifier: Apache-2.0

use std::collections::HashMap;

use super::matching::{blocking_edges, Matching};
use super::prefs::{Edge, PreferenceSystem};
use crate::error::{Error, Result};
use crate::num::Weight;

/// Per-edge utility and cost, plus the objective `t` and budget `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Valuation<W: Weight> {
    utility: HashMap<Edge, W>,
    cost: HashMap<Edge, W>,
    pub objective_t: W,
    pub budget_k: W,
}

impl<W: Weight> Valuation<W> {
    pub fn new(utility: HashMap<Edge, W>, cost: HashMap<Edge, W>, objective_t: W, budget_k: W) -> Result<Self> {
        let negative = utility.values().chain(cost.values()).chain([&objective_t, &budget_k]);
        if negative.into_iter().any(|x| x.is_negative()) {
            return Err(Error::InvalidValuation("utilities, costs, t and k must be non-negative".into()));
        }
        Ok(Valuation {
            utility,
            cost,
            objective_t,
            budget_k,
        })
    }

    /// `ω ≡ utility`, `c ≡ cost` on every edge of `ps`.
    pub fn uniform(ps: &PreferenceSystem, utility: W, cost: W, objective_t: W, budget_k: W) -> Result<Self> {
        Self::from_fn(ps, |_| utility, |_| cost, objective_t, budget_k)
    }

    pub fn from_fn(
        ps: &PreferenceSystem,
        utility: impl Fn(Edge) -> W,
        cost: impl Fn(Edge) -> W,
        objective_t: W,
        budget_k: W,
    ) -> Result<Self> {
        let u = ps.edges().iter().map(|&e| (e, utility(e))).collect();
        let c = ps.edges().iter().map(|&e| (e, cost(e))).collect();
        Self::new(u, c, objective_t, budget_k)
    }

    pub fn utility(&self, e: Edge) -> Option<W> {
        self.utility.get(&e).copied()
    }

    pub fn cost(&self, e: Edge) -> Option<W> {
        self.cost.get(&e).copied()
    }

    /// Largest utility over all edges, or zero when there are none.
    pub fn max_utility(&self) -> W {
        self.utility.values().copied().max().unwrap_or_else(W::zero)
    }

    /// Component-wise `(ω(F), c(F))` with overflow detection.
    pub fn valuate(&self, f: &[Edge]) -> Result<(W, W)> {
        let mut u = W::zero();
        let mut c = W::zero();
        for e in f {
            let missing = || Error::UnknownEdge(format!("({}, {})", e.a, e.b));
            u = u.add_checked(self.utility(*e).ok_or_else(missing)?)?;
            c = c.add_checked(self.cost(*e).ok_or_else(missing)?)?;
        }
        Ok((u, c))
    }

    pub fn total_utility(&self, f: &[Edge]) -> Result<W> {
        self.valuate(f).map(|(u, _)| u)
    }

    pub fn total_cost(&self, f: &[Edge]) -> Result<W> {
        self.valuate(f).map(|(_, c)| c)
    }

    fn covers_exactly(&self, ps: &PreferenceSystem) -> Result<()> {
        for (name, map) in [("utility", &self.utility), ("cost", &self.cost)] {
            if map.len() != ps.num_edges() {
                return Err(Error::InvalidValuation(format!(
                    "{name} map has {} entries for {} edges",
                    map.len(),
                    ps.num_edges()
                )));
            }
            if let Some(&e) = ps.edges().iter().find(|e| !map.contains_key(e)) {
                return Err(Error::InvalidValuation(format!("{name} missing for {}", ps.edge_key(e))));
            }
        }
        Ok(())
    }
}

/// A preference system together with its valuation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance<W: Weight> {
    pub ps: PreferenceSystem,
    pub val: Valuation<W>,
}

impl<W: Weight> Instance<W> {
    pub fn new(ps: PreferenceSystem, val: Valuation<W>) -> Result<Self> {
        val.covers_exactly(&ps)?;
        Ok(Instance { ps, val })
    }

    /// Rejects instances with an edge of cost zero.
    pub fn require_positive_costs(&self) -> Result<()> {
        match self.ps.edges().iter().find(|&&e| self.val.cost(e) == Some(W::zero())) {
            Some(&e) => Err(Error::ZeroCostEdge(self.ps.edge_key(e))),
            None => Ok(()),
        }
    }

    pub fn utility_of(&self, m: &Matching) -> Result<W> {
        self.val.total_utility(&m.edges())
    }

    /// Total cost of the blocking edges of `m`.
    pub fn instability_cost(&self, m: &Matching) -> Result<W> {
        self.val.total_cost(&blocking_edges(&self.ps, m)?)
    }
}

/// `ω(m) ≥ t` and `c(bp(m)) ≤ k`.
pub fn is_feasible<W: Weight>(inst: &Instance<W>, m: &Matching) -> Result<bool> {
    let utility = inst.utility_of(m)?;
    if utility < inst.val.objective_t {
        return Ok(false);
    }
    Ok(inst.instability_cost(m)? <= inst.val.budget_k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle_free() -> PreferenceSystem {
        PreferenceSystem::strict_from_names(
            &["a1", "a2", "a3"],
            &["b1", "b2", "b3"],
            &[
                ("a1", &["b1"]),
                ("a2", &["b2"]),
                ("a3", &["b3"]),
                ("b1", &["a1"]),
                ("b2", &["a2"]),
                ("b3", &["a3"]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn valuate_sums() {
        let ps = triangle_free();
        let val = Valuation::<i64>::uniform(&ps, 1, 1, 0, 0).unwrap();
        assert_eq!(val.valuate(&[]).unwrap(), (0, 0));
        assert_eq!(val.valuate(ps.edges()).unwrap(), (3, 3));
        assert!(matches!(val.valuate(&[Edge::new(0, 2)]), Err(Error::UnknownEdge(_))));
    }

    #[test]
    fn valuate_overflow_is_an_error() {
        let ps = triangle_free();
        let val = Valuation::<i32>::uniform(&ps, i32::MAX, 1, 0, 0).unwrap();
        assert_eq!(val.valuate(&ps.edges()[..1]).unwrap(), (i32::MAX, 1));
        assert_eq!(val.valuate(ps.edges()), Err(Error::Overflow));
        let wide = Valuation::<i128>::uniform(&ps, i32::MAX as i128, 1, 0, 0).unwrap();
        assert_eq!(wide.valuate(ps.edges()).unwrap().0, 3 * i32::MAX as i128);
    }

    #[test]
    fn feasibility() {
        let ps = triangle_free();
        let m = Matching::new(&ps, ps.edges().to_vec()).unwrap();
        let loose = Instance::new(ps.clone(), Valuation::<i64>::uniform(&ps, 1, 1, 0, 3).unwrap()).unwrap();
        assert!(is_feasible(&loose, &m).unwrap());
        assert!(is_feasible(&loose, &Matching::empty(&ps)).unwrap());
        let greedy = Instance::new(ps.clone(), Valuation::<i64>::uniform(&ps, 1, 1, 4, 3).unwrap()).unwrap();
        assert!(!is_feasible(&greedy, &m).unwrap());
        let tight = Instance::new(ps.clone(), Valuation::<i64>::uniform(&ps, 1, 1, 0, 2).unwrap()).unwrap();
        assert!(!is_feasible(&tight, &Matching::empty(&ps)).unwrap());
    }

    #[test]
    fn instance_requires_exact_cover() {
        let ps = triangle_free();
        let mut u = HashMap::new();
        u.insert(Edge::new(0, 0), 1i64);
        let c = ps.edges().iter().map(|&e| (e, 1)).collect();
        let val = Valuation::new(u, c, 0, 0).unwrap();
        assert!(matches!(Instance::new(ps, val), Err(Error::InvalidValuation(_))));
        assert!(Valuation::<i64>::new(HashMap::new(), HashMap::new(), -1, 0).is_err());
    }

    #[test]
    fn zero_costs_detected() {
        let ps = triangle_free();
        let inst = Instance::new(ps.clone(), Valuation::<i64>::uniform(&ps, 1, 0, 0, 0).unwrap()).unwrap();
        assert!(matches!(inst.require_positive_costs(), Err(Error::ZeroCostEdge(_))));
    }
}
