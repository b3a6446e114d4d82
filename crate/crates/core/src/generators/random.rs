// SPDX-License-Identifier: Apache-2.0

//! Seeded random instances.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::model::{PreferenceSystem, PreferenceSystemBuilder, Side, Valuation};
use crate::Instance;

#[derive(Clone, Debug, PartialEq)]
pub struct RandomParams {
    pub na: usize,
    pub nb: usize,
    /// Probability that each pair is an edge, in `(0, 1]`.
    pub density: f64,
    pub seed: u64,
    /// Derive every list from one global order per side.
    pub master_list: bool,
    /// Utilities are drawn from `0..=max_util`.
    pub max_util: i64,
    /// Costs are drawn from `1..=max(1, max_cost)`.
    pub max_cost: i64,
    pub objective_t: i64,
    pub budget_k: i64,
}

impl Default for RandomParams {
    fn default() -> Self {
        RandomParams {
            na: 4,
            nb: 4,
            density: 0.5,
            seed: 0,
            master_list: false,
            max_util: 1,
            max_cost: 1,
            objective_t: 0,
            budget_k: 0,
        }
    }
}

impl RandomParams {
    fn validate(&self) -> Result<()> {
        if !(self.density > 0.0 && self.density <= 1.0) {
            return Err(Error::InvalidPreferences(format!("density {} is outside (0, 1]", self.density)));
        }
        if self.max_util < 0 || self.max_cost < 0 || self.objective_t < 0 || self.budget_k < 0 {
            return Err(Error::InvalidValuation("random parameters must be non-negative".into()));
        }
        Ok(())
    }
}

/// Random strict system with sides `a1..` and `b1..`, using `rng` directly.
///
/// Pairs are visited in `(a, b)` index order and each is kept with
/// probability `density`.
pub fn random_preference_system(
    na: usize,
    nb: usize,
    density: f64,
    master_list: bool,
    rng: &mut impl Rng,
) -> Result<PreferenceSystem> {
    let names_a: Vec<String> = (1..=na).map(|i| format!("a{i}")).collect();
    let names_b: Vec<String> = (1..=nb).map(|i| format!("b{i}")).collect();
    let mut adj_a = vec![Vec::new(); na];
    let mut adj_b = vec![Vec::new(); nb];
    for (a, row) in adj_a.iter_mut().enumerate() {
        for (b, col) in adj_b.iter_mut().enumerate() {
            if rng.gen_bool(density) {
                row.push(b);
                col.push(a);
            }
        }
    }
    let mut builder = PreferenceSystemBuilder::new();
    for n in &names_a {
        builder.add_vertex(Side::A, n);
    }
    for n in &names_b {
        builder.add_vertex(Side::B, n);
    }
    if master_list {
        // position of each vertex in its side's master list
        let mut pos_a: Vec<usize> = (0..na).collect();
        let mut pos_b: Vec<usize> = (0..nb).collect();
        pos_a.shuffle(rng);
        pos_b.shuffle(rng);
        for list in &mut adj_a {
            list.sort_by_key(|&b| pos_b[b]);
        }
        for list in &mut adj_b {
            list.sort_by_key(|&a| pos_a[a]);
        }
    } else {
        for list in adj_a.iter_mut().chain(adj_b.iter_mut()) {
            list.shuffle(rng);
        }
    }
    for (a, list) in adj_a.iter().enumerate() {
        let list: Vec<&str> = list.iter().map(|&b| names_b[b].as_str()).collect();
        builder.set_strict_list(&names_a[a], &list)?;
    }
    for (b, list) in adj_b.iter().enumerate() {
        let list: Vec<&str> = list.iter().map(|&a| names_a[a].as_str()).collect();
        builder.set_strict_list(&names_b[b], &list)?;
    }
    builder.build()
}

pub fn random_instance(params: &RandomParams) -> Result<Instance> {
    params.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let ps = random_preference_system(params.na, params.nb, params.density, params.master_list, &mut rng)?;
    let max_cost = params.max_cost.max(1);
    let utility: Vec<i64> = ps.edges().iter().map(|_| rng.gen_range(0..=params.max_util)).collect();
    let cost: Vec<i64> = ps.edges().iter().map(|_| rng.gen_range(1..=max_cost)).collect();
    let id = |e| ps.edge_id(e).expect("edge of ps");
    let val = Valuation::from_fn(&ps, |e| utility[id(e)], |e| cost[id(e)], params.objective_t, params.budget_k)?;
    Instance::new(ps, val)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::find_master_list;

    #[test]
    fn complete_at_full_density() {
        let inst = random_instance(&RandomParams { na: 5, nb: 5, density: 1.0, ..Default::default() }).unwrap();
        assert_eq!(inst.ps.num_edges(), 25);
    }

    #[test]
    fn seeded() {
        let p = RandomParams { na: 6, nb: 5, density: 0.6, seed: 11, max_util: 9, max_cost: 3, ..Default::default() };
        assert_eq!(random_instance(&p).unwrap(), random_instance(&p).unwrap());
        let q = RandomParams { seed: 12, ..p.clone() };
        assert_ne!(random_instance(&p).unwrap(), random_instance(&q).unwrap());
    }

    #[test]
    fn master_lists_recoverable() {
        for seed in 0..30 {
            let p = RandomParams { na: 6, nb: 6, density: 0.5, seed, master_list: true, ..Default::default() };
            let inst = random_instance(&p).unwrap();
            assert!(find_master_list(&inst.ps, Side::A).unwrap().is_some());
            assert!(find_master_list(&inst.ps, Side::B).unwrap().is_some());
        }
    }

    #[test]
    fn costs_at_least_one() {
        let p = RandomParams { na: 4, nb: 4, density: 1.0, max_cost: 0, ..Default::default() };
        let inst = random_instance(&p).unwrap();
        assert!(inst.require_positive_costs().is_ok());
    }

    #[test]
    fn rejects_bad_density() {
        assert!(random_instance(&RandomParams { density: 0.0, ..Default::default() }).is_err());
        assert!(random_instance(&RandomParams { density: 1.5, ..Default::default() }).is_err());
    }
}
