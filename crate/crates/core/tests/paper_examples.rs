// SPDX-License-Identifier: Apache-2.0

mod common;

use common::{example1, example1_s, names};
use popmatch::model::{blocking_edges, is_feasible, is_stable};
use popmatch::solvers::{gale_shapley, solve_pareto_budgeted};
use popmatch::RotationPoset;
use popmatch::verify::{find_pareto_improvement, is_pareto_improvement, is_popular};
use popmatch::Side;

#[test]
fn example1_ma_is_improved_along_the_four_cycle() {
    let inst = example1();
    let ps = &inst.ps;
    let ma = names(ps, &[("a1", "b1"), ("a2", "b2"), ("a3", "b3")]);
    let swapped = names(ps, &[("a1", "b2"), ("a2", "b1"), ("a3", "b3")]);
    assert!(is_pareto_improvement(ps, &ma, &swapped).unwrap());
    let found = find_pareto_improvement(ps, &ma).unwrap().expect("M_a is not Pareto-optimal");
    assert_eq!(found, swapped);
    assert_eq!(found.len(), ma.len());
    assert!(inst.utility_of(&swapped).unwrap() < inst.utility_of(&ma).unwrap());
}

#[test]
fn example1_ma_is_pareto_optimal_without_s() {
    let inst = example1();
    let ps = &inst.ps;
    let g_minus_s = ps.without_edges(&example1_s(ps)).unwrap();
    let ma = names(ps, &[("a1", "b1"), ("a2", "b2"), ("a3", "b3")]);
    assert!(find_pareto_improvement(&g_minus_s, &ma).unwrap().is_none());
}

#[test]
fn example1_two_stable_matchings_of_equal_utility_without_s() {
    let inst = example1();
    let ps = &inst.ps;
    let g_minus_s = ps.without_edges(&example1_s(ps)).unwrap();
    let poset: RotationPoset = popmatch::solvers::build_rotation_poset(&g_minus_s, |e| inst.val.utility(e).unwrap()).unwrap();
    let mut seen = Vec::new();
    poset.for_each_stable_matching(|m| {
        seen.push(m.clone());
        std::ops::ControlFlow::<()>::Continue(())
    });
    assert_eq!(seen.len(), 2);
    assert_eq!(inst.utility_of(&seen[0]).unwrap(), inst.utility_of(&seen[1]).unwrap());
}

#[test]
fn example1_solver_returns_mb() {
    let inst = example1();
    let ps = &inst.ps;
    let mb = names(ps, &[("a1", "b1"), ("a2", "b3"), ("a3", "b2")]);
    assert_eq!(blocking_edges(ps, &mb).unwrap(), example1_s(ps));
    let sol = solve_pareto_budgeted(&inst).unwrap().expect("a feasible Pareto-optimal matching exists");
    assert_eq!(sol.solution.matching, mb);
    assert_eq!(sol.solution.utility, 6);
    assert!(is_feasible(&inst, &mb).unwrap());
    assert!(find_pareto_improvement(ps, &mb).unwrap().is_none());
    let g_minus_s = ps.without_edges(&example1_s(ps)).unwrap();
    assert!(find_pareto_improvement(&g_minus_s, &mb).unwrap().is_none());
}

#[test]
fn stable_matchings_are_popular() {
    let inst = example1();
    for side in [Side::A, Side::B] {
        let m = gale_shapley(&inst.ps, side).unwrap();
        assert!(is_stable(&inst.ps, &m).unwrap());
        assert!(is_popular(&inst.ps, &m).unwrap().popular);
        assert!(find_pareto_improvement(&inst.ps, &m).unwrap().is_none());
    }
}
