// SPDX-License-Identifier: Apache-2.0

mod common;

use std::ops::ControlFlow;

use common::brute_force_sat;
use popmatch::generators::{
    assignment_matching, clique_matching, clique_to_instance, e_star, sat_to_instance, CliqueVariant, CnfFormula,
    ColoredGraph,
};
use popmatch::model::{blocking_edges, is_feasible, is_stable};
use popmatch::solvers::{
    build_rotation_poset, find_matching_within_budget, solve_popular_budgeted_ml, unique_stable_master_list,
};
use popmatch::verify::{build_gm, check_single_blocking, is_popular};
use popmatch::Matching;

fn phi() -> CnfFormula {
    CnfFormula::parse_dimacs("p cnf 3 2\n1 -2 3 0\n-1 2 -3 0\n").unwrap()
}

#[test]
fn sat_utility_is_carried_by_f_star_alone() {
    let layout = sat_to_instance(&phi()).unwrap();
    let inst = &layout.instance;
    let f_star = layout.edge("f_star").unwrap();
    assert_eq!(layout.edge("e_star").unwrap(), inst.ps.edge_by_names("u", "v").unwrap());
    assert_eq!(f_star, inst.ps.edge_by_names("u", "v'").unwrap());
    let reference = &layout.reference;
    assert!(reference.contains(f_star));
    assert_eq!(inst.utility_of(reference).unwrap(), 1);
    let without = Matching::new(&inst.ps, reference.edges().into_iter().filter(|&e| e != f_star)).unwrap();
    assert_eq!(inst.utility_of(&without).unwrap(), 0);
}

#[test]
fn sat_assignment_matching_is_a_yes_certificate() {
    let phi = phi();
    let layout = sat_to_instance(&phi).unwrap();
    let ps = &layout.instance.ps;
    let e = e_star(&layout).unwrap();
    let alpha = brute_force_sat(phi.num_vars, &phi.clauses).unwrap();
    let m = assignment_matching(&layout, &phi, &alpha).unwrap().unwrap();
    assert_eq!(blocking_edges(ps, &m).unwrap(), vec![e]);
    assert!(is_popular(ps, &m).unwrap().popular);
    assert!(check_single_blocking(ps, &m, e).unwrap().all());
    assert!(is_feasible(&layout.instance, &m).unwrap());
    assert!(m.contains(layout.edge("f_star").unwrap()));
}

#[test]
fn sat_second_choice_of_flipped_clause_cycle_leaves_gm() {
    let phi = phi();
    let layout = sat_to_instance(&phi).unwrap();
    let ps = &layout.instance.ps;
    let alpha = brute_force_sat(phi.num_vars, &phi.clauses).unwrap();
    let m = assignment_matching(&layout, &phi, &alpha).unwrap().unwrap();
    let gm = build_gm(ps, &m).unwrap();
    for j in 0..phi.clauses.len() {
        let tau = phi.first_true_literal(j, &alpha).unwrap() + 1;
        let a0 = format!("c{}.{tau}.a0", j + 1);
        let second = if tau == 1 { "v'".to_string() } else { format!("c{}.{}.b0", j + 1, tau - 1) };
        let edge = ps.edge_by_names(&a0, &second).unwrap();
        assert!(!gm.contains(edge), "{a0} - {second} should be a (-,-) edge");
    }
}

#[test]
fn sat_reference_is_stable_without_e_star() {
    let layout = sat_to_instance(&phi()).unwrap();
    let ps = &layout.instance.ps;
    let g = ps.without_edges(&[e_star(&layout).unwrap()]).unwrap();
    assert!(is_stable(&g, &layout.reference).unwrap());
}

#[test]
fn sat_round_trip_on_tiny_formulas() {
    let formulas = [
        "p cnf 1 2\n1 1 1 0\n-1 -1 -1 0\n",
        "p cnf 1 2\n1 1 1 0\n-1 1 -1 0\n",
        "p cnf 2 2\n1 2 2 0\n-1 -2 -2 0\n",
        "p cnf 2 2\n1 1 1 0\n-1 2 -1 0\n",
    ];
    for text in formulas {
        let phi = CnfFormula::parse_dimacs(text).unwrap();
        let layout = sat_to_instance(&phi).unwrap();
        let ps = &layout.instance.ps;
        let e = e_star(&layout).unwrap();
        let poset = build_rotation_poset(&ps.without_edges(&[e]).unwrap(), |_| 0i64).unwrap();
        let found = poset
            .for_each_stable_matching(|m| {
                if blocking_edges(ps, m).unwrap() == vec![e] && is_popular(ps, m).unwrap().popular {
                    ControlFlow::Break(m.clone())
                } else {
                    ControlFlow::Continue(())
                }
            })
            .is_some();
        assert_eq!(found, brute_force_sat(phi.num_vars, &phi.clauses).is_some(), "{text}");
    }
}

fn clique_graph() -> ColoredGraph {
    ColoredGraph::from_json_str(
        r#"{"parts": [["x1", "x2"], ["y1", "y2"], ["z1"]],
            "edges": [["x1", "y1"], ["y1", "z1"], ["x1", "z1"], ["x2", "y2"], ["y2", "z1"]]}"#,
    )
    .unwrap()
}

#[test]
fn clique_reference_is_the_unique_stable_matching() {
    let g = clique_graph();
    let layout = clique_to_instance(&g, CliqueVariant::A).unwrap();
    let ps = &layout.instance.ps;
    let ms = unique_stable_master_list(ps).unwrap();
    assert_eq!(ms, layout.reference);
    // a_v b_v and a_e b_e pairs, plus the threading chain t_0 -> s_1 -> .. -> s_{2,3}
    let chain = [("t[0]", "s[1]"), ("t[1]", "s[2]"), ("t[2]", "s[3]"), ("t[3]", "s[1,2]"), ("t[1,2]", "s[1,3]"), ("t[1,3]", "s[2,3]")];
    for (t, s) in chain {
        assert!(ms.contains(ps.edge_by_names(t, s).unwrap()), "{t} {s}");
    }
    for v in ["x1", "x2", "y1", "y2", "z1", "x1,y1", "y2,z1"] {
        assert!(ms.contains(ps.edge_by_names(&format!("a[{v}]"), &format!("b[{v}]")).unwrap()));
    }
    assert_eq!(ms.len(), 5 + 5 + chain.len());
    let (la, lb) = layout.certificate.clone().unwrap();
    assert!(la.validate(ps) && lb.validate(ps));
    assert_eq!(la.names(ps)[..2], ["a[x1,y1]", "a[y1,z1]"]);
    assert_eq!(lb.names(ps)[..2], ["b[z1]", "b[y2]"]);
}

#[test]
fn clique_variant_a_answer_matches_clique_bit() {
    let g = clique_graph();
    let layout = clique_to_instance(&g, CliqueVariant::A).unwrap();
    let inst = &layout.instance;
    assert_eq!(inst.utility_of(&layout.reference).unwrap(), 0);
    let cliques = g.multicolored_cliques();
    assert_eq!(cliques.len(), 1);
    let m = clique_matching(&layout, &g, &cliques[0]).unwrap();
    assert!(is_feasible(inst, &m).unwrap());
    assert!(is_popular(&inst.ps, &m).unwrap().popular);
    assert_eq!(blocking_edges(&inst.ps, &m).unwrap().len(), 6);
}

#[test]
fn clique_trivial_pair() {
    let g = ColoredGraph::from_json_str(r#"{"parts": [["x"], ["y"]], "edges": [["x", "y"]]}"#).unwrap();
    let layout = clique_to_instance(&g, CliqueVariant::A).unwrap();
    let m = clique_matching(&layout, &g, &["x".into(), "y".into()]).unwrap();
    assert_eq!(blocking_edges(&layout.instance.ps, &m).unwrap().len(), 3);
    assert!(is_popular(&layout.instance.ps, &m).unwrap().popular);
    assert!(is_feasible(&layout.instance, &m).unwrap());
    let sol = solve_popular_budgeted_ml(&layout.instance).unwrap().expect("the trivial clique is a yes-instance");
    assert_eq!(sol.utility, 1);
    assert_eq!(sol.blocking_edges.len(), 3);
}

#[test]
fn clique_triangle_free_has_no_large_cheap_matching() {
    let g = ColoredGraph::from_json_str(
        r#"{"parts": [["x1", "x2"], ["y1"], ["z1", "z2"]],
            "edges": [["x1", "y1"], ["y1", "z1"], ["x2", "z1"], ["x1", "z2"]]}"#,
    )
    .unwrap();
    assert!(g.multicolored_cliques().is_empty());
    let layout = clique_to_instance(&g, CliqueVariant::B).unwrap();
    let ps = &layout.instance.ps;
    let k = layout.instance.val.budget_k as usize;
    let size = layout.reference.len() + 1;
    assert_eq!(find_matching_within_budget(ps, size, k).unwrap(), None);
    // the budget is what rules it out
    let loose = find_matching_within_budget(ps, size, ps.num_edges()).unwrap();
    assert!(loose.is_some_and(|m: Matching| m.len() == size));
}
