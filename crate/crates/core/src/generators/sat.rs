// SPDX-License-Identifier: Apache-2.0

//! Exact-3-SAT to popular matchings with one prescribed blocking edge.
//!
//! Vertex ids and landmark names (indices are 1-based):
//!
//! | element                | id            | landmark          |
//! |------------------------|---------------|-------------------|
//! | cycle vertex of `x_i`  | `x{i}.{t,f}.{a0,a1,b0,b1}` | `C[x{i}][{t,f}][{a0,..}]` |
//! | cycle vertex of `c_j`  | `c{j}.{l}.{a0,a1,b0,b1}`   | `C[c{j}][{l}][{a0,..}]`   |
//! | clause vertex          | `c{j}`        | `a[c{j}]`         |
//! | variable vertex        | `x{i}`        | `b[x{i}]`         |
//! | special vertices       | `u v u' v'`   | same              |
//! | `(u, v)` / `(u, v')`   | edge keys     | `e_star` / `f_star` |
//! | consistency edge of literal `l` of `c_j` | edge key | `F[c{j}][{l}]` |
//!
//! Each 4-cycle is `a0 – b0 – a1 – b1 – a0`.

use std::collections::BTreeMap;

use super::cnf::CnfFormula;
use super::layout::ReductionLayout;
use crate::error::Result;
use crate::model::{Edge, Matching, PreferenceSystem, PreferenceSystemBuilder, Side, Valuation};
use crate::Instance;

const PARTS: [&str; 4] = ["a0", "a1", "b0", "b1"];

fn var_cycle(i: usize, lambda: char, part: &str) -> String {
    format!("x{i}.{lambda}.{part}")
}

fn clause_cycle(j: usize, l: usize, part: &str) -> String {
    format!("c{j}.{l}.{part}")
}

pub fn sat_to_instance(phi: &CnfFormula) -> Result<ReductionLayout> {
    let phi = CnfFormula::new(phi.num_vars, phi.clauses.clone())?;
    let (n, m) = (phi.num_vars, phi.clauses.len());
    let mut landmarks = BTreeMap::new();
    let mut b = PreferenceSystemBuilder::new();
    let mut add = |b: &mut PreferenceSystemBuilder, side: Side, id: String, landmark: String| {
        b.add_vertex(side, &id);
        landmarks.insert(landmark, id);
    };
    for side in [Side::A, Side::B] {
        let parts = if side == Side::A { &PARTS[..2] } else { &PARTS[2..] };
        for i in 1..=n {
            for lambda in ['t', 'f'] {
                for p in parts {
                    add(&mut b, side, var_cycle(i, lambda, p), format!("C[x{i}][{lambda}][{p}]"));
                }
            }
        }
        for j in 1..=m {
            for l in 1..=3 {
                for p in parts {
                    add(&mut b, side, clause_cycle(j, l, p), format!("C[c{j}][{l}][{p}]"));
                }
            }
        }
        if side == Side::A {
            for j in 1..=m {
                add(&mut b, side, format!("c{j}"), format!("a[c{j}]"));
            }
            add(&mut b, side, "u".into(), "u".into());
            add(&mut b, side, "u'".into(), "u'".into());
        } else {
            for i in 1..=n {
                add(&mut b, side, format!("x{i}"), format!("b[x{i}]"));
            }
            add(&mut b, side, "v".into(), "v".into());
            add(&mut b, side, "v'".into(), "v'".into());
        }
    }

    // consistency neighbours of each a^{x_i,λ}_1, keyed by landmark name
    let mut consistency: BTreeMap<String, Vec<(String, String)>> = BTreeMap::new();
    let mut literal_partner: BTreeMap<(usize, usize), String> = BTreeMap::new();
    for (j0, clause) in phi.clauses.iter().enumerate() {
        for (l0, &lit) in clause.iter().enumerate() {
            let (j, l, i) = (j0 + 1, l0 + 1, lit.unsigned_abs() as usize);
            // negative literals meet the true cycle, positive ones the false cycle
            let lambda = if lit < 0 { 't' } else { 'f' };
            let a1 = var_cycle(i, lambda, "a1");
            let b1 = clause_cycle(j, l, "b1");
            consistency
                .entry(a1.clone())
                .or_default()
                .push((format!("C[c{j}][{l}][b1]"), b1.clone()));
            literal_partner.insert((j, l), a1.clone());
            landmarks.insert(format!("F[c{j}][{l}]"), format!("{a1} {b1}"));
        }
    }

    let s = |x: &str| x.to_string();
    let set = |b: &mut PreferenceSystemBuilder, who: String, list: Vec<String>| -> Result<()> {
        let refs: Vec<&str> = list.iter().map(String::as_str).collect();
        b.set_strict_list(&who, &refs)
    };
    set(&mut b, s("u"), vec![s("v"), s("v'")])?;
    set(&mut b, s("v"), vec![s("u"), s("u'")])?;
    let mut up = vec![s("v")];
    up.extend((1..=n).map(|i| var_cycle(i, 't', "b0")));
    set(&mut b, s("u'"), up)?;
    let mut vp = vec![s("u")];
    vp.extend((1..=m).map(|j| clause_cycle(j, 1, "a0")));
    set(&mut b, s("v'"), vp)?;
    for j in 1..=m {
        let c = |l: usize, p: &str| clause_cycle(j, l, p);
        for l in 1..=3 {
            let second = if l == 1 { s("v'") } else { c(l - 1, "b0") };
            set(&mut b, c(l, "a0"), vec![c(l, "b1"), second, c(l, "b0")])?;
            let third = if l < 3 { c(l + 1, "a0") } else { format!("c{j}") };
            set(&mut b, c(l, "b0"), vec![c(l, "a0"), c(l, "a1"), third])?;
            set(&mut b, c(l, "a1"), vec![c(l, "b0"), c(l, "b1")])?;
            set(&mut b, c(l, "b1"), vec![c(l, "a1"), literal_partner[&(j, l)].clone(), c(l, "a0")])?;
        }
        set(&mut b, format!("c{j}"), vec![c(3, "b0")])?;
    }
    for i in 1..=n {
        let x = |lambda: char, p: &str| var_cycle(i, lambda, p);
        set(&mut b, x('t', "a0"), vec![x('t', "b0"), x('t', "b1"), x('f', "b0")])?;
        set(&mut b, x('f', "a0"), vec![x('f', "b0"), x('f', "b1"), format!("x{i}")])?;
        set(&mut b, x('t', "b0"), vec![x('t', "a1"), s("u'"), x('t', "a0")])?;
        set(&mut b, x('f', "b0"), vec![x('f', "a1"), x('t', "a0"), x('f', "a0")])?;
        for lambda in ['t', 'f'] {
            let mut nf = consistency.get(&x(lambda, "a1")).cloned().unwrap_or_default();
            nf.sort();
            let mut list = vec![x(lambda, "b1")];
            list.extend(nf.into_iter().map(|(_, id)| id));
            list.push(x(lambda, "b0"));
            set(&mut b, x(lambda, "a1"), list)?;
            set(&mut b, x(lambda, "b1"), vec![x(lambda, "a0"), x(lambda, "a1")])?;
        }
        set(&mut b, format!("x{i}"), vec![x('f', "a0")])?;
    }
    let ps = b.build()?;
    landmarks.insert(s("e_star"), s("u v"));
    landmarks.insert(s("f_star"), s("u v'"));

    let f_star = ps.edge_by_names("u", "v'")?;
    let val = Valuation::from_fn(&ps, |e| i64::from(e == f_star), |_| 1, 1, 1)?;
    let reference = initial_matching(&ps, n, m)?;
    let layout = ReductionLayout {
        instance: Instance::new(ps, val)?,
        landmarks,
        certificate: None,
        reference,
    };
    layout.check_landmarks()?;
    Ok(layout)
}

/// `M_0`: `(u, v')`, `(u', v)`, and `a_h^σ b_h^σ` on every cycle.
fn initial_matching(ps: &PreferenceSystem, n: usize, m: usize) -> Result<Matching> {
    let mut pairs = vec![(s("u"), s("v'")), (s("u'"), s("v"))];
    for i in 1..=n {
        for lambda in ['t', 'f'] {
            for h in ["0", "1"] {
                pairs.push((var_cycle(i, lambda, &format!("a{h}")), var_cycle(i, lambda, &format!("b{h}"))));
            }
        }
    }
    for j in 1..=m {
        for l in 1..=3 {
            for h in ["0", "1"] {
                pairs.push((clause_cycle(j, l, &format!("a{h}")), clause_cycle(j, l, &format!("b{h}"))));
            }
        }
    }
    let refs: Vec<(&str, &str)> = pairs.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
    Matching::from_names(ps, &refs)
}

fn s(x: &str) -> String {
    x.to_string()
}

/// Switches a 4-cycle from `a0b0, a1b1` to `a0b1, a1b0`.
fn flip(ps: &PreferenceSystem, m: &mut Matching, id: impl Fn(&str) -> String) -> Result<()> {
    let e = |a: &str, b: &str| ps.edge_by_names(&id(a), &id(b));
    m.remove(e("a0", "b0")?);
    m.remove(e("a1", "b1")?);
    m.insert(e("a0", "b1")?);
    m.insert(e("a1", "b0")?);
    Ok(())
}

/// The matching that differs from `M_0` on the cycles of the assignment and
/// of the first true literal of each clause. `None` if `assignment` does not
/// satisfy `phi`.
pub fn assignment_matching(layout: &ReductionLayout, phi: &CnfFormula, assignment: &[bool]) -> Result<Option<Matching>> {
    let ps = &layout.instance.ps;
    let mut m = layout.reference.clone();
    for j in 0..phi.clauses.len() {
        let Some(l) = phi.first_true_literal(j, assignment) else { return Ok(None) };
        flip(ps, &mut m, |p| clause_cycle(j + 1, l + 1, p))?;
    }
    for (i, &value) in assignment.iter().enumerate() {
        let lambda = if value { 't' } else { 'f' };
        flip(ps, &mut m, |p| var_cycle(i + 1, lambda, p))?;
    }
    Ok(Some(m))
}

/// Edge `(u, v)`.
pub fn e_star(layout: &ReductionLayout) -> Result<Edge> {
    layout.edge("e_star")
}
