// SPDX-License-Identifier: Apache-2.0

//! Multicolored clique to popular matchings under master lists.
//!
//! Gadget vertices sit on the sides forced by bipartiteness: `a_v`, `a_e`,
//! `t_*` and `t_0` on side `A`; `b_v`, `b_e`, `s_*` and `s_0` on side `B`.
//!
//! | element            | id        | landmark  |
//! |--------------------|-----------|-----------|
//! | vertex gadget pair | `a[v]`, `b[v]` | `a_{v}`, `b_{v}` |
//! | edge gadget pair   | `a[x,y]`, `b[x,y]` | `a_{x,y}`, `b_{x,y}` |
//! | connectors         | `s[i]`, `t[i]`, `s[i,j]`, `t[i,j]` | `s_{i}`, `t_{i}`, `s_{i,j}`, `t_{i,j}` |
//! | start              | `s[0]`, `t[0]` | `s_0`, `t_0` |
//!
//! Parts are numbered from 1. An edge gadget is named by its endpoints with
//! the lower-numbered part first.

use std::collections::{BTreeMap, HashMap, HashSet};

use rand::Rng;
use serde::{Deserialize, Serialize};

use super::layout::ReductionLayout;
use crate::error::{Error, Result};
use crate::model::{Matching, PreferenceSystem, Side, Valuation};
use crate::structure::MasterListCertificate;
use crate::Instance;

/// A graph whose vertices are partitioned into color classes `V_1..V_q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ColoredGraph {
    pub parts: Vec<Vec<String>>,
    pub edges: Vec<(String, String)>,
}

/// Utility variant: `A` rewards only `(s_0, t_0)` with `t = 1`; `B` has
/// unit utilities with `t = |V|/2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CliqueVariant {
    A,
    B,
}

/// An edge between different parts, with `i < j` and `x ∈ V_i`, `y ∈ V_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
struct CrossEdge {
    i: usize,
    j: usize,
    x: String,
    y: String,
}

impl CrossEdge {
    fn tag(&self) -> String {
        format!("{},{}", self.x, self.y)
    }
}

impl ColoredGraph {
    pub fn from_json_str(text: &str) -> Result<Self> {
        let g: ColoredGraph = serde_json::from_str(text)?;
        g.part_of()?;
        Ok(g)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes") + "\n"
    }

    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    /// Part index (0-based) of every vertex, validating the partition.
    fn part_of(&self) -> Result<HashMap<&str, usize>> {
        if self.parts.len() < 2 {
            return Err(Error::BadPartition("at least two parts are required".into()));
        }
        let mut part = HashMap::new();
        for (i, p) in self.parts.iter().enumerate() {
            if p.is_empty() {
                return Err(Error::BadPartition(format!("part {} is empty", i + 1)));
            }
            for v in p {
                if v.is_empty() || v.contains(|c: char| c.is_whitespace() || "[],".contains(c)) {
                    return Err(Error::BadPartition(format!(
                        "vertex name {v:?} must be non-empty without whitespace, brackets or commas"
                    )));
                }
                if part.insert(v.as_str(), i).is_some() {
                    return Err(Error::BadPartition(format!("vertex {v:?} appears twice")));
                }
            }
        }
        let mut seen = HashSet::new();
        for (x, y) in &self.edges {
            for z in [x, y] {
                if !part.contains_key(z.as_str()) {
                    return Err(Error::BadPartition(format!("edge endpoint {z:?} is in no part")));
                }
            }
            if x == y {
                return Err(Error::BadPartition(format!("self-loop at {x:?}")));
            }
            let key = if x < y { (x, y) } else { (y, x) };
            if !seen.insert(key) {
                return Err(Error::BadPartition(format!("edge {x:?}-{y:?} appears twice")));
            }
        }
        Ok(part)
    }

    /// Edges between different parts in input order, oriented low part first.
    fn cross_edges(&self) -> Result<Vec<CrossEdge>> {
        let part = self.part_of()?;
        Ok(self
            .edges
            .iter()
            .filter_map(|(x, y)| {
                let (px, py) = (part[x.as_str()], part[y.as_str()]);
                match px.cmp(&py) {
                    std::cmp::Ordering::Equal => None,
                    std::cmp::Ordering::Less => Some(CrossEdge { i: px + 1, j: py + 1, x: x.clone(), y: y.clone() }),
                    std::cmp::Ordering::Greater => Some(CrossEdge { i: py + 1, j: px + 1, x: y.clone(), y: x.clone() }),
                }
            })
            .collect())
    }

    pub fn has_edge(&self, x: &str, y: &str) -> bool {
        self.edges.iter().any(|(p, q)| (p == x && q == y) || (p == y && q == x))
    }

    /// Every clique with one vertex per part, in lexicographic order of part
    /// positions.
    pub fn multicolored_cliques(&self) -> Vec<Vec<String>> {
        let mut out = Vec::new();
        let mut cur: Vec<&String> = Vec::new();
        fn go<'a>(g: &'a ColoredGraph, cur: &mut Vec<&'a String>, out: &mut Vec<Vec<String>>) {
            if cur.len() == g.parts.len() {
                out.push(cur.iter().map(|s| s.to_string()).collect());
                return;
            }
            for v in &g.parts[cur.len()] {
                if cur.iter().all(|u| g.has_edge(u, v)) {
                    cur.push(v);
                    go(g, cur, out);
                    cur.pop();
                }
            }
        }
        go(self, &mut cur, &mut out);
        out
    }

    /// Random graph with `q` parts of sizes in `1..=max_part` and each
    /// cross-part edge present with probability `p`.
    pub fn random(q: usize, max_part: usize, p: f64, rng: &mut impl Rng) -> Self {
        let parts: Vec<Vec<String>> = (1..=q)
            .map(|i| (1..=rng.gen_range(1..=max_part)).map(|k| format!("v{i}_{k}")).collect())
            .collect();
        let mut edges = Vec::new();
        for i in 0..q {
            for j in i + 1..q {
                for x in &parts[i] {
                    for y in &parts[j] {
                        if rng.gen_bool(p) {
                            edges.push((x.clone(), y.clone()));
                        }
                    }
                }
            }
        }
        ColoredGraph { parts, edges }
    }
}

/// Gadgets in threading order: vertex gadgets `1..q`, then edge gadgets by
/// `(i, j)` lexicographically.
fn gadget_order(q: usize) -> Vec<String> {
    let mut out: Vec<String> = (1..=q).map(|i| i.to_string()).collect();
    for i in 1..=q {
        for j in i + 1..=q {
            out.push(format!("{i},{j}"));
        }
    }
    out
}

pub fn clique_to_instance(g: &ColoredGraph, variant: CliqueVariant) -> Result<ReductionLayout> {
    let q = g.num_parts();
    let cross = g.cross_edges()?;
    let gadgets = gadget_order(q);
    let vertices: Vec<(usize, &String)> = g.parts.iter().enumerate().flat_map(|(i, p)| p.iter().map(move |v| (i + 1, v))).collect();

    // master-list orders; side A = A_E, A_V, T, t_0 and side B = B_V, B_E, S, s_0
    let mut order_a: Vec<String> = cross.iter().map(|e| format!("a[{}]", e.tag())).collect();
    order_a.extend(vertices.iter().map(|(_, v)| format!("a[{v}]")));
    order_a.extend(gadgets.iter().map(|h| format!("t[{h}]")));
    order_a.push("t[0]".into());
    let mut order_b: Vec<String> = vertices.iter().rev().map(|(_, v)| format!("b[{v}]")).collect();
    order_b.extend(cross.iter().rev().map(|e| format!("b[{}]", e.tag())));
    order_b.extend(gadgets.iter().map(|h| format!("s[{h}]")));
    order_b.push("s[0]".into());

    // input order of vertices within each side
    let mut side_a: Vec<String> = vertices.iter().map(|(_, v)| format!("a[{v}]")).collect();
    side_a.extend(cross.iter().map(|e| format!("a[{}]", e.tag())));
    side_a.extend(gadgets.iter().map(|h| format!("t[{h}]")));
    side_a.push("t[0]".into());
    let mut side_b: Vec<String> = vertices.iter().map(|(_, v)| format!("b[{v}]")).collect();
    side_b.extend(cross.iter().map(|e| format!("b[{}]", e.tag())));
    side_b.extend(gadgets.iter().map(|h| format!("s[{h}]")));
    side_b.push("s[0]".into());

    let mut edges: Vec<(String, String)> = Vec::new();
    let mut reference: Vec<(String, String)> = Vec::new();
    for (i, v) in &vertices {
        edges.push((format!("a[{v}]"), format!("b[{v}]")));
        edges.push((format!("a[{v}]"), format!("s[{i}]")));
        edges.push((format!("t[{i}]"), format!("b[{v}]")));
        reference.push((format!("a[{v}]"), format!("b[{v}]")));
    }
    for e in &cross {
        let (a, b) = (format!("a[{}]", e.tag()), format!("b[{}]", e.tag()));
        let h = format!("{},{}", e.i, e.j);
        edges.push((a.clone(), b.clone()));
        edges.push((a.clone(), format!("s[{h}]")));
        edges.push((format!("t[{h}]"), b.clone()));
        reference.push((a, b.clone()));
        for (part, skip) in [(e.i, &e.x), (e.j, &e.y)] {
            for v in g.parts[part - 1].iter().filter(|v| *v != skip) {
                edges.push((format!("a[{v}]"), b.clone()));
            }
        }
    }
    edges.push(("t[0]".into(), "s[0]".into()));
    let mut threading = vec![("t[0]".to_string(), format!("s[{}]", gadgets[0]))];
    for h in 0..gadgets.len() - 1 {
        threading.push((format!("t[{}]", gadgets[h]), format!("s[{}]", gadgets[h + 1])));
    }
    edges.extend(threading.iter().cloned());
    reference.extend(threading);

    let ps = from_master_lists(&side_a, &side_b, &order_a, &order_b, &edges)?;
    let k = (q + q * (q - 1) / 2) as i64;
    let s0t0 = ps.edge_by_names("t[0]", "s[0]")?;
    let val = match variant {
        CliqueVariant::A => Valuation::from_fn(&ps, |e| i64::from(e == s0t0), |_| 1, 1, k)?,
        CliqueVariant::B => Valuation::uniform(&ps, 1, 1, (ps.num_vertices() / 2) as i64, k)?,
    };
    let index = |side: Side, order: &[String]| MasterListCertificate {
        side,
        order: order.iter().map(|n| ps.vertex_on(side, n).expect("ordered vertex exists")).collect(),
    };
    let certificate = Some((index(Side::A, &order_a), index(Side::B, &order_b)));

    let mut landmarks = BTreeMap::new();
    landmarks.insert("s_0".to_string(), "s[0]".to_string());
    landmarks.insert("t_0".to_string(), "t[0]".to_string());
    for h in &gadgets {
        landmarks.insert(format!("s_{{{h}}}"), format!("s[{h}]"));
        landmarks.insert(format!("t_{{{h}}}"), format!("t[{h}]"));
    }
    for (_, v) in &vertices {
        landmarks.insert(format!("a_{{{v}}}"), format!("a[{v}]"));
        landmarks.insert(format!("b_{{{v}}}"), format!("b[{v}]"));
    }
    for e in &cross {
        landmarks.insert(format!("a_{{{}}}", e.tag()), format!("a[{}]", e.tag()));
        landmarks.insert(format!("b_{{{}}}", e.tag()), format!("b[{}]", e.tag()));
    }
    let refs: Vec<(&str, &str)> = reference.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
    let reference = Matching::from_names(&ps, &refs)?;
    let layout = ReductionLayout {
        instance: Instance::new(ps, val)?,
        landmarks,
        certificate,
        reference,
    };
    layout.check_landmarks()?;
    Ok(layout)
}

/// Builds a strict system whose lists are the master lists restricted to
/// each neighbourhood.
fn from_master_lists(
    side_a: &[String],
    side_b: &[String],
    order_a: &[String],
    order_b: &[String],
    edges: &[(String, String)],
) -> Result<PreferenceSystem> {
    let pos_a: HashMap<&str, usize> = order_a.iter().enumerate().map(|(i, n)| (n.as_str(), i)).collect();
    let pos_b: HashMap<&str, usize> = order_b.iter().enumerate().map(|(i, n)| (n.as_str(), i)).collect();
    let mut lists: BTreeMap<&str, Vec<&str>> = BTreeMap::new();
    for (a, b) in edges {
        lists.entry(a).or_default().push(b);
        lists.entry(b).or_default().push(a);
    }
    let mut builder = crate::model::PreferenceSystemBuilder::new();
    for n in side_a {
        builder.add_vertex(Side::A, n);
    }
    for n in side_b {
        builder.add_vertex(Side::B, n);
    }
    for (v, mut list) in lists {
        let pos = if pos_a.contains_key(v) { &pos_b } else { &pos_a };
        list.sort_by_key(|u| pos[u]);
        builder.set_strict_list(v, &list)?;
    }
    builder.build()
}

/// The complete matching induced by a multicolored clique, given as one
/// vertex per part in part order.
pub fn clique_matching(layout: &ReductionLayout, g: &ColoredGraph, clique: &[String]) -> Result<Matching> {
    let q = g.num_parts();
    if clique.len() != q || (0..q).any(|i| !g.parts[i].contains(&clique[i])) {
        return Err(Error::BadPartition("expected one vertex from each part, in part order".into()));
    }
    let mut chosen: HashMap<String, String> = HashMap::new();
    for (i, v) in clique.iter().enumerate() {
        chosen.insert(v.clone(), (i + 1).to_string());
    }
    for i in 0..q {
        for j in i + 1..q {
            if !g.has_edge(&clique[i], &clique[j]) {
                return Err(Error::BadPartition(format!("{} and {} are not adjacent", clique[i], clique[j])));
            }
            chosen.insert(format!("{},{}", clique[i], clique[j]), format!("{},{}", i + 1, j + 1));
        }
    }
    let mut pairs: Vec<(String, String)> = vec![("t[0]".into(), "s[0]".into())];
    let gadgets = g.parts.iter().flatten().cloned().chain(g.cross_edges()?.into_iter().map(|e| e.tag()));
    for x in gadgets {
        match chosen.get(&x) {
            Some(h) => {
                pairs.push((format!("a[{x}]"), format!("s[{h}]")));
                pairs.push((format!("t[{h}]"), format!("b[{x}]")));
            }
            None => pairs.push((format!("a[{x}]"), format!("b[{x}]"))),
        }
    }
    let refs: Vec<(&str, &str)> = pairs.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
    Matching::from_names(&layout.instance.ps, &refs)
}
