// SPDX-License-Identifier: Apache-2.0

//! The JSON instance format.
//!
//! ```json
//! { "side_a": ["a1"], "side_b": ["b1"],
//!   "prefs": { "a1": [["b1"]], "b1": [["a1"]] },
//!   "utility": { "a1 b1": 2 }, "cost": { "a1 b1": 1 },
//!   "t": 1, "k": 1 }
//! ```
//!
//! Each list is a sequence of rank-groups, best first. Edge keys are
//! `"<a-id> <b-id>"`. Missing `utility`/`cost` maps mean `ω ≡ 1` / `c ≡ 1`;
//! missing `t`/`k` mean zero.

use std::collections::{BTreeMap, HashMap};

use serde::Deserialize;
use serde_json::{json, Map, Value};

use super::prefs::{PreferenceSystemBuilder, Side};
use super::valuation::{Instance, Valuation};
use super::PreferenceSystem;
use crate::error::{Error, Result};
use crate::num::Weight;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct InstanceFile {
    side_a: Vec<String>,
    side_b: Vec<String>,
    #[serde(default)]
    prefs: BTreeMap<String, Vec<Vec<String>>>,
    utility: Option<BTreeMap<String, i64>>,
    cost: Option<BTreeMap<String, i64>>,
    #[serde(default)]
    t: i64,
    #[serde(default)]
    k: i64,
}

fn edge_map<W: Weight>(
    ps: &PreferenceSystem,
    raw: Option<BTreeMap<String, i64>>,
    what: &str,
) -> Result<HashMap<super::Edge, W>> {
    match raw {
        None => ps.edges().iter().map(|&e| Ok((e, W::one()))).collect(),
        Some(map) => {
            let mut out = HashMap::with_capacity(map.len());
            for (key, value) in map {
                let e = ps
                    .parse_edge_key(&key)
                    .map_err(|_| Error::InvalidValuation(format!("{what} key {key:?} is not an edge")))?;
                out.insert(e, W::try_from_i64(value)?);
            }
            Ok(out)
        }
    }
}

impl<W: Weight> Instance<W> {
    pub fn from_json_str(text: &str) -> Result<Self> {
        let file: InstanceFile = serde_json::from_str(text)?;
        let mut builder = PreferenceSystemBuilder::new();
        let mut seen = std::collections::HashSet::new();
        for (side, names) in [(Side::A, &file.side_a), (Side::B, &file.side_b)] {
            for n in names {
                if !seen.insert(n.as_str()) {
                    return Err(Error::InvalidPreferences(format!("duplicate vertex id {n:?}")));
                }
                builder.add_vertex(side, n);
            }
        }
        for (v, groups) in &file.prefs {
            let groups: Vec<Vec<&str>> = groups.iter().map(|g| g.iter().map(String::as_str).collect()).collect();
            builder.set_list(v, &groups)?;
        }
        let ps = builder.build()?;
        let utility = edge_map(&ps, file.utility, "utility")?;
        let cost = edge_map(&ps, file.cost, "cost")?;
        let val = Valuation::new(utility, cost, W::try_from_i64(file.t)?, W::try_from_i64(file.k)?)?;
        Instance::new(ps, val)
    }

    pub fn to_json_value(&self) -> Result<Value> {
        let ps = &self.ps;
        let to_i64 = |w: W| w.to_i64().ok_or(Error::Overflow);
        let mut prefs = Map::new();
        for side in [Side::A, Side::B] {
            for index in 0..ps.len(side) {
                let v = super::Vertex { side, index };
                let groups: Vec<Vec<&str>> = ps
                    .groups(v)
                    .iter()
                    .map(|g| g.iter().map(|&u| ps.names(side.other())[u].as_str()).collect())
                    .collect();
                prefs.insert(ps.name(v).to_string(), json!(groups));
            }
        }
        let mut utility = Map::new();
        let mut cost = Map::new();
        for &e in ps.edges() {
            utility.insert(ps.edge_key(e), json!(to_i64(self.val.utility(e).unwrap_or_default())?));
            cost.insert(ps.edge_key(e), json!(to_i64(self.val.cost(e).unwrap_or_default())?));
        }
        let mut root = Map::new();
        root.insert("side_a".into(), json!(ps.names(Side::A)));
        root.insert("side_b".into(), json!(ps.names(Side::B)));
        root.insert("prefs".into(), Value::Object(prefs));
        root.insert("utility".into(), Value::Object(utility));
        root.insert("cost".into(), Value::Object(cost));
        root.insert("t".into(), json!(to_i64(self.val.objective_t)?));
        root.insert("k".into(), json!(to_i64(self.val.budget_k)?));
        Ok(Value::Object(root))
    }

    /// Pretty-printed JSON with a trailing newline; deterministic.
    pub fn to_json_string(&self) -> Result<String> {
        let mut s = serde_json::to_string_pretty(&self.to_json_value()?)?;
        s.push('\n');
        Ok(s)
    }
}
