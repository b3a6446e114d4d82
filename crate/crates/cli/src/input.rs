// SPDX-License-Identifier: Apache-2.0

use std::collections::BTreeMap;
use std::fs;

use anyhow::{bail, Context, Result};
use popmatch::generators::parse_landmarks;
use popmatch::{Edge, Instance, Matching, PreferenceSystem};
use serde_json::Value;

pub fn read(path: &str) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {path}"))
}

pub fn write(path: &str, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("writing {path}"))
}

pub fn instance(path: &str) -> Result<Instance> {
    Instance::from_json_str(&read(path)?).with_context(|| format!("parsing instance {path}"))
}

pub fn landmarks(path: Option<&str>) -> Result<BTreeMap<String, String>> {
    match path {
        Some(p) => parse_landmarks(&read(p)?).with_context(|| format!("parsing landmarks {p}")),
        None => Ok(BTreeMap::new()),
    }
}

/// An edge given as `"<a> <b>"` or as a landmark name.
pub fn edge(ps: &PreferenceSystem, text: &str, landmarks: &BTreeMap<String, String>) -> Result<Edge> {
    if let Ok(e) = ps.parse_edge_key(text) {
        return Ok(e);
    }
    match landmarks.get(text) {
        Some(key) => ps.parse_edge_key(key).with_context(|| format!("landmark {text:?}")),
        None => bail!("{text:?} is neither an edge key nor a known landmark"),
    }
}

/// Reads `[[a, b], ..]` or any object carrying such a `"matching"` field.
pub fn matching(ps: &PreferenceSystem, path: &str) -> Result<Matching> {
    let v: Value = serde_json::from_str(&read(path)?).with_context(|| format!("parsing matching {path}"))?;
    let list = match &v {
        Value::Object(map) => map.get("matching").context("object has no \"matching\" field")?,
        other => other,
    };
    let pairs: Vec<(String, String)> = serde_json::from_value(list.clone()).context("matching must be a list of [a, b] pairs")?;
    let refs: Vec<(&str, &str)> = pairs.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
    Ok(Matching::from_names(ps, &refs)?)
}
