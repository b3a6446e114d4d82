// SPDX-License-Identifier: Apache-2.0

use std::time::Duration;

use popmatch::{Edge, Instance, Matching, PreferenceSystem};
use serde_json::{json, Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Found,
    NoSolution,
    Error,
}

impl Status {
    fn as_str(self) -> &'static str {
        match self {
            Status::Found => "FOUND",
            Status::NoSolution => "NO_SOLUTION",
            Status::Error => "ERROR",
        }
    }
}

/// The JSON document printed by every run.
#[derive(Debug)]
pub struct RunReport {
    pub status: Status,
    command: Vec<String>,
    fields: Map<String, Value>,
    seed: Option<u64>,
    wall_time_ms: u128,
    /// Printed verbatim instead of the report.
    raw: Option<String>,
}

impl RunReport {
    pub fn new(status: Status) -> Self {
        RunReport {
            status,
            command: Vec::new(),
            fields: Map::new(),
            seed: None,
            wall_time_ms: 0,
            raw: None,
        }
    }

    pub fn error(message: String) -> Self {
        Self::new(Status::Error).with("error", json!(message))
    }

    pub fn raw(text: String) -> Self {
        RunReport { raw: Some(text), ..Self::new(Status::Found) }
    }

    pub fn with(mut self, key: &str, value: Value) -> Self {
        self.fields.insert(key.to_string(), value);
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    /// Adds `matching`, `utility`, `cost` and `blocking_edges`, recomputed
    /// from the instance.
    pub fn with_matching(self, inst: &Instance, m: &Matching) -> anyhow::Result<Self> {
        let blocking = popmatch::model::blocking_edges(&inst.ps, m)?;
        let utility = inst.utility_of(m)?;
        let cost = inst.val.total_cost(&blocking)?;
        Ok(self
            .with("matching", matching_json(&inst.ps, m))
            .with("utility", json!(utility))
            .with("cost", json!(cost))
            .with("blocking_edges", edges_json(&inst.ps, &blocking)))
    }

    pub fn finish(&mut self, command: Vec<String>, elapsed: Duration) {
        self.command = command;
        self.wall_time_ms = elapsed.as_millis();
    }

    pub fn render(&self) -> String {
        if let Some(raw) = &self.raw {
            return raw.trim_end().to_string();
        }
        let mut root = Map::new();
        root.insert("command".into(), json!(self.command));
        root.insert("status".into(), json!(self.status.as_str()));
        root.extend(self.fields.clone());
        if let Some(seed) = self.seed {
            root.insert("seed".into(), json!(seed));
        }
        root.insert("wall_time_ms".into(), json!(self.wall_time_ms as u64));
        serde_json::to_string_pretty(&Value::Object(root)).expect("report serializes")
    }
}

pub fn matching_json(ps: &PreferenceSystem, m: &Matching) -> Value {
    json!(m.to_names(ps).into_iter().map(|(a, b)| [a, b]).collect::<Vec<_>>())
}

pub fn edges_json(ps: &PreferenceSystem, edges: &[Edge]) -> Value {
    json!(edges
        .iter()
        .map(|&e| {
            let (a, b) = ps.edge_names(e);
            [a, b]
        })
        .collect::<Vec<_>>())
}
