// SPDX-License-Identifier: Apache-2.0

use std::collections::BTreeMap;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::model::{Edge, Matching, Vertex};
use crate::structure::MasterListCertificate;
use crate::Instance;

/// A generated instance with names for its construction internals.
///
/// Landmarks map a symbolic name to a vertex id or, for edges, to an edge
/// key `"<a-id> <b-id>"`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionLayout {
    pub instance: Instance,
    pub landmarks: BTreeMap<String, String>,
    /// Master lists over side `A` and side `B`, when the construction has them.
    pub certificate: Option<(MasterListCertificate, MasterListCertificate)>,
    /// The construction's reference matching.
    pub reference: Matching,
}

impl ReductionLayout {
    fn lookup(&self, name: &str) -> Result<&str> {
        self.landmarks
            .get(name)
            .map(String::as_str)
            .ok_or_else(|| Error::UnknownElement(format!("landmark {name:?}")))
    }

    pub fn vertex(&self, name: &str) -> Result<Vertex> {
        let id = self.lookup(name)?;
        self.instance
            .ps
            .vertex(id)
            .ok_or_else(|| Error::UnknownElement(format!("landmark {name:?} is not a vertex")))
    }

    pub fn edge(&self, name: &str) -> Result<Edge> {
        self.instance.ps.parse_edge_key(self.lookup(name)?)
    }

    /// Every landmark resolves to a vertex or an edge of the instance.
    pub fn check_landmarks(&self) -> Result<()> {
        for (name, id) in &self.landmarks {
            let ok = if id.contains(' ') {
                self.instance.ps.parse_edge_key(id).is_ok()
            } else {
                self.instance.ps.vertex(id).is_some()
            };
            if !ok {
                return Err(Error::UnknownElement(format!("landmark {name:?} -> {id:?}")));
            }
        }
        Ok(())
    }

    /// Side-car JSON with the landmarks, the reference matching and any
    /// master lists.
    pub fn landmarks_json(&self) -> Value {
        let ps = &self.instance.ps;
        let mut out = json!({
            "landmarks": self.landmarks,
            "reference_matching": self.reference.to_names(ps).into_iter().map(|(a, b)| vec![a, b]).collect::<Vec<_>>(),
        });
        if let Some((la, lb)) = &self.certificate {
            out["master_lists"] = json!({ "A": la.names(ps), "B": lb.names(ps) });
        }
        out
    }
}

/// Reads landmarks from the side-car produced by
/// [`ReductionLayout::landmarks_json`].
pub fn parse_landmarks(text: &str) -> Result<BTreeMap<String, String>> {
    let v: Value = serde_json::from_str(text)?;
    let map = v
        .get("landmarks")
        .and_then(Value::as_object)
        .ok_or_else(|| Error::Json("missing \"landmarks\" object".into()))?;
    map.iter()
        .map(|(k, v)| {
            v.as_str()
                .map(|s| (k.clone(), s.to_string()))
                .ok_or_else(|| Error::Json(format!("landmark {k:?} is not a string")))
        })
        .collect()
}
