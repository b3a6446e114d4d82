// SPDX-License-Identifier: Apache-2.0

//! Preference systems, matchings and valuations.

pub mod enumerate;
mod json;
mod matching;
mod prefs;
mod valuation;

pub use matching::{blocking_edges, delta_votes, is_stable, Matching};
pub(crate) use matching::blocks;
pub use prefs::{Edge, Element, PreferenceSystem, PreferenceSystemBuilder, Side, Vertex, UNMATCHED_RANK};
pub use valuation::{is_feasible, Instance, Valuation};
