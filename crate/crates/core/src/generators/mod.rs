// SPDX-License-Identifier: Apache-2.0

//! Reduction constructions and seeded random instances.

mod clique;
mod cnf;
mod layout;
mod random;
mod sat;

pub use clique::{clique_matching, clique_to_instance, CliqueVariant, ColoredGraph};
pub use cnf::CnfFormula;
pub use layout::{parse_landmarks, ReductionLayout};
pub use random::{random_instance, random_preference_system, RandomParams};
pub use sat::{assignment_matching, e_star, sat_to_instance};
