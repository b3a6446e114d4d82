// SPDX-License-Identifier: Apache-2.0

//! Exact integer optimisation kernels shared by the verifiers and solvers.

pub mod hungarian;
pub mod maxflow;

pub use hungarian::max_weight_matching;
pub use maxflow::FlowNetwork;
