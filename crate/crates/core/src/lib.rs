//! Monophonic-convexity toolkit: graphs, convexity operators, prime-part
//! decomposition, and exact/polynomial rank solvers.

pub mod convexity;
pub mod decomposition;
pub mod error;
pub mod gadgets;
pub mod graph;
pub mod rank;
pub mod selftest;
pub mod tree_dp;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
