//! Exact domination on graph prisms.
//!
//! For a graph `G` and a permutation `π` of its vertices, the prism `πG`
//! joins `G` to a copy `G'` by the perfect matching `v π(v)'`. `G` is a
//! universal fixer when `γ(πG) = γ(G)` for every `π`. This crate builds,
//! for any graph with a C3-free vertex, a permutation that raises the
//! domination number, and checks the reasons case by case; it also decides
//! universal-fixer status exhaustively for small graphs.

pub mod domination;
pub mod error;
pub mod graph;
pub mod permutation;
pub mod prism;
pub mod report;
pub mod separable;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use permutation::Permutation;
