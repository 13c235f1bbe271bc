//! Exact orientable domination.
//!
//! `DOM(G)` is the largest domination number over all orientations of an
//! undirected graph `G`. This crate computes it exactly for small graphs,
//! along with digraph domination `γ(D)` and packing `ρ(D)`, builds graph
//! products and the orientations that certify lower bounds on products, and
//! checks known closed forms against exhaustive search.

pub mod error;
pub mod family;
pub mod format;
pub mod graph;
pub mod harness;
pub mod invariants;
pub mod orientations;
pub mod products;
pub mod solvers;
pub mod vertex_set;

pub use error::{Error, Result};
pub use graph::{Acyclicity, Digraph, Orientation, UndirectedGraph, VertexId};
pub use vertex_set::VertexSet;
