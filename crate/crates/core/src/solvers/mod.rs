//! Exact solvers for `γ(D)`, `ρ(D)` and `DOM(G)`, the brute-force oracle,
//! bounds, and closed-form evaluators.

mod bounds;
mod dom;
mod domination;
mod formulas;
mod oracle;
mod packing;

use std::collections::BTreeMap;

use crate::graph::Orientation;
use crate::vertex_set::VertexSet;

pub use bounds::{dom_bounds, dom_bounds_with_partition, erdos_szekeres_bounds, multipartite_dom_bounds, BoundsReport};
pub use dom::{dom, dom_ceiling, dom_value, dom_with, DomOptions};
pub use domination::{gamma, is_dominating};
pub use formulas::{corona_dom, join_k1_check, tripartite_dom, vizing_like_check, VizingReport};
pub use oracle::{dom_oracle, ORACLE_MAX_EDGES, ORACLE_MAX_VERTICES};
pub use packing::{is_packing, packing_conflict_graph, rho};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// Dominating set or packing.
    Vertices(VertexSet),
    /// Orientation attaining `DOM`.
    Orientation(Orientation),
}

/// A computed `γ`, `ρ` or `DOM` value, the object certifying it, and search
/// statistics.
#[derive(Debug, Clone)]
pub struct DomResult {
    pub value: usize,
    pub witness: Witness,
    pub nodes_explored: u64,
    /// Counts per pruning rule (or other per-rule tallies).
    pub pruned_by: BTreeMap<&'static str, u64>,
}

impl DomResult {
    pub fn witness_set(&self) -> Option<VertexSet> {
        match &self.witness {
            Witness::Vertices(s) => Some(*s),
            Witness::Orientation(_) => None,
        }
    }

    pub fn witness_orientation(&self) -> Option<&Orientation> {
        match &self.witness {
            Witness::Orientation(o) => Some(o),
            Witness::Vertices(_) => None,
        }
    }
}
