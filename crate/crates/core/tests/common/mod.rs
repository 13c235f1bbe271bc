#![allow(dead_code)]

use std::sync::Arc;

use orientdom::{Orientation, UndirectedGraph};
use proptest::prelude::*;

/// Graphs with `min_n..=max_n` vertices; each possible edge kept or not.
pub fn graph(min_n: usize, max_n: usize) -> impl Strategy<Value = UndirectedGraph> {
    (min_n..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |keep| {
            let all = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            let edges: Vec<_> = all.zip(keep).filter(|(_, k)| *k).map(|(e, _)| e).collect();
            UndirectedGraph::new(n, &edges).unwrap()
        })
    })
}

/// Like [`graph`] but with at most `max_edges` edges.
pub fn small_graph(min_n: usize, max_n: usize, max_edges: usize) -> impl Strategy<Value = UndirectedGraph> {
    graph(min_n, max_n).prop_map(move |g| {
        let edges: Vec<_> = g.edges().iter().copied().take(max_edges).collect();
        UndirectedGraph::new(g.n(), &edges).unwrap()
    })
}

pub fn oriented(g: UndirectedGraph, seed: u64) -> Orientation {
    let mask = if g.edge_count() == 0 { 0 } else { seed & ((1u64 << g.edge_count()) - 1) };
    Orientation::from_mask(Arc::new(g), mask).unwrap()
}
