//! Orientable domination number by exhaustive orientation search.
//!
//! Orientations are visited by bitmask in contiguous chunks, possibly on
//! several workers. The incumbent is the pair (best value, smallest mask
//! attaining it), packed into one atomic word so that every worker sees a
//! consistent pair. An orientation is fully solved only if it could beat
//! the incumbent; otherwise a greedy dominating set, or failing that a
//! bounded search, shows that its domination number is too small. Once the
//! incumbent reaches the ceiling (`α(G)` for bipartite `G`, else
//! `n(G) - α'(G)`), larger masks are skipped.

use std::collections::BTreeMap;
use std::ops::Range;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use rayon::prelude::*;

use super::domination::DominationEngine;
use super::{DomResult, Witness};
use crate::error::{Error, Result};
use crate::graph::{oriented_out_rows, Orientation, UndirectedGraph};
use crate::invariants::{bipartition, independence_number, matching_number};
use crate::orientations::{check_edge_cap, shard_ranges, DEFAULT_EDGE_CAP};
use crate::vertex_set::VertexSet;

const MASK_BITS: u32 = 56;
const MASK_MAX: u64 = (1u64 << MASK_BITS) - 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DomOptions {
    pub max_edges: usize,
    pub workers: usize,
}

impl Default for DomOptions {
    fn default() -> Self {
        DomOptions {
            max_edges: DEFAULT_EDGE_CAP,
            workers: std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1),
        }
    }
}

impl DomOptions {
    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers.max(1);
        self
    }

    pub fn with_max_edges(mut self, max_edges: usize) -> Self {
        self.max_edges = max_edges;
        self
    }
}

/// Value the search may stop at, with the rule that justifies it.
pub fn dom_ceiling(g: &UndirectedGraph) -> (usize, &'static str) {
    if bipartition(g).is_some() {
        (independence_number(g).size, "bipartite: DOM = alpha")
    } else {
        (g.n() - matching_number(g).size, "n - alpha'")
    }
}

#[inline]
fn encode(value: usize, mask: u64) -> u64 {
    ((value as u64) << MASK_BITS) | (MASK_MAX - mask)
}

#[inline]
fn decode(key: u64) -> (usize, u64) {
    ((key >> MASK_BITS) as usize, MASK_MAX - (key & MASK_MAX))
}

#[derive(Default)]
struct Counters {
    examined: AtomicU64,
    greedy: AtomicU64,
    search: AtomicU64,
    solved: AtomicU64,
    ceiling_skip: AtomicU64,
    gamma_nodes: AtomicU64,
}

struct Search<'a> {
    g: &'a UndirectedGraph,
    ceiling: usize,
    best: AtomicU64,
    counters: Counters,
}

impl Search<'_> {
    fn run_chunk(&self, masks: Range<u64>) {
        let n = self.g.n();
        let mut out = vec![VertexSet::EMPTY; n];
        let mut inn = vec![VertexSet::EMPTY; n];
        oriented_out_rows(self.g, masks.start, &mut out);
        for (u, row) in out.iter().enumerate() {
            for v in row.iter() {
                inn[v].insert(u);
            }
        }
        let edges = self.g.edges();
        let mut engine = DominationEngine::new(n);
        let (mut examined, mut greedy, mut search, mut solved) = (0, 0, 0, 0);
        let mut previous = masks.start;
        for mask in masks.clone() {
            let (value, best_mask) = decode(self.best.load(Ordering::Acquire));
            if value >= self.ceiling && mask > best_mask {
                self.counters.ceiling_skip.fetch_add(masks.end - mask, Ordering::Relaxed);
                break;
            }
            let mut flips = previous ^ mask;
            while flips != 0 {
                let i = flips.trailing_zeros() as usize;
                flips &= flips - 1;
                let (u, v) = edges[i];
                let (from, to) = if out[u].contains(v) { (u, v) } else { (v, u) };
                out[from].remove(to);
                inn[to].remove(from);
                out[to].insert(from);
                inn[from].insert(to);
            }
            previous = mask;
            examined += 1;

            // Smallest domination number that would beat the incumbent.
            let needed = if mask < best_mask { value } else { value + 1 };
            engine.load(&out, &inn);
            if needed >= 2 {
                if engine.greedy().len() < needed {
                    greedy += 1;
                    continue;
                }
                if engine.any_within(needed - 1).is_some() {
                    search += 1;
                    continue;
                }
            }
            let gamma = engine.minimum(usize::MAX).expect("vertex set dominates").len();
            solved += 1;
            self.best.fetch_max(encode(gamma, mask), Ordering::AcqRel);
        }
        let c = &self.counters;
        c.examined.fetch_add(examined, Ordering::Relaxed);
        c.greedy.fetch_add(greedy, Ordering::Relaxed);
        c.search.fetch_add(search, Ordering::Relaxed);
        c.solved.fetch_add(solved, Ordering::Relaxed);
        c.gamma_nodes.fetch_add(engine.nodes, Ordering::Relaxed);
    }
}

/// `DOM(G)` with default options.
pub fn dom(g: &UndirectedGraph) -> Result<DomResult> {
    dom_with(g, &DomOptions::default())
}

/// `DOM(G)` with a witness orientation: the smallest mask among all
/// orientations attaining the maximum, regardless of worker count.
pub fn dom_with(g: &UndirectedGraph, options: &DomOptions) -> Result<DomResult> {
    check_edge_cap(g, options.max_edges)?;
    if g.edge_count() > MASK_BITS as usize {
        return Err(Error::EdgeCapExceeded { edges: g.edge_count(), cap: MASK_BITS as usize });
    }
    let total = 1u64 << g.edge_count();
    let (ceiling, _) = dom_ceiling(g);
    let search = Search { g, ceiling, best: AtomicU64::new(0), counters: Counters::default() };

    let workers = options.workers.max(1);
    let parallel = workers > 1 && total >= 1 << 12;
    if parallel {
        let chunk = (total / (workers as u64 * 32)).clamp(1, 1 << 15);
        let chunks = shard_ranges(total, total.div_ceil(chunk) as usize);
        let pool =
            rayon::ThreadPoolBuilder::new().num_threads(workers).build().map_err(|e| Error::Io(e.to_string()))?;
        pool.install(|| chunks.into_par_iter().for_each(|r| search.run_chunk(r)));
    } else {
        search.run_chunk(0..total);
    }

    let (value, mask) = decode(search.best.load(Ordering::Acquire));
    let witness = Orientation::from_mask(Arc::new(g.clone()), mask)?;
    let c = &search.counters;
    let mut pruned_by = BTreeMap::new();
    pruned_by.insert("greedy", c.greedy.load(Ordering::Relaxed));
    pruned_by.insert("bounded_search", c.search.load(Ordering::Relaxed));
    pruned_by.insert("ceiling_skip", c.ceiling_skip.load(Ordering::Relaxed));
    pruned_by.insert("solved_exactly", c.solved.load(Ordering::Relaxed));
    pruned_by.insert("gamma_nodes", c.gamma_nodes.load(Ordering::Relaxed));
    Ok(DomResult {
        value,
        witness: Witness::Orientation(witness),
        nodes_explored: c.examined.load(Ordering::Relaxed),
        pruned_by,
    })
}

/// `DOM(G)` value only, with default options.
pub fn dom_value(g: &UndirectedGraph) -> Result<usize> {
    Ok(dom(g)?.value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::*;
    use crate::solvers::gamma;

    #[test]
    fn key_order_prefers_value_then_small_mask() {
        assert!(encode(3, 10) > encode(2, 0));
        assert!(encode(3, 5) > encode(3, 10));
        assert_eq!(decode(encode(7, 12345)), (7, 12345));
        assert_eq!(decode(0), (0, MASK_MAX));
    }

    #[test]
    fn small_values() {
        assert_eq!(dom_value(&complete(2)).unwrap(), 1);
        assert_eq!(dom_value(&complete(3)).unwrap(), 2);
        assert_eq!(dom_value(&path(4)).unwrap(), 2);
        assert_eq!(dom_value(&empty(4)).unwrap(), 4);
        assert_eq!(dom_value(&path(1)).unwrap(), 1);
    }

    #[test]
    fn witness_attains_value() {
        for g in [cycle(5), complete(4), multipartite(&[1, 2, 2])] {
            let r = dom(&g).unwrap();
            let o = r.witness_orientation().unwrap();
            assert_eq!(gamma(&o.to_digraph()).value, r.value);
        }
    }

    #[test]
    fn witness_is_smallest_optimal_mask() {
        let g = cycle(5);
        let r = dom(&g).unwrap();
        let space = crate::orientations::enumerate_orientations(&g).unwrap();
        let first = space.iter().find(|o| gamma(&o.to_digraph()).value == r.value).unwrap();
        assert_eq!(r.witness_orientation().unwrap(), &first);
    }

    #[test]
    fn worker_count_does_not_change_result() {
        let g = crate::products::cartesian(&path(3), &complete(3)).0;
        let one = dom_with(&g, &DomOptions::default().with_workers(1)).unwrap();
        let four = dom_with(&g, &DomOptions::default().with_workers(4)).unwrap();
        assert_eq!(one.value, 4);
        assert_eq!(one.value, four.value);
        assert_eq!(one.witness_orientation(), four.witness_orientation());
    }

    #[test]
    fn cap_exceeded() {
        assert_eq!(dom(&complete(9)).unwrap_err(), Error::EdgeCapExceeded { edges: 36, cap: DEFAULT_EDGE_CAP });
    }
}
