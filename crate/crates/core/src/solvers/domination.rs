//! Exact digraph domination.
//!
//! A vertex `v` is dominated by any member of its closed in-neighborhood
//! `N⁻[v]`. The search repeatedly takes the undominated vertex with the
//! fewest remaining candidate dominators and branches over those
//! candidates, excluding each tried candidate from its later siblings.
//! Vertices of in-degree 0 can only dominate themselves and are fixed up
//! front. The lower bound is the larger of a greedy count of undominated
//! vertices with pairwise disjoint candidate sets and a coverage ratio.

use std::collections::BTreeMap;

use super::{DomResult, Witness};
use crate::graph::Digraph;
use crate::vertex_set::VertexSet;

pub fn is_dominating(d: &Digraph, s: VertexSet) -> bool {
    let covered = s.iter().fold(VertexSet::EMPTY, |acc, v| acc.union(d.closed_out(v)));
    d.vertices().is_subset(covered)
}

/// Exact domination number with a minimum dominating set.
pub fn gamma(d: &Digraph) -> DomResult {
    let mut engine = DominationEngine::new(d.n());
    engine.load(d.out_rows(), d.in_rows());
    let witness = engine.minimum(usize::MAX).expect("the whole vertex set dominates");
    let mut pruned_by = BTreeMap::new();
    pruned_by.insert("forced_sources", engine.forced.len() as u64);
    pruned_by.insert("lower_bound", engine.pruned_bound);
    pruned_by.insert("dead_end", engine.dead_ends);
    DomResult { value: witness.len(), witness: Witness::Vertices(witness), nodes_explored: engine.nodes, pruned_by }
}

/// Reusable search state. Rows are loaded once per digraph; the buffers are
/// kept so the orientation search can run millions of small instances
/// without allocating.
pub(crate) struct DominationEngine {
    n: usize,
    closed_out: Vec<VertexSet>,
    closed_in: Vec<VertexSet>,
    forced: VertexSet,
    best: VertexSet,
    best_len: usize,
    stop_at_first: bool,
    done: bool,
    pub(crate) nodes: u64,
    pub(crate) pruned_bound: u64,
    pub(crate) dead_ends: u64,
}

impl DominationEngine {
    pub(crate) fn new(n: usize) -> Self {
        DominationEngine {
            n,
            closed_out: vec![VertexSet::EMPTY; n],
            closed_in: vec![VertexSet::EMPTY; n],
            forced: VertexSet::EMPTY,
            best: VertexSet::EMPTY,
            best_len: 0,
            stop_at_first: false,
            done: false,
            nodes: 0,
            pruned_bound: 0,
            dead_ends: 0,
        }
    }

    pub(crate) fn load(&mut self, out: &[VertexSet], inn: &[VertexSet]) {
        debug_assert_eq!(out.len(), self.n);
        let mut forced = VertexSet::EMPTY;
        for v in 0..self.n {
            let me = VertexSet::singleton(v);
            self.closed_out[v] = out[v].union(me);
            self.closed_in[v] = inn[v].union(me);
            if inn[v].is_empty() {
                forced.insert(v);
            }
        }
        self.forced = forced;
    }

    fn covered_by(&self, s: VertexSet) -> VertexSet {
        s.iter().fold(VertexSet::EMPTY, |acc, v| acc.union(self.closed_out[v]))
    }

    /// Greedy dominating set: forced sources, then repeatedly the vertex
    /// covering the most undominated vertices (lowest index on ties).
    pub(crate) fn greedy(&self) -> VertexSet {
        let mut chosen = self.forced;
        let mut undominated = VertexSet::full(self.n).difference(self.covered_by(chosen));
        while !undominated.is_empty() {
            let mut pick = 0;
            let mut gain = 0;
            for v in 0..self.n {
                let g = self.closed_out[v].intersection(undominated).len();
                if g > gain {
                    gain = g;
                    pick = v;
                }
            }
            chosen.insert(pick);
            undominated = undominated.difference(self.closed_out[pick]);
        }
        chosen
    }

    /// Minimum dominating set if one of size at most `limit` exists.
    pub(crate) fn minimum(&mut self, limit: usize) -> Option<VertexSet> {
        self.solve(limit, false)
    }

    /// Some dominating set of size at most `limit`, if one exists.
    pub(crate) fn any_within(&mut self, limit: usize) -> Option<VertexSet> {
        self.solve(limit, true)
    }

    fn solve(&mut self, limit: usize, stop_at_first: bool) -> Option<VertexSet> {
        let limit = limit.min(self.n);
        if self.forced.len() > limit {
            return None;
        }
        let greedy = self.greedy();
        if greedy.len() <= limit && stop_at_first {
            return Some(greedy);
        }
        self.stop_at_first = stop_at_first;
        self.done = false;
        if greedy.len() <= limit {
            self.best = greedy;
            self.best_len = greedy.len();
        } else {
            self.best = VertexSet::EMPTY;
            self.best_len = limit + 1;
        }
        let undominated = VertexSet::full(self.n).difference(self.covered_by(self.forced));
        let allowed = VertexSet::full(self.n).difference(self.forced);
        self.branch(undominated, allowed, self.forced);
        (self.best_len <= limit).then_some(self.best)
    }

    fn lower_bound(&self, undominated: VertexSet, allowed: VertexSet) -> usize {
        let mut used = VertexSet::EMPTY;
        let mut disjoint = 0;
        for u in undominated {
            let c = self.closed_in[u].intersection(allowed);
            if c.is_disjoint(used) {
                used = used.union(c);
                disjoint += 1;
            }
        }
        let max_cover = allowed.iter().map(|v| self.closed_out[v].intersection(undominated).len()).max().unwrap_or(0);
        if max_cover == 0 {
            return usize::MAX / 2;
        }
        disjoint.max(undominated.len().div_ceil(max_cover))
    }

    fn branch(&mut self, undominated: VertexSet, allowed: VertexSet, chosen: VertexSet) {
        self.nodes += 1;
        if undominated.is_empty() {
            if chosen.len() < self.best_len {
                self.best = chosen;
                self.best_len = chosen.len();
                if self.stop_at_first {
                    self.done = true;
                }
            }
            return;
        }
        if chosen.len() + self.lower_bound(undominated, allowed) >= self.best_len {
            self.pruned_bound += 1;
            return;
        }
        let mut target = usize::MAX;
        let mut options = usize::MAX;
        for u in undominated {
            let c = self.closed_in[u].intersection(allowed).len();
            if c < options {
                options = c;
                target = u;
            }
        }
        if options == 0 {
            self.dead_ends += 1;
            return;
        }
        let candidates = self.closed_in[target].intersection(allowed);
        let mut order: [(usize, usize); 64] = [(0, 0); 64];
        let mut len = 0;
        for d in candidates {
            order[len] = (self.closed_out[d].intersection(undominated).len(), d);
            len += 1;
        }
        order[..len].sort_unstable_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        let mut allowed = allowed;
        for &(_, d) in &order[..len] {
            allowed.remove(d);
            let mut next = chosen;
            next.insert(d);
            self.branch(undominated.difference(self.closed_out[d]), allowed, next);
            if self.done {
                return;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn directed_cycle(n: usize) -> Digraph {
        let arcs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Digraph::new(n, &arcs).unwrap()
    }

    fn brute_gamma(d: &Digraph) -> usize {
        (0u64..1 << d.n()).map(VertexSet::from_bits).filter(|&s| is_dominating(d, s)).map(|s| s.len()).min().unwrap()
    }

    #[test]
    fn directed_triangle() {
        let c3 = directed_cycle(3);
        assert_eq!(gamma(&c3).value, 2);
        for pair in [[0, 1], [0, 2], [1, 2]] {
            assert!(is_dominating(&c3, pair.into_iter().collect()));
        }
        assert!(is_dominating(&c3, c3.vertices()));
    }

    #[test]
    fn edgeless() {
        let d = Digraph::edgeless(5).unwrap();
        let r = gamma(&d);
        assert_eq!(r.value, 5);
        assert_eq!(r.pruned_by["forced_sources"], 5);
    }

    #[test]
    fn directed_cycles_match_brute_force() {
        for n in 2..=9 {
            let d = directed_cycle(n);
            assert_eq!(gamma(&d).value, brute_gamma(&d), "n = {n}");
            assert_eq!(gamma(&d).value, n.div_ceil(2));
        }
    }

    #[test]
    fn witness_dominates() {
        let d = Digraph::new(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (5, 4), (0, 3)]).unwrap();
        let r = gamma(&d);
        assert!(is_dominating(&d, r.witness_set().unwrap()));
        assert_eq!(r.value, brute_gamma(&d));
    }

    #[test]
    fn decision_interface() {
        let d = directed_cycle(7);
        let mut e = DominationEngine::new(7);
        e.load(d.out_rows(), d.in_rows());
        assert!(e.any_within(3).is_none());
        let s = e.any_within(4).unwrap();
        assert!(s.len() <= 4 && is_dominating(&d, s));
        assert_eq!(e.minimum(10).unwrap().len(), 4);
    }
}
