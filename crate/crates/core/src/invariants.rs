//! Classical invariants: independence, matching, covers, bipartiteness and
//! the largest induced bipartite subgraph.

use crate::error::{Error, Result};
use crate::graph::{UndirectedGraph, VertexId};
use crate::vertex_set::VertexSet;

/// Default vertex limit for [`max_induced_bipartite_order`].
pub const BIP_DEFAULT_MAX_VERTICES: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantReport {
    pub alpha: usize,
    pub alpha_prime: usize,
    pub beta: usize,
    /// `None` when the graph has an isolated vertex.
    pub beta_prime: Option<usize>,
    pub bip: usize,
    pub is_bipartite: bool,
}

impl InvariantReport {
    pub fn compute(g: &UndirectedGraph) -> Result<Self> {
        let alpha = independence_number(g).size;
        let alpha_prime = matching_number(g).size;
        let (beta, beta_prime) = cover_numbers(g);
        Ok(InvariantReport {
            alpha,
            alpha_prime,
            beta,
            beta_prime,
            bip: max_induced_bipartite_order(g)?.order(),
            is_bipartite: bipartition(g).is_some(),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndependentSet {
    pub size: usize,
    pub witness: VertexSet,
}

/// Exact independence number by branch and bound.
///
/// Branches on a vertex of maximum degree among the candidates (lowest
/// index on ties), taking it first. A greedy clique cover of the candidates
/// bounds how many more vertices can join.
pub fn independence_number(g: &UndirectedGraph) -> IndependentSet {
    let mut search = MisSearch { rows: g.rows(), best: VertexSet::EMPTY };
    search.run(VertexSet::EMPTY, g.vertices());
    IndependentSet { size: search.best.len(), witness: search.best }
}

struct MisSearch<'a> {
    rows: &'a [VertexSet],
    best: VertexSet,
}

impl MisSearch<'_> {
    fn clique_cover_bound(&self, mut candidates: VertexSet) -> usize {
        let mut cliques = 0;
        while let Some(v) = candidates.first() {
            candidates.remove(v);
            let mut common = self.rows[v].intersection(candidates);
            while let Some(w) = common.first() {
                candidates.remove(w);
                common = common.intersection(self.rows[w]);
            }
            cliques += 1;
        }
        cliques
    }

    fn run(&mut self, chosen: VertexSet, candidates: VertexSet) {
        if candidates.is_empty() {
            if chosen.len() > self.best.len() {
                self.best = chosen;
            }
            return;
        }
        if chosen.len() + self.clique_cover_bound(candidates) <= self.best.len() {
            return;
        }
        let mut pivot = candidates.first().unwrap();
        let mut pivot_degree = 0;
        for v in candidates {
            let d = self.rows[v].intersection(candidates).len();
            if d > pivot_degree {
                pivot = v;
                pivot_degree = d;
            }
        }
        if pivot_degree == 0 {
            let all = chosen.union(candidates);
            if all.len() > self.best.len() {
                self.best = all;
            }
            return;
        }
        let mut with = chosen;
        with.insert(pivot);
        self.run(with, candidates.difference(self.rows[pivot]).difference(VertexSet::singleton(pivot)));
        self.run(chosen, candidates.difference(VertexSet::singleton(pivot)));
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    pub size: usize,
    pub edges: Vec<(VertexId, VertexId)>,
}

/// Exact matching number by include/exclude branching over edges.
///
/// The branching edge joins a vertex of maximum remaining degree to its
/// lowest-index remaining neighbor; the include branch runs first. A
/// remaining vertex of degree one is always matched to its neighbor.
pub fn matching_number(g: &UndirectedGraph) -> Matching {
    let mut search = MatchingSearch { best: Vec::new() };
    let mut current = Vec::new();
    search.run(g.rows().to_vec(), &mut current);
    let mut edges = search.best;
    edges.sort_unstable();
    Matching { size: edges.len(), edges }
}

struct MatchingSearch {
    best: Vec<(VertexId, VertexId)>,
}

fn delete_vertex(rows: &mut [VertexSet], v: VertexId) {
    for w in rows[v] {
        rows[w].remove(v);
    }
    rows[v] = VertexSet::EMPTY;
}

impl MatchingSearch {
    fn run(&mut self, mut rows: Vec<VertexSet>, current: &mut Vec<(VertexId, VertexId)>) {
        let depth = current.len();
        // Degree-one vertices are safe to match greedily.
        while let Some(v) = (0..rows.len()).find(|&v| rows[v].len() == 1) {
            let u = rows[v].first().unwrap();
            current.push((v.min(u), v.max(u)));
            delete_vertex(&mut rows, v);
            delete_vertex(&mut rows, u);
        }
        let active = rows.iter().filter(|r| !r.is_empty()).count();
        let edges: usize = rows.iter().map(|r| r.len()).sum::<usize>() / 2;
        if current.len() + (active / 2).min(edges) <= self.best.len() {
            if current.len() > self.best.len() {
                self.best = current.clone();
            }
            current.truncate(depth);
            return;
        }
        let v = (0..rows.len()).max_by_key(|&v| (rows[v].len(), std::cmp::Reverse(v))).unwrap();
        if rows[v].is_empty() {
            if current.len() > self.best.len() {
                self.best = current.clone();
            }
            current.truncate(depth);
            return;
        }
        let u = rows[v].first().unwrap();

        let mut include = rows.clone();
        delete_vertex(&mut include, v);
        delete_vertex(&mut include, u);
        current.push((v.min(u), v.max(u)));
        self.run(include, current);
        current.pop();

        rows[v].remove(u);
        rows[u].remove(v);
        self.run(rows, current);
        current.truncate(depth);
    }
}

/// `(β, β′)` through the Gallai identities. `β′` is absent when some
/// vertex is isolated.
pub fn cover_numbers(g: &UndirectedGraph) -> (usize, Option<usize>) {
    let beta = g.n() - independence_number(g).size;
    let beta_prime = if g.has_isolated_vertex() { None } else { Some(g.n() - matching_number(g).size) };
    (beta, beta_prime)
}

/// Two-coloring of the subgraph induced by `within`, if it exists.
pub fn bipartition_within(g: &UndirectedGraph, within: VertexSet) -> Option<(VertexSet, VertexSet)> {
    let mut left = VertexSet::EMPTY;
    let mut right = VertexSet::EMPTY;
    let mut unseen = within;
    while let Some(root) = unseen.first() {
        left.insert(root);
        unseen.remove(root);
        let mut frontier = VertexSet::singleton(root);
        let mut side_left = true;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next = next.union(g.neighbors(v).intersection(within));
            }
            let (same, other) = if side_left { (left, right) } else { (right, left) };
            if !next.is_disjoint(same) {
                return None;
            }
            let fresh = next.difference(other);
            if side_left {
                right = right.union(fresh);
            } else {
                left = left.union(fresh);
            }
            unseen = unseen.difference(fresh);
            frontier = fresh;
            side_left = !side_left;
        }
    }
    Some((left, right))
}

/// Two-coloring of `g`, if it is bipartite.
pub fn bipartition(g: &UndirectedGraph) -> Option<(VertexSet, VertexSet)> {
    bipartition_within(g, g.vertices())
}

pub fn is_bipartite(g: &UndirectedGraph) -> bool {
    bipartition(g).is_some()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedBipartite {
    pub left: VertexSet,
    pub right: VertexSet,
}

impl InducedBipartite {
    pub fn order(&self) -> usize {
        self.left.len() + self.right.len()
    }

    pub fn vertices(&self) -> VertexSet {
        self.left.union(self.right)
    }
}

/// `bip(G)` with the default vertex limit.
pub fn max_induced_bipartite_order(g: &UndirectedGraph) -> Result<InducedBipartite> {
    max_induced_bipartite_order_capped(g, BIP_DEFAULT_MAX_VERTICES)
}

/// Largest induced bipartite subgraph, scanning vertex subsets by
/// decreasing size and stopping at the first bipartite one.
pub fn max_induced_bipartite_order_capped(g: &UndirectedGraph, max_vertices: usize) -> Result<InducedBipartite> {
    let n = g.n();
    if n > max_vertices {
        return Err(Error::InvalidParameter(format!("bip search limited to {max_vertices} vertices, graph has {n}")));
    }
    for size in (1..=n).rev() {
        for subset in subsets_of_size(n, size) {
            if let Some((left, right)) = bipartition_within(g, subset) {
                return Ok(InducedBipartite { left, right });
            }
        }
    }
    unreachable!("a single vertex is bipartite")
}

/// All `k`-subsets of `{0..n}` in increasing bitmask order.
pub fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = VertexSet> {
    let limit: u128 = 1u128 << n;
    let mut next: Option<u128> = if k <= n { Some((1u128 << k) - 1) } else { None };
    std::iter::from_fn(move || {
        let cur = next?;
        if cur >= limit {
            return None;
        }
        next = if cur == 0 {
            None
        } else {
            // Gosper's hack.
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            Some((((r ^ cur) >> 2) / c) | r)
        };
        Some(VertexSet::from_bits(cur as u64))
    })
}
