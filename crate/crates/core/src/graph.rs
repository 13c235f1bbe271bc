//! Undirected graphs, digraphs and orientations.
//!
//! Every graph has between 1 and [`MAX_VERTICES`] vertices labeled `0..n`.
//! Adjacency is stored as one [`VertexSet`] row per vertex. Edges of an
//! [`UndirectedGraph`] are kept in canonical order, sorted by
//! `(min endpoint, max endpoint)`; orientations index edges in that order.

use std::collections::VecDeque;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// 0-based vertex index, only meaningful for the graph that issued it.
pub type VertexId = usize;

fn check_order(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
    }
    Ok(())
}

/// A simple labeled undirected graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UndirectedGraph {
    n: usize,
    edges: Vec<(VertexId, VertexId)>,
    adj: Vec<VertexSet>,
}

impl UndirectedGraph {
    /// Builds a graph from an edge list. Pairs may be given in either
    /// orientation; they are normalized and sorted.
    pub fn new(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self> {
        check_order(n)?;
        let mut adj = vec![VertexSet::EMPTY; n];
        let mut canonical = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            let (a, b) = (u.min(v), u.max(v));
            if adj[a].contains(b) {
                return Err(Error::DuplicateEdge(a, b));
            }
            adj[a].insert(b);
            adj[b].insert(a);
            canonical.push((a, b));
        }
        canonical.sort_unstable();
        Ok(UndirectedGraph { n, edges: canonical, adj })
    }

    /// Builds a graph from symmetric adjacency rows. Used by constructors
    /// that produce valid rows by construction.
    pub(crate) fn from_rows(adj: Vec<VertexSet>) -> Self {
        let n = adj.len();
        debug_assert!((1..=MAX_VERTICES).contains(&n));
        let mut edges = Vec::new();
        for (u, row) in adj.iter().enumerate() {
            debug_assert!(!row.contains(u));
            for v in row.iter().filter(|&v| v > u) {
                debug_assert!(adj[v].contains(u));
                edges.push((u, v));
            }
        }
        UndirectedGraph { n, edges, adj }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical order.
    #[inline]
    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    #[inline]
    pub fn neighbors(&self, v: VertexId) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn rows(&self) -> &[VertexSet] {
        &self.adj
    }

    #[inline]
    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    #[inline]
    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Position of the edge `{u, v}` in canonical order.
    pub fn edge_index(&self, u: VertexId, v: VertexId) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adj.iter().any(|r| r.is_empty())
    }

    /// Checks that `set` is independent, reporting the first adjacent pair.
    pub fn check_independent(&self, set: VertexSet) -> Result<()> {
        for u in set {
            if u >= self.n {
                return Err(Error::VertexOutOfRange { vertex: u, n: self.n });
            }
            if let Some(v) = self.adj[u].intersection(set).first() {
                return Err(Error::NotIndependent(u.min(v), u.max(v)));
            }
        }
        Ok(())
    }

    /// The subgraph induced by `keep`, relabeled in ascending order. The
    /// returned vector maps new labels to old ones.
    pub fn induced_subgraph(&self, keep: VertexSet) -> Result<(UndirectedGraph, Vec<VertexId>)> {
        let map = keep.intersection(self.vertices()).to_vec();
        check_order(map.len())?;
        let mut position = vec![usize::MAX; self.n];
        for (i, &v) in map.iter().enumerate() {
            position[v] = i;
        }
        let rows = map.iter().map(|&v| self.adj[v].intersection(keep).iter().map(|w| position[w]).collect()).collect();
        Ok((UndirectedGraph::from_rows(rows), map))
    }

    /// The spanning subgraph without the edge at canonical position `index`.
    pub fn without_edge(&self, index: usize) -> UndirectedGraph {
        let (u, v) = self.edges[index];
        let mut adj = self.adj.clone();
        adj[u].remove(v);
        adj[v].remove(u);
        let mut edges = self.edges.clone();
        edges.remove(index);
        UndirectedGraph { n: self.n, edges, adj }
    }

    /// The same graph viewed as a symmetric digraph with both arcs per edge.
    pub fn to_symmetric_digraph(&self) -> Digraph {
        Digraph::from_out_rows(self.adj.clone())
    }
}

impl std::fmt::Debug for UndirectedGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "UndirectedGraph(n={}, edges={:?})", self.n, self.edges)
    }
}

/// A labeled digraph without self-loops. Opposite arcs are allowed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    out: Vec<VertexSet>,
    inn: Vec<VertexSet>,
}

impl Digraph {
    pub fn new(n: usize, arcs: &[(VertexId, VertexId)]) -> Result<Self> {
        check_order(n)?;
        let mut out = vec![VertexSet::EMPTY; n];
        for &(u, v) in arcs {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if out[u].contains(v) {
                return Err(Error::DuplicateArc(u, v));
            }
            out[u].insert(v);
        }
        Ok(Digraph::from_out_rows(out))
    }

    /// Builds a digraph from loop-free out-neighborhood rows.
    pub(crate) fn from_out_rows(out: Vec<VertexSet>) -> Self {
        let n = out.len();
        let mut inn = vec![VertexSet::EMPTY; n];
        for (u, row) in out.iter().enumerate() {
            debug_assert!(!row.contains(u));
            for v in row.iter() {
                inn[v].insert(u);
            }
        }
        Digraph { n, out, inn }
    }

    /// The digraph on `n` vertices with no arcs.
    pub fn edgeless(n: usize) -> Result<Self> {
        Digraph::new(n, &[])
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(|r| r.len()).sum()
    }

    /// Arcs sorted by `(tail, head)`.
    pub fn arcs(&self) -> Vec<(VertexId, VertexId)> {
        self.out.iter().enumerate().flat_map(|(u, row)| row.iter().map(move |v| (u, v))).collect()
    }

    #[inline]
    pub fn out_neighbors(&self, v: VertexId) -> VertexSet {
        self.out[v]
    }

    #[inline]
    pub fn in_neighbors(&self, v: VertexId) -> VertexSet {
        self.inn[v]
    }

    #[inline]
    pub fn closed_out(&self, v: VertexId) -> VertexSet {
        self.out[v].union(VertexSet::singleton(v))
    }

    #[inline]
    pub fn closed_in(&self, v: VertexId) -> VertexSet {
        self.inn[v].union(VertexSet::singleton(v))
    }

    #[inline]
    pub fn out_rows(&self) -> &[VertexSet] {
        &self.out
    }

    #[inline]
    pub fn in_rows(&self) -> &[VertexSet] {
        &self.inn
    }

    #[inline]
    pub fn out_degree(&self, v: VertexId) -> usize {
        self.out[v].len()
    }

    #[inline]
    pub fn in_degree(&self, v: VertexId) -> usize {
        self.inn[v].len()
    }

    #[inline]
    pub fn has_arc(&self, u: VertexId, v: VertexId) -> bool {
        u < self.n && self.out[u].contains(v)
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// First pair of opposite arcs, if any.
    pub fn opposite_pair(&self) -> Option<(VertexId, VertexId)> {
        (0..self.n).find_map(|u| self.out[u].intersection(self.inn[u]).iter().find(|&v| v > u).map(|v| (u, v)))
    }

    /// The graph obtained by forgetting arc directions. Fails when the
    /// digraph has opposite arcs, since those would collapse to one edge.
    pub fn underlying_graph(&self) -> Result<UndirectedGraph> {
        if let Some((u, v)) = self.opposite_pair() {
            return Err(Error::OppositeArcs(u, v));
        }
        let rows = (0..self.n).map(|v| self.out[v].union(self.inn[v])).collect();
        Ok(UndirectedGraph::from_rows(rows))
    }

    /// Recovers the orientation of `base` that this digraph realizes.
    pub fn to_orientation(&self, base: &Arc<UndirectedGraph>) -> Result<Orientation> {
        if self.n != base.n() {
            return Err(Error::ShapeMismatch(format!("digraph has {} vertices, base graph has {}", self.n, base.n())));
        }
        if self.underlying_graph()? != **base {
            return Err(Error::ShapeMismatch("digraph is not an orientation of the base graph".into()));
        }
        let bits = base.edges().iter().map(|&(u, v)| !self.has_arc(u, v)).collect();
        Ok(Orientation::from_bits(Arc::clone(base), bits))
    }

    /// Topological order, or a directed cycle witnessing that none exists.
    pub fn acyclicity(&self) -> Acyclicity {
        let mut indegree: Vec<usize> = (0..self.n).map(|v| self.inn[v].len()).collect();
        let mut queue: VecDeque<VertexId> = (0..self.n).filter(|&v| indegree[v] == 0).collect();
        let mut order = Vec::with_capacity(self.n);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for v in self.out[u] {
                indegree[v] -= 1;
                if indegree[v] == 0 {
                    queue.push_back(v);
                }
            }
        }
        if order.len() == self.n {
            return Acyclicity::Acyclic(order);
        }
        // Every unprocessed vertex keeps an in-neighbor among the unprocessed
        // ones, so walking backwards along in-arcs must revisit a vertex.
        let done: VertexSet = order.iter().copied().collect();
        let remaining = self.vertices().difference(done);
        let start = remaining.first().expect("unprocessed vertex exists");
        let mut position = vec![usize::MAX; self.n];
        let mut walk = Vec::new();
        let mut v = start;
        while position[v] == usize::MAX {
            position[v] = walk.len();
            walk.push(v);
            v = self.inn[v].intersection(remaining).first().expect("remaining vertex has a remaining in-neighbor");
        }
        let mut cycle = walk[position[v]..].to_vec();
        cycle.reverse();
        Acyclicity::Cycle(cycle)
    }

    pub fn is_acyclic(&self) -> bool {
        matches!(self.acyclicity(), Acyclicity::Acyclic(_))
    }
}

impl std::fmt::Debug for Digraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Digraph(n={}, arcs={:?})", self.n, self.arcs())
    }
}

/// Result of an acyclicity test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Acyclicity {
    /// Every vertex exactly once; every arc goes forward.
    Acyclic(Vec<VertexId>),
    /// Vertices of a directed cycle, each with an arc to the next and the
    /// last with an arc back to the first.
    Cycle(Vec<VertexId>),
}

/// One direction bit per edge of `base`, in canonical edge order.
/// Bit 0 orients `{u, v}` (u < v) as `u -> v`, bit 1 as `v -> u`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Orientation {
    base: Arc<UndirectedGraph>,
    bits: Vec<bool>,
}

impl Orientation {
    pub fn new(base: Arc<UndirectedGraph>, bits: Vec<bool>) -> Result<Self> {
        if bits.len() != base.edge_count() {
            return Err(Error::ShapeMismatch(format!("{} direction bits for {} edges", bits.len(), base.edge_count())));
        }
        Ok(Orientation { base, bits })
    }

    fn from_bits(base: Arc<UndirectedGraph>, bits: Vec<bool>) -> Self {
        debug_assert_eq!(bits.len(), base.edge_count());
        Orientation { base, bits }
    }

    /// Orientation whose bit `i` is bit `i` of `mask`. Requires fewer than
    /// 64 edges.
    pub fn from_mask(base: Arc<UndirectedGraph>, mask: u64) -> Result<Self> {
        let m = base.edge_count();
        if m >= 64 || (mask >> m) != 0 {
            return Err(Error::ShapeMismatch(format!("mask {mask} does not fit {m} edges")));
        }
        let bits = (0..m).map(|i| (mask >> i) & 1 == 1).collect();
        Ok(Orientation { base, bits })
    }

    pub fn base(&self) -> &Arc<UndirectedGraph> {
        &self.base
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    /// Bitmask form, available when the base has fewer than 64 edges.
    pub fn mask(&self) -> Option<u64> {
        if self.bits.len() >= 64 {
            return None;
        }
        Some(self.bits.iter().enumerate().fold(0u64, |acc, (i, &b)| acc | ((b as u64) << i)))
    }

    /// The arc assigned to the edge at canonical position `index`.
    pub fn arc(&self, index: usize) -> (VertexId, VertexId) {
        let (u, v) = self.base.edges()[index];
        if self.bits[index] {
            (v, u)
        } else {
            (u, v)
        }
    }

    pub fn to_digraph(&self) -> Digraph {
        Digraph::from_out_rows(out_rows_for_mask_bits(&self.base, |i| self.bits[i]))
    }
}

impl std::fmt::Debug for Orientation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let bits: String = self.bits.iter().map(|&b| if b { '1' } else { '0' }).collect();
        write!(f, "Orientation(n={}, bits={})", self.base.n(), bits)
    }
}

fn out_rows_for_mask_bits(base: &UndirectedGraph, bit: impl Fn(usize) -> bool) -> Vec<VertexSet> {
    let mut out = vec![VertexSet::EMPTY; base.n()];
    for (i, &(u, v)) in base.edges().iter().enumerate() {
        if bit(i) {
            out[v].insert(u);
        } else {
            out[u].insert(v);
        }
    }
    out
}

/// Out-neighborhood rows of the orientation of `base` encoded by `mask`.
/// Hot path for the orientation search; requires fewer than 64 edges.
pub(crate) fn oriented_out_rows(base: &UndirectedGraph, mask: u64, out: &mut [VertexSet]) {
    out.fill(VertexSet::EMPTY);
    for (i, &(u, v)) in base.edges().iter().enumerate() {
        if (mask >> i) & 1 == 1 {
            out[v].insert(u);
        } else {
            out[u].insert(v);
        }
    }
}
