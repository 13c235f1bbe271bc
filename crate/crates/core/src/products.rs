//! Graph products and related operations.
//!
//! Vertex layouts are fixed so orientation schemes can address product
//! vertices directly:
//!
//! * Cartesian and lexicographic products: `(g, h)` has index
//!   `g * n(H) + h` (row-major, `G`-index major).
//! * Generalized lexicographic product: the copy `H_u` occupies a
//!   contiguous range, ranges ordered by `u`.
//! * Join `G + H`: vertices of `G` first, then those of `H` shifted by `n(G)`.
//! * Corona `G ⊙ H`: vertices of `G` first, then copy `H_u` at
//!   `n(G) + u * n(H) ..`.

use std::ops::Range;

use crate::error::{Error, Result};
use crate::graph::{UndirectedGraph, VertexId};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

fn check_product_order(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
    }
    Ok(())
}

/// Bijection between `V(G) × V(H)` and product vertex ids (row-major).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProductVertexMap {
    g_order: usize,
    h_order: usize,
}

impl ProductVertexMap {
    pub fn new(g_order: usize, h_order: usize) -> Self {
        ProductVertexMap { g_order, h_order }
    }

    #[inline]
    pub fn forward(&self, g: VertexId, h: VertexId) -> VertexId {
        debug_assert!(g < self.g_order && h < self.h_order);
        g * self.h_order + h
    }

    #[inline]
    pub fn inverse(&self, v: VertexId) -> (VertexId, VertexId) {
        (v / self.h_order, v % self.h_order)
    }

    pub fn g_order(&self) -> usize {
        self.g_order
    }

    pub fn h_order(&self) -> usize {
        self.h_order
    }

    pub fn len(&self) -> usize {
        self.g_order * self.h_order
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `{g} × V(H)`.
    pub fn fiber(&self, g: VertexId) -> VertexSet {
        (0..self.h_order).map(|h| self.forward(g, h)).collect()
    }

    /// `V(G) × {h}`.
    pub fn layer(&self, h: VertexId) -> VertexSet {
        (0..self.g_order).map(|g| self.forward(g, h)).collect()
    }
}

/// Vertex ranges of the substituted graphs in a generalized lexicographic
/// product (or of the copies in a corona).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralizedLexMap {
    ranges: Vec<Range<VertexId>>,
}

impl GeneralizedLexMap {
    pub fn range(&self, u: VertexId) -> Range<VertexId> {
        self.ranges[u].clone()
    }

    pub fn ranges(&self) -> &[Range<VertexId>] {
        &self.ranges
    }

    pub fn block(&self, u: VertexId) -> VertexSet {
        self.range(u).collect()
    }

    /// The `G`-vertex whose block contains `v`, if any.
    pub fn owner(&self, v: VertexId) -> Option<VertexId> {
        self.ranges.iter().position(|r| r.contains(&v))
    }
}

/// `G □ H`.
pub fn cartesian(g: &UndirectedGraph, h: &UndirectedGraph) -> (UndirectedGraph, ProductVertexMap) {
    try_cartesian(g, h).expect("Cartesian product within vertex limit")
}

pub fn try_cartesian(g: &UndirectedGraph, h: &UndirectedGraph) -> Result<(UndirectedGraph, ProductVertexMap)> {
    let map = ProductVertexMap::new(g.n(), h.n());
    check_product_order(map.len())?;
    let mut rows = vec![VertexSet::EMPTY; map.len()];
    for x in 0..g.n() {
        for y in 0..h.n() {
            let v = map.forward(x, y);
            for y2 in h.neighbors(y) {
                rows[v].insert(map.forward(x, y2));
            }
            for x2 in g.neighbors(x) {
                rows[v].insert(map.forward(x2, y));
            }
        }
    }
    Ok((UndirectedGraph::from_rows(rows), map))
}

/// `G ∘ H`.
pub fn lexicographic(g: &UndirectedGraph, h: &UndirectedGraph) -> (UndirectedGraph, ProductVertexMap) {
    try_lexicographic(g, h).expect("lexicographic product within vertex limit")
}

pub fn try_lexicographic(g: &UndirectedGraph, h: &UndirectedGraph) -> Result<(UndirectedGraph, ProductVertexMap)> {
    let map = ProductVertexMap::new(g.n(), h.n());
    check_product_order(map.len())?;
    let mut rows = vec![VertexSet::EMPTY; map.len()];
    for x in 0..g.n() {
        let mut cross = VertexSet::EMPTY;
        for x2 in g.neighbors(x) {
            cross = cross.union(map.fiber(x2));
        }
        for y in 0..h.n() {
            let v = map.forward(x, y);
            rows[v] = cross;
            for y2 in h.neighbors(y) {
                rows[v].insert(map.forward(x, y2));
            }
        }
    }
    Ok((UndirectedGraph::from_rows(rows), map))
}

/// `G ∘ 𝓗`: each vertex `u` of `G` replaced by `collection[u]`, with all
/// edges between the blocks of adjacent vertices.
pub fn generalized_lexicographic(
    g: &UndirectedGraph,
    collection: &[UndirectedGraph],
) -> Result<(UndirectedGraph, GeneralizedLexMap)> {
    if collection.len() != g.n() {
        return Err(Error::ShapeMismatch(format!("{} substituted graphs for {} vertices", collection.len(), g.n())));
    }
    let mut ranges = Vec::with_capacity(g.n());
    let mut start = 0;
    for h in collection {
        ranges.push(start..start + h.n());
        start += h.n();
    }
    check_product_order(start)?;
    let map = GeneralizedLexMap { ranges };
    let mut rows = vec![VertexSet::EMPTY; start];
    for (u, h) in collection.iter().enumerate() {
        let offset = map.ranges[u].start;
        let mut cross = VertexSet::EMPTY;
        for w in g.neighbors(u) {
            cross = cross.union(map.block(w));
        }
        for y in 0..h.n() {
            rows[offset + y] = cross.union(VertexSet::from_bits(h.neighbors(y).bits() << offset));
        }
    }
    Ok((UndirectedGraph::from_rows(rows), map))
}

/// `G ⊙ H`. The returned map gives the vertex range of each copy `H_u`;
/// the vertex `u` itself keeps index `u`.
pub fn corona(g: &UndirectedGraph, h: &UndirectedGraph) -> (UndirectedGraph, GeneralizedLexMap) {
    try_corona(g, h).expect("corona within vertex limit")
}

pub fn try_corona(g: &UndirectedGraph, h: &UndirectedGraph) -> Result<(UndirectedGraph, GeneralizedLexMap)> {
    let (ng, nh) = (g.n(), h.n());
    let total = ng * (1 + nh);
    check_product_order(total)?;
    let ranges: Vec<_> = (0..ng).map(|u| ng + u * nh..ng + (u + 1) * nh).collect();
    let map = GeneralizedLexMap { ranges };
    let mut rows = vec![VertexSet::EMPTY; total];
    for u in 0..ng {
        let block = map.block(u);
        let offset = map.ranges[u].start;
        rows[u] = g.neighbors(u).union(block);
        for y in 0..nh {
            let mut row = VertexSet::from_bits(h.neighbors(y).bits() << offset);
            row.insert(u);
            rows[offset + y] = row;
        }
    }
    Ok((UndirectedGraph::from_rows(rows), map))
}

/// `G + H`.
pub fn join(g: &UndirectedGraph, h: &UndirectedGraph) -> UndirectedGraph {
    try_join(g, h).expect("join within vertex limit")
}

pub fn try_join(g: &UndirectedGraph, h: &UndirectedGraph) -> Result<UndirectedGraph> {
    let (ng, nh) = (g.n(), h.n());
    check_product_order(ng + nh)?;
    let g_side = VertexSet::full(ng);
    let h_side = VertexSet::from_bits(VertexSet::full(nh).bits() << ng);
    let mut rows = Vec::with_capacity(ng + nh);
    for x in 0..ng {
        rows.push(g.neighbors(x).union(h_side));
    }
    for y in 0..nh {
        rows.push(VertexSet::from_bits(h.neighbors(y).bits() << ng).union(g_side));
    }
    Ok(UndirectedGraph::from_rows(rows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::*;

    #[test]
    fn cartesian_examples() {
        let (g, map) = cartesian(&path(3), &complete(3));
        assert_eq!((g.n(), g.edge_count()), (9, 15));
        assert_eq!(map.inverse(map.forward(2, 1)), (2, 1));
        assert_eq!(cartesian(&path(1), &cycle(5)).0, cycle(5));
        let (c4k2, _) = cartesian(&cycle(4), &complete(2));
        assert_eq!((c4k2.n(), c4k2.edge_count()), (8, 12));
    }

    #[test]
    fn lexicographic_examples() {
        let (g, _) = lexicographic(&cycle(5), &empty(2));
        assert_eq!((g.n(), g.edge_count()), (10, 20));
        assert_eq!(lexicographic(&complete(3), &complete(3)).0, complete(9));
        assert_eq!(lexicographic(&cycle(5), &path(1)).0, cycle(5));
    }

    #[test]
    fn generalized_lexicographic_examples() {
        let (g, map) = generalized_lexicographic(&complete(3), &[empty(1), empty(2), empty(2)]).unwrap();
        assert_eq!(g, multipartite(&[1, 2, 2]));
        assert_eq!(map.range(2), 3..5);
        assert_eq!(map.owner(4), Some(2));
        let (same, _) = generalized_lexicographic(&cycle(5), &vec![path(1); 5]).unwrap();
        assert_eq!(same, cycle(5));
        let (k23, _) = generalized_lexicographic(&complete(2), &[empty(2), empty(3)]).unwrap();
        assert_eq!(k23, multipartite(&[2, 3]));
        assert!(generalized_lexicographic(&complete(3), &[empty(1)]).is_err());
    }

    #[test]
    fn corona_examples() {
        assert_eq!(corona(&path(2), &path(1)).0.edge_count(), 3);
        let (g, map) = corona(&complete(3), &path(2));
        assert_eq!((g.n(), g.edge_count()), (9, 12));
        assert_eq!(map.range(1), 5..7);
        let (c, _) = corona(&path(1), &cycle(4));
        assert_eq!(c.edge_count(), join(&cycle(4), &path(1)).edge_count());
    }

    #[test]
    fn corona_of_edge_with_point_is_p4() {
        let (g, _) = corona(&path(2), &path(1));
        let degrees: Vec<_> = (0..4).map(|v| g.degree(v)).collect();
        assert_eq!(degrees, vec![2, 2, 1, 1]);
        assert!(crate::invariants::is_bipartite(&g));
    }

    #[test]
    fn join_examples() {
        assert_eq!(join(&empty(2), &empty(2)).edge_count(), 4);
        assert_eq!(join(&complete(2), &path(1)), complete(3));
        let g4 = join(&path(4), &path(1));
        assert_eq!(g4.edge_count(), 3 + 4);
        assert_eq!(g4.degree(4), 4);
    }

    #[test]
    fn oversize_products_rejected() {
        let k9 = complete(9);
        assert!(matches!(try_cartesian(&k9, &k9), Err(Error::TooManyVertices { .. })));
    }
}
