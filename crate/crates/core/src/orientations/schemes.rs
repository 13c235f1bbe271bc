use std::sync::Arc;

use crate::error::{Error, Result};
use crate::family;
use crate::graph::{Digraph, Orientation, UndirectedGraph};
use crate::products::{self, ProductVertexMap};
use crate::vertex_set::VertexSet;

fn digraph_from_arcs(n: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Digraph {
    let mut out = vec![VertexSet::EMPTY; n];
    for (u, v) in arcs {
        out[u].insert(v);
    }
    Digraph::from_out_rows(out)
}

/// Orientation of `P_n + K_1` (hub last) with the path directed forward, the
/// hub pointing to odd positions and even positions pointing to the hub
/// (positions counted from 1). Its domination number is `n/2 + 1`.
pub fn path_join_orientation(n: usize) -> Result<Digraph> {
    if n < 2 || !n.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!("path_join needs an even n >= 2, got {n}")));
    }
    let hub = n;
    let path = (0..n - 1).map(|i| (i, i + 1));
    // Index i is position i + 1, so even indices are odd positions.
    let spokes = (0..n).map(|i| if i % 2 == 0 { (hub, i) } else { (i, hub) });
    Ok(digraph_from_arcs(n + 1, path.chain(spokes)))
}

/// Orientation of `G ⊙ H`: edges of `G` follow `g`; each block formed by a
/// copy `H_u` and `u` follows `h`, an orientation of `H + K_1` in which the
/// `K_1` vertex (last index) plays the role of `u`.
pub fn corona_orientation(
    g_graph: &UndirectedGraph,
    h_graph: &UndirectedGraph,
    g: &Orientation,
    h: &Orientation,
) -> Result<Digraph> {
    if **g.base() != *g_graph {
        return Err(Error::ShapeMismatch("g is not an orientation of G".into()));
    }
    let hk = products::join(h_graph, &family::path(1));
    if **h.base() != hk {
        return Err(Error::ShapeMismatch("h is not an orientation of H + K1".into()));
    }
    let (corona, map) = products::try_corona(g_graph, h_graph)?;
    let hub = h_graph.n();
    let mut arcs = Vec::with_capacity(corona.edge_count());
    for i in 0..g_graph.edge_count() {
        arcs.push(g.arc(i));
    }
    for u in 0..g_graph.n() {
        let offset = map.range(u).start;
        let place = |x: usize| if x == hub { u } else { offset + x };
        for i in 0..hk.edge_count() {
            let (a, b) = h.arc(i);
            arcs.push((place(a), place(b)));
        }
    }
    Ok(digraph_from_arcs(corona.n(), arcs))
}

/// Orientation of `G □ H`: every `G`-layer follows `g_f`; inside each
/// `H`-fiber, edges at a vertex of `a` point away from it and the rest
/// follow `h_g`. Layers `V(G) × {v}`, `v ∈ a`, receive no arcs from outside.
pub fn cartesian_orientation(g_f: &Orientation, h_g: &Orientation, a: VertexSet) -> Result<Digraph> {
    let (g, h) = (g_f.base(), h_g.base());
    h.check_independent(a)?;
    let map = ProductVertexMap::new(g.n(), h.n());
    if map.len() > crate::vertex_set::MAX_VERTICES {
        return Err(Error::TooManyVertices { n: map.len(), max: crate::vertex_set::MAX_VERTICES });
    }
    let mut arcs = Vec::new();
    for y in 0..h.n() {
        for i in 0..g.edge_count() {
            let (x1, x2) = g_f.arc(i);
            arcs.push((map.forward(x1, y), map.forward(x2, y)));
        }
    }
    for x in 0..g.n() {
        for (i, &(y1, y2)) in h.edges().iter().enumerate() {
            let (from, to) = if a.contains(y1) {
                (y1, y2)
            } else if a.contains(y2) {
                (y2, y1)
            } else {
                h_g.arc(i)
            };
            arcs.push((map.forward(x, from), map.forward(x, to)));
        }
    }
    Ok(digraph_from_arcs(map.len(), arcs))
}

/// The orientation of `K_3 □ K_3` in which each row and each column is a
/// directed triangle and every vertex has out-degree 2. Vertex `3r + c` sits
/// in row `r`, column `c`. Its domination number is 4.
pub fn k3_box_k3_orientation() -> Digraph {
    const ARCS_ONE_BASED: [(usize, usize); 18] = [
        (1, 2),
        (2, 3),
        (3, 1),
        (4, 6),
        (5, 4),
        (6, 5),
        (7, 8),
        (8, 9),
        (9, 7),
        (1, 4),
        (4, 7),
        (7, 1),
        (5, 2),
        (8, 5),
        (2, 8),
        (3, 6),
        (6, 9),
        (9, 3),
    ];
    digraph_from_arcs(9, ARCS_ONE_BASED.iter().map(|&(u, v)| (u - 1, v - 1)))
}

/// Orientation of the prism `C_n □ K_2` with both cycles directed the same
/// way and every rung directed from layer 0 to layer 1.
pub fn prism_orientation(n: usize) -> Result<Digraph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("prism needs n >= 3, got {n}")));
    }
    let map = ProductVertexMap::new(n, 2);
    let mut arcs = Vec::with_capacity(3 * n);
    for i in 0..n {
        for j in 0..2 {
            arcs.push((map.forward(i, j), map.forward((i + 1) % n, j)));
        }
        arcs.push((map.forward(i, 0), map.forward(i, 1)));
    }
    Ok(digraph_from_arcs(2 * n, arcs))
}

/// Orientation of `G ∘ H`: every copy `H^x` follows `h_f`, all edges at a
/// copy `H^u` with `u ∈ a` point away from it, and the remaining cross edges
/// point from the copy of the lower `G`-vertex to the higher one.
pub fn lex_orientation(g: &UndirectedGraph, a: VertexSet, h_f: &Orientation) -> Result<Digraph> {
    g.check_independent(a)?;
    let h = h_f.base();
    let map = ProductVertexMap::new(g.n(), h.n());
    if map.len() > crate::vertex_set::MAX_VERTICES {
        return Err(Error::TooManyVertices { n: map.len(), max: crate::vertex_set::MAX_VERTICES });
    }
    let mut arcs = Vec::new();
    for x in 0..g.n() {
        for i in 0..h.edge_count() {
            let (y1, y2) = h_f.arc(i);
            arcs.push((map.forward(x, y1), map.forward(x, y2)));
        }
    }
    for &(x1, x2) in g.edges() {
        let (from, to) = if a.contains(x2) { (x2, x1) } else { (x1, x2) };
        for y1 in 0..h.n() {
            for y2 in 0..h.n() {
                arcs.push((map.forward(from, y1), map.forward(to, y2)));
            }
        }
    }
    Ok(digraph_from_arcs(map.len(), arcs))
}

/// Acyclic orientation of `C_{2k+1} ∘ K̄_s`: arcs from every vertex of
/// `V_i` to every vertex of `V_{i+1}` for `i = 1..2k`, and from `V_1` to
/// `V_{2k+1}`. Vertex `(i - 1) * s + (j - 1)` stands for `(v_i, w_j)`.
/// Domination number `s + 2k - 2`, packing number `s + k - 1`.
pub fn acyclic_lex_cycle_orientation(k: usize, s: usize) -> Result<Digraph> {
    if k < 2 || s < 2 {
        return Err(Error::InvalidParameter(format!("need k >= 2 and s >= 2, got k = {k}, s = {s}")));
    }
    let cycle_len = 2 * k + 1;
    let map = ProductVertexMap::new(cycle_len, s);
    if map.len() > crate::vertex_set::MAX_VERTICES {
        return Err(Error::TooManyVertices { n: map.len(), max: crate::vertex_set::MAX_VERTICES });
    }
    let mut arcs = Vec::new();
    let mut join = |from: usize, to: usize| {
        for a in 0..s {
            for b in 0..s {
                arcs.push((map.forward(from, a), map.forward(to, b)));
            }
        }
    };
    for i in 0..cycle_len - 1 {
        join(i, i + 1);
    }
    join(0, cycle_len - 1);
    Ok(digraph_from_arcs(map.len(), arcs))
}

/// The orientation of `K_{2,2,2}` (parts `{0,1}`, `{2,3}`, `{4,5}`) with
/// domination number 3.
pub fn k222_orientation() -> Digraph {
    // Closed out-neighborhoods, 1-based, one row per vertex.
    const CLOSED_OUT: [[usize; 3]; 6] = [[1, 5, 6], [2, 4, 6], [1, 2, 3], [1, 4, 5], [2, 3, 5], [3, 4, 6]];
    let arcs = CLOSED_OUT
        .iter()
        .enumerate()
        .flat_map(|(u, row)| row.iter().map(|&w| w - 1).filter(move |&w| w != u).map(move |w| (u, w)));
    digraph_from_arcs(6, arcs)
}

/// A named orientation construction together with its parameters.
#[derive(Debug, Clone)]
pub enum OrientationScheme {
    PathJoin { n: usize },
    Corona { g_graph: UndirectedGraph, h_graph: UndirectedGraph, g: Orientation, h: Orientation },
    Cartesian { g_f: Orientation, h_g: Orientation, a: VertexSet },
    K3BoxK3,
    Prism { n: usize },
    Lex { g: UndirectedGraph, a: VertexSet, h_f: Orientation },
    AcyclicLexCycle { k: usize, s: usize },
    K222,
}

impl OrientationScheme {
    pub const NAMES: [&'static str; 8] = [
        "path_join_orientation",
        "corona_orientation",
        "cartesian_orientation",
        "k3_box_k3_orientation",
        "prism_orientation",
        "lex_orientation",
        "acyclic_lex_cycle_orientation",
        "k222_orientation",
    ];

    pub fn name(&self) -> &'static str {
        let i = match self {
            OrientationScheme::PathJoin { .. } => 0,
            OrientationScheme::Corona { .. } => 1,
            OrientationScheme::Cartesian { .. } => 2,
            OrientationScheme::K3BoxK3 => 3,
            OrientationScheme::Prism { .. } => 4,
            OrientationScheme::Lex { .. } => 5,
            OrientationScheme::AcyclicLexCycle { .. } => 6,
            OrientationScheme::K222 => 7,
        };
        Self::NAMES[i]
    }

    /// The undirected graph this scheme orients.
    pub fn base_graph(&self) -> Result<UndirectedGraph> {
        use crate::family::*;
        Ok(match self {
            OrientationScheme::PathJoin { n } => products::try_join(&path(*n), &path(1))?,
            OrientationScheme::Corona { g_graph, h_graph, .. } => products::try_corona(g_graph, h_graph)?.0,
            OrientationScheme::Cartesian { g_f, h_g, .. } => products::try_cartesian(g_f.base(), h_g.base())?.0,
            OrientationScheme::K3BoxK3 => products::cartesian(&complete(3), &complete(3)).0,
            OrientationScheme::Prism { n } => products::try_cartesian(&Family::Cycle(*n).build()?, &complete(2))?.0,
            OrientationScheme::Lex { g, h_f, .. } => products::try_lexicographic(g, h_f.base())?.0,
            OrientationScheme::AcyclicLexCycle { k, s } => {
                products::try_lexicographic(&Family::Cycle(2 * k + 1).build()?, &empty(*s))?.0
            }
            OrientationScheme::K222 => multipartite(&[2, 2, 2]),
        })
    }

    pub fn apply(&self) -> Result<Digraph> {
        match self {
            OrientationScheme::PathJoin { n } => path_join_orientation(*n),
            OrientationScheme::Corona { g_graph, h_graph, g, h } => corona_orientation(g_graph, h_graph, g, h),
            OrientationScheme::Cartesian { g_f, h_g, a } => cartesian_orientation(g_f, h_g, *a),
            OrientationScheme::K3BoxK3 => Ok(k3_box_k3_orientation()),
            OrientationScheme::Prism { n } => prism_orientation(*n),
            OrientationScheme::Lex { g, a, h_f } => lex_orientation(g, *a, h_f),
            OrientationScheme::AcyclicLexCycle { k, s } => acyclic_lex_cycle_orientation(*k, *s),
            OrientationScheme::K222 => Ok(k222_orientation()),
        }
    }

    /// Applies the scheme and returns the result as an orientation of
    /// [`Self::base_graph`].
    pub fn orientation(&self) -> Result<Orientation> {
        let base = Arc::new(self.base_graph()?);
        self.apply()?.to_orientation(&base)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::*;
    use crate::solvers::gamma;

    fn zero(g: &UndirectedGraph) -> Orientation {
        Orientation::from_mask(Arc::new(g.clone()), 0).unwrap()
    }

    #[test]
    fn path_join_values() {
        assert_eq!(gamma(&path_join_orientation(2).unwrap()).value, 2);
        assert_eq!(gamma(&path_join_orientation(4).unwrap()).value, 3);
        assert!(path_join_orientation(5).is_err());
        assert!(path_join_orientation(0).is_err());
        let d = path_join_orientation(4).unwrap();
        assert_eq!(d.underlying_graph().unwrap(), products::join(&path(4), &path(1)));
    }

    #[test]
    fn k3_box_k3_shape() {
        let d = k3_box_k3_orientation();
        assert!((0..9).all(|v| d.out_degree(v) == 2));
        assert_eq!(d.underlying_graph().unwrap(), products::cartesian(&complete(3), &complete(3)).0);
        let black: VertexSet = [0, 5, 6, 8].into_iter().collect();
        assert!(crate::solvers::is_dominating(&d, black));
    }

    #[test]
    fn k222_table() {
        let d = k222_orientation();
        assert_eq!(d.closed_out(0).to_vec(), vec![0, 4, 5]);
        assert_eq!(d.closed_out(3).to_vec(), vec![0, 3, 4]);
        assert!((0..6).all(|v| d.out_degree(v) == 2));
        assert_eq!(d.underlying_graph().unwrap(), multipartite(&[2, 2, 2]));
    }

    #[test]
    fn prism_shape() {
        assert!(prism_orientation(2).is_err());
        let d = prism_orientation(5).unwrap();
        assert_eq!(d.arc_count(), 15);
        assert_eq!(d.underlying_graph().unwrap(), products::cartesian(&cycle(5), &complete(2)).0);
    }

    #[test]
    fn acyclic_lex_cycle_shape() {
        assert!(acyclic_lex_cycle_orientation(1, 2).is_err());
        assert!(acyclic_lex_cycle_orientation(2, 1).is_err());
        let d = acyclic_lex_cycle_orientation(2, 2).unwrap();
        assert!(d.is_acyclic());
        assert_eq!(d.underlying_graph().unwrap(), products::lexicographic(&cycle(5), &empty(2)).0);
        assert!((0..2).all(|v| d.in_degree(v) == 0));
    }

    #[test]
    fn schemes_reject_dependent_sets() {
        let p3 = path(3);
        let k2 = zero(&complete(2));
        assert!(matches!(lex_orientation(&p3, [0, 1].into_iter().collect(), &k2), Err(Error::NotIndependent(0, 1))));
        assert!(cartesian_orientation(&zero(&p3), &k2, [0, 1].into_iter().collect()).is_err());
    }

    #[test]
    fn lex_with_point_factor_is_h() {
        let h = cycle(5);
        let hf = zero(&h);
        let d = lex_orientation(&path(1), VertexSet::singleton(0), &hf).unwrap();
        assert_eq!(d, hf.to_digraph());
    }

    #[test]
    fn corona_shape_check() {
        let g = complete(3);
        let h = path(2);
        let bad = zero(&h);
        assert!(corona_orientation(&g, &h, &zero(&g), &bad).is_err());
        let good = zero(&products::join(&h, &path(1)));
        let d = corona_orientation(&g, &h, &zero(&g), &good).unwrap();
        assert_eq!(d.underlying_graph().unwrap(), products::corona(&g, &h).0);
    }

    #[test]
    fn scheme_names_and_orientation() {
        let s = OrientationScheme::AcyclicLexCycle { k: 2, s: 3 };
        assert_eq!(s.name(), "acyclic_lex_cycle_orientation");
        let o = s.orientation().unwrap();
        assert_eq!(o.to_digraph(), s.apply().unwrap());
    }
}
