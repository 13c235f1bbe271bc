//! Digraph packings: vertex sets with no internal arcs in which no two
//! members share an in-neighbor. A packing is exactly an independent set of
//! the conflict graph joining every such forbidden pair, so the packing
//! number is that graph's independence number.

use std::collections::BTreeMap;

use super::{DomResult, Witness};
use crate::graph::{Digraph, UndirectedGraph};
use crate::invariants::independence_number;
use crate::vertex_set::VertexSet;

pub fn is_packing(d: &Digraph, p: VertexSet) -> bool {
    p.iter().all(|x| {
        let rivals = p.difference(VertexSet::singleton(x));
        d.out_neighbors(x).is_disjoint(rivals)
            && d.in_neighbors(x).iter().all(|v| d.out_neighbors(v).intersection(p).len() <= 1)
    })
}

/// Graph on `V(D)` joining two vertices that may not share a packing.
pub fn packing_conflict_graph(d: &Digraph) -> UndirectedGraph {
    let mut rows: Vec<VertexSet> = (0..d.n()).map(|v| d.out_neighbors(v).union(d.in_neighbors(v))).collect();
    for v in 0..d.n() {
        let heads = d.out_neighbors(v);
        for x in heads {
            rows[x] = rows[x].union(heads.difference(VertexSet::singleton(x)));
        }
    }
    UndirectedGraph::from_rows(rows)
}

/// Exact packing number with a maximum packing.
pub fn rho(d: &Digraph) -> DomResult {
    let conflicts = packing_conflict_graph(d);
    let best = independence_number(&conflicts);
    let mut pruned_by = BTreeMap::new();
    pruned_by.insert("conflict_edges", conflicts.edge_count() as u64);
    DomResult { value: best.size, witness: Witness::Vertices(best.witness), nodes_explored: 0, pruned_by }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_rho(d: &Digraph) -> usize {
        (0u64..1 << d.n()).map(VertexSet::from_bits).filter(|&p| is_packing(d, p)).map(|p| p.len()).max().unwrap()
    }

    #[test]
    fn basic_packings() {
        let d = Digraph::new(3, &[(0, 1), (0, 2)]).unwrap();
        assert!(is_packing(&d, VertexSet::singleton(1)));
        assert!(!is_packing(&d, [0, 1].into_iter().collect()));
        assert!(!is_packing(&d, [1, 2].into_iter().collect()));
        assert_eq!(rho(&d).value, 1);
        assert_eq!(rho(&Digraph::edgeless(4).unwrap()).value, 4);
    }

    #[test]
    fn matches_brute_force() {
        let arcs = [(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 2), (5, 4), (6, 5), (1, 6)];
        let d = Digraph::new(7, &arcs).unwrap();
        let r = rho(&d);
        assert_eq!(r.value, brute_rho(&d));
        assert!(is_packing(&d, r.witness_set().unwrap()));
    }
}
