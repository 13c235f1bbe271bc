mod common;

use common::graph;
use orientdom::family::*;
use orientdom::invariants::*;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn gallai_identities(g in graph(1, 10)) {
        let r = InvariantReport::compute(&g).unwrap();
        prop_assert_eq!(r.alpha + r.beta, g.n());
        match r.beta_prime {
            Some(bp) => prop_assert_eq!(r.alpha_prime + bp, g.n()),
            None => prop_assert!(g.has_isolated_vertex()),
        }
        prop_assert!(r.alpha <= r.bip && r.bip <= g.n());
        if r.is_bipartite {
            // König: in bipartite graphs the matching number equals the vertex cover number.
            prop_assert_eq!(r.alpha_prime, r.beta);
            prop_assert_eq!(r.bip, g.n());
        }
    }

    #[test]
    fn witnesses_are_valid(g in graph(1, 12)) {
        let i = independence_number(&g);
        prop_assert_eq!(i.witness.len(), i.size);
        prop_assert!(g.check_independent(i.witness).is_ok());
        let m = matching_number(&g);
        prop_assert_eq!(m.edges.len(), m.size);
        let mut used = orientdom::VertexSet::EMPTY;
        for &(u, v) in &m.edges {
            prop_assert!(g.has_edge(u, v));
            prop_assert!(!used.contains(u) && !used.contains(v));
            used.insert(u);
            used.insert(v);
        }
        let b = max_induced_bipartite_order(&g).unwrap();
        prop_assert!(b.left.is_disjoint(b.right));
        let (sub, _) = g.induced_subgraph(b.vertices()).unwrap();
        prop_assert!(is_bipartite(&sub));
    }
}

#[test]
fn known_values() {
    let r = InvariantReport::compute(&cycle(5)).unwrap();
    assert_eq!((r.alpha, r.alpha_prime, r.beta, r.beta_prime, r.bip), (2, 2, 3, Some(3), 4));
    let r = InvariantReport::compute(&complete(4)).unwrap();
    assert_eq!((r.alpha, r.alpha_prime, r.bip), (1, 2, 2));
    assert_eq!(InvariantReport::compute(&empty(3)).unwrap().beta_prime, None);
}
