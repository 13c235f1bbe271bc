mod common;

use common::graph;
use orientdom::family::*;
use orientdom::products::*;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cartesian_counts(g in graph(1, 5), h in graph(1, 5)) {
        let (p, map) = cartesian(&g, &h);
        prop_assert_eq!(p.n(), g.n() * h.n());
        prop_assert_eq!(p.edge_count(), g.edge_count() * h.n() + h.edge_count() * g.n());
        for x in 0..g.n() {
            for y in 0..h.n() {
                let v = map.forward(x, y);
                prop_assert_eq!(map.inverse(v), (x, y));
                prop_assert_eq!(p.degree(v), g.degree(x) + h.degree(y));
            }
        }
    }

    #[test]
    fn lexicographic_counts(g in graph(1, 5), h in graph(1, 5)) {
        let (p, _) = lexicographic(&g, &h);
        prop_assert_eq!(p.n(), g.n() * h.n());
        prop_assert_eq!(p.edge_count(), g.edge_count() * h.n() * h.n() + h.edge_count() * g.n());
    }

    #[test]
    fn cartesian_is_spanning_subgraph_of_lexicographic(g in graph(1, 5), h in graph(1, 5)) {
        let (c, _) = cartesian(&g, &h);
        let (l, _) = lexicographic(&g, &h);
        for &(u, v) in c.edges() {
            prop_assert!(l.has_edge(u, v));
        }
    }

    #[test]
    fn generalized_lex_with_constant_factor_is_lexicographic(g in graph(1, 5), h in graph(1, 4)) {
        let copies = vec![h.clone(); g.n()];
        let (gl, map) = generalized_lexicographic(&g, &copies).unwrap();
        prop_assert_eq!(&gl, &lexicographic(&g, &h).0);
        prop_assert_eq!(map.ranges().len(), g.n());
    }

    #[test]
    fn corona_counts(g in graph(1, 5), h in graph(1, 4)) {
        let (c, map) = corona(&g, &h);
        prop_assert_eq!(c.n(), g.n() * (1 + h.n()));
        prop_assert_eq!(c.edge_count(), g.edge_count() + g.n() * (h.edge_count() + h.n()));
        for u in 0..g.n() {
            for v in map.block(u) {
                prop_assert!(c.has_edge(u, v));
                prop_assert_eq!(map.owner(v), Some(u));
            }
        }
    }

    #[test]
    fn join_counts(g in graph(1, 5), h in graph(1, 5)) {
        let j = join(&g, &h);
        prop_assert_eq!(j.n(), g.n() + h.n());
        prop_assert_eq!(j.edge_count(), g.edge_count() + h.edge_count() + g.n() * h.n());
    }
}

#[test]
fn named_products() {
    assert_eq!(cartesian(&cycle(4), &complete(2)).0.edge_count(), 12);
    assert_eq!(join(&path(4), &complete(1)).edge_count(), 7);
    assert_eq!(lexicographic(&cycle(5), &empty(2)).0.edge_count(), 20);
    assert!(generalized_lexicographic(&path(3), &[path(1)]).is_err());
    assert!(try_cartesian(&complete(9), &complete(8)).is_err());
}
