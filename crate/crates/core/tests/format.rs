mod common;

use common::{graph, oriented};
use orientdom::format::*;
use orientdom::Error;
use proptest::prelude::*;

proptest! {
    #[test]
    fn graph_roundtrip(g in graph(1, 10)) {
        prop_assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
    }

    #[test]
    fn digraph_roundtrip(g in graph(1, 10), seed in any::<u64>()) {
        let d = oriented(g, seed).to_digraph();
        prop_assert_eq!(parse_digraph(&write_digraph(&d)).unwrap(), d);
    }
}

#[test]
fn rejects_malformed_input() {
    let bad =
        ["", "ug 3 1\n1 0\n", "ug 3 2\n0 1\n0 1\n", "ug 3 1\n0 3\n", "ug 3 2\n0 1\n", "xx 2 0\n", "ug 3 2\n1 2\n0 1\n"];
    for text in bad {
        assert!(parse_graph(text).is_err(), "{text:?}");
    }
    assert!(parse_digraph("dg 2 1\n0 0\n").is_err());
    assert!(matches!(parse_graph("ug 2 1\n# c\nzz\n"), Err(Error::Parse { line: 3, .. })));
}

#[test]
fn comments_and_blank_lines() {
    let g = parse_graph("# triangle\nug 3 3\n\n0 1\n0 2\n# last\n1 2\n").unwrap();
    assert_eq!(g.edge_count(), 3);
    let d = parse_digraph("dg 2 2\n0 1\n1 0\n").unwrap();
    assert_eq!(d.opposite_pair(), Some((0, 1)));
}

#[test]
fn file_roundtrip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c5.ug");
    std::fs::write(&path, write_graph(&orientdom::family::cycle(5))).unwrap();
    assert_eq!(read_graph_file(&path).unwrap(), orientdom::family::cycle(5));
    assert!(matches!(read_graph_file(&dir.path().join("missing")), Err(Error::Io(_))));
}
