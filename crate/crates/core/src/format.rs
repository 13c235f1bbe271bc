//! Plain-text graph files.
//!
//! ```text
//! ug <n> <m>      dg <n> <m>
//! u v             u v          (arc u -> v)
//! ...             ...
//! ```
//!
//! Undirected files list each edge once with `u < v`, in canonical order.
//! Blank lines and lines starting with `#` are ignored.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Digraph, UndirectedGraph, VertexId};

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

struct Parsed {
    n: usize,
    pairs: Vec<(VertexId, VertexId, usize)>,
}

fn parse_pairs(text: &str, tag: &str) -> Result<Parsed> {
    let mut lines =
        text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or_else(|| parse_err(1, "missing header"))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 3 || fields[0] != tag {
        return Err(parse_err(header_line, format!("expected header `{tag} <n> <m>`, found `{header}`")));
    }
    let n: usize =
        fields[1].parse().map_err(|_| parse_err(header_line, format!("bad vertex count `{}`", fields[1])))?;
    let m: usize = fields[2].parse().map_err(|_| parse_err(header_line, format!("bad edge count `{}`", fields[2])))?;

    let mut pairs = Vec::with_capacity(m);
    for (line, content) in lines {
        let fields: Vec<&str> = content.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(parse_err(line, format!("expected `u v`, found `{content}`")));
        }
        let mut ends = [0usize; 2];
        for (slot, f) in ends.iter_mut().zip(&fields) {
            *slot = f.parse().map_err(|_| parse_err(line, format!("bad vertex id `{f}`")))?;
            if *slot >= n {
                return Err(parse_err(line, format!("vertex {slot} out of range for n = {n}")));
            }
        }
        pairs.push((ends[0], ends[1], line));
    }
    if pairs.len() != m {
        return Err(parse_err(header_line, format!("header declares {m} lines, found {}", pairs.len())));
    }
    Ok(Parsed { n, pairs })
}

fn attach_line(e: Error, line: usize) -> Error {
    match e {
        Error::Parse { .. } => e,
        other => parse_err(line, other.to_string()),
    }
}

pub fn parse_graph(text: &str) -> Result<UndirectedGraph> {
    let parsed = parse_pairs(text, "ug")?;
    let mut previous: Option<(VertexId, VertexId)> = None;
    for &(u, v, line) in &parsed.pairs {
        if u >= v {
            return Err(parse_err(line, format!("edge `{u} {v}` must satisfy u < v")));
        }
        if let Some(p) = previous {
            if p == (u, v) {
                return Err(parse_err(line, format!("duplicate edge `{u} {v}`")));
            }
            if p > (u, v) {
                return Err(parse_err(line, format!("edge `{u} {v}` out of canonical order")));
            }
        }
        previous = Some((u, v));
    }
    let edges: Vec<_> = parsed.pairs.iter().map(|&(u, v, _)| (u, v)).collect();
    UndirectedGraph::new(parsed.n, &edges).map_err(|e| attach_line(e, 1))
}

pub fn parse_digraph(text: &str) -> Result<Digraph> {
    let parsed = parse_pairs(text, "dg")?;
    let mut seen = std::collections::HashSet::new();
    for &(u, v, line) in &parsed.pairs {
        if u == v {
            return Err(parse_err(line, format!("self-loop at {u}")));
        }
        if !seen.insert((u, v)) {
            return Err(parse_err(line, format!("duplicate arc `{u} {v}`")));
        }
    }
    let arcs: Vec<_> = parsed.pairs.iter().map(|&(u, v, _)| (u, v)).collect();
    Digraph::new(parsed.n, &arcs).map_err(|e| attach_line(e, 1))
}

pub fn write_graph(g: &UndirectedGraph) -> String {
    let mut s = format!("ug {} {}\n", g.n(), g.edge_count());
    for &(u, v) in g.edges() {
        writeln!(s, "{u} {v}").unwrap();
    }
    s
}

pub fn write_digraph(d: &Digraph) -> String {
    let arcs = d.arcs();
    let mut s = format!("dg {} {}\n", d.n(), arcs.len());
    for (u, v) in arcs {
        writeln!(s, "{u} {v}").unwrap();
    }
    s
}

pub fn read_graph_file(path: &std::path::Path) -> Result<UndirectedGraph> {
    parse_graph(&std::fs::read_to_string(path)?)
}

pub fn read_digraph_file(path: &std::path::Path) -> Result<Digraph> {
    parse_digraph(&std::fs::read_to_string(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::*;

    #[test]
    fn graph_round_trip() {
        let g = cycle(5);
        let text = write_graph(&g);
        assert!(text.starts_with("ug 5 5\n0 1\n0 4\n"));
        assert_eq!(parse_graph(&text).unwrap(), g);
    }

    #[test]
    fn digraph_round_trip() {
        let d = Digraph::new(3, &[(2, 0), (0, 1), (1, 0)]).unwrap();
        assert_eq!(parse_digraph(&write_digraph(&d)).unwrap(), d);
    }

    #[test]
    fn comments_and_blank_lines() {
        let g = parse_graph("# triangle\nug 3 3\n\n0 1\n0 2\n1 2\n").unwrap();
        assert_eq!(g, complete(3));
    }

    fn line_of(e: Error) -> usize {
        match e {
            Error::Parse { line, .. } => line,
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn rejects_malformed_input() {
        assert_eq!(line_of(parse_graph("dg 3 0\n").unwrap_err()), 1);
        assert_eq!(line_of(parse_graph("ug 3\n").unwrap_err()), 1);
        assert_eq!(line_of(parse_graph("ug x 0\n").unwrap_err()), 1);
        assert_eq!(line_of(parse_graph("ug 3 2\n0 1\n").unwrap_err()), 1);
        assert_eq!(line_of(parse_graph("ug 3 1\n0 3\n").unwrap_err()), 2);
        assert_eq!(line_of(parse_graph("ug 3 1\n1 0\n").unwrap_err()), 2);
        assert_eq!(line_of(parse_graph("ug 3 2\n1 2\n0 1\n").unwrap_err()), 3);
        assert_eq!(line_of(parse_graph("ug 3 2\n0 1\n0 1\n").unwrap_err()), 3);
        assert_eq!(line_of(parse_graph("ug 3 1\n0 1 2\n").unwrap_err()), 2);
        assert_eq!(line_of(parse_digraph("dg 2 1\n1 1\n").unwrap_err()), 2);
        assert_eq!(line_of(parse_digraph("dg 2 2\n0 1\n0 1\n").unwrap_err()), 3);
        assert_eq!(line_of(parse_graph("").unwrap_err()), 1);
        assert!(matches!(parse_graph("ug 0 0\n"), Err(Error::Parse { .. })));
    }
}
