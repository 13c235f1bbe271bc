//! Standard graph families: paths, cycles, complete and edgeless graphs,
//! and complete multipartite graphs.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::UndirectedGraph;
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Empty(usize),
    /// Part sizes; normalized to ascending order on build.
    Multipartite(Vec<usize>),
}

impl Family {
    pub fn build(&self) -> Result<UndirectedGraph> {
        match self {
            Family::Path(n) => {
                let edges: Vec<_> = (1..*n).map(|i| (i - 1, i)).collect();
                UndirectedGraph::new(*n, &edges)
            }
            Family::Cycle(n) => {
                if *n < 3 {
                    return Err(Error::InvalidFamily(format!("cycle needs n >= 3, got {n}")));
                }
                let edges: Vec<_> = (0..*n).map(|i| (i, (i + 1) % n)).collect();
                UndirectedGraph::new(*n, &edges)
            }
            Family::Complete(n) => {
                let mut edges = Vec::new();
                for u in 0..*n {
                    for v in u + 1..*n {
                        edges.push((u, v));
                    }
                }
                UndirectedGraph::new(*n, &edges)
            }
            Family::Empty(n) => UndirectedGraph::new(*n, &[]),
            Family::Multipartite(sizes) => {
                let parts = self.parts().expect("multipartite");
                if sizes.len() < 2 {
                    return Err(Error::InvalidFamily(format!(
                        "multipartite needs at least 2 parts, got {}",
                        sizes.len()
                    )));
                }
                if sizes.contains(&0) {
                    return Err(Error::InvalidFamily("multipartite part sizes must be positive".into()));
                }
                let n: usize = sizes.iter().sum();
                if n > crate::vertex_set::MAX_VERTICES {
                    return Err(Error::TooManyVertices { n, max: crate::vertex_set::MAX_VERTICES });
                }
                let all = VertexSet::full(n);
                let mut rows = vec![VertexSet::EMPTY; n];
                for part in &parts {
                    for v in part.iter() {
                        rows[v] = all.difference(*part);
                    }
                }
                Ok(UndirectedGraph::from_rows(rows))
            }
        }
    }

    /// Vertex sets of the parts of a multipartite family, labeled part by
    /// part in ascending part-size order. `None` for other families.
    pub fn parts(&self) -> Option<Vec<VertexSet>> {
        let Family::Multipartite(sizes) = self else {
            return None;
        };
        let mut sorted = sizes.clone();
        if !sorted.windows(2).all(|w| w[0] <= w[1]) {
            log::warn!("multipartite part sizes {sizes:?} not ascending; sorting");
            sorted.sort_unstable();
        }
        let mut start = 0;
        Some(
            sorted
                .iter()
                .map(|&s| {
                    let part = (start..start + s).collect();
                    start += s;
                    part
                })
                .collect(),
        )
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Path(n) => write!(f, "path:{n}"),
            Family::Cycle(n) => write!(f, "cycle:{n}"),
            Family::Complete(n) => write!(f, "complete:{n}"),
            Family::Empty(n) => write!(f, "empty:{n}"),
            Family::Multipartite(s) => {
                let parts: Vec<String> = s.iter().map(|x| x.to_string()).collect();
                write!(f, "multi:{}", parts.join(","))
            }
        }
    }
}

pub fn path(n: usize) -> UndirectedGraph {
    Family::Path(n).build().expect("valid path order")
}

pub fn cycle(n: usize) -> UndirectedGraph {
    Family::Cycle(n).build().expect("valid cycle order")
}

pub fn complete(n: usize) -> UndirectedGraph {
    Family::Complete(n).build().expect("valid complete order")
}

pub fn empty(n: usize) -> UndirectedGraph {
    Family::Empty(n).build().expect("valid edgeless order")
}

pub fn multipartite(sizes: &[usize]) -> UndirectedGraph {
    Family::Multipartite(sizes.to_vec()).build().expect("valid part sizes")
}
