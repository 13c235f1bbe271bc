//! Bounds on `DOM`.

use crate::error::{Error, Result};
use crate::graph::UndirectedGraph;
use crate::invariants::{bipartition, independence_number, matching_number};
use crate::vertex_set::VertexSet;

use super::dom::{dom_with, DomOptions};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundsReport {
    pub lower: usize,
    pub upper: usize,
    pub lower_source: String,
    pub upper_source: String,
}

impl BoundsReport {
    fn new(lower: usize, lower_source: impl Into<String>, upper: usize, upper_source: impl Into<String>) -> Self {
        debug_assert!(lower <= upper);
        BoundsReport { lower, upper, lower_source: lower_source.into(), upper_source: upper_source.into() }
    }

    pub fn is_exact(&self) -> bool {
        self.lower == self.upper
    }

    pub fn contains(&self, value: usize) -> bool {
        self.lower <= value && value <= self.upper
    }
}

/// `α(G) <= DOM(G) <= n(G) - α'(G)`, collapsing to `α(G)` for bipartite `G`.
pub fn dom_bounds(g: &UndirectedGraph) -> BoundsReport {
    let alpha = independence_number(g).size;
    if bipartition(g).is_some() {
        return BoundsReport::new(alpha, "alpha(G)", alpha, "bipartite: DOM = alpha(G)");
    }
    let upper = g.n() - matching_number(g).size;
    BoundsReport::new(alpha, "alpha(G)", upper, "n(G) - alpha'(G)")
}

/// [`dom_bounds`] with the upper bound tightened by `Σ DOM(G[V_i])` over a
/// covering family of vertex sets.
pub fn dom_bounds_with_partition(
    g: &UndirectedGraph,
    parts: &[VertexSet],
    options: &DomOptions,
) -> Result<BoundsReport> {
    let covered = parts.iter().fold(VertexSet::EMPTY, |acc, p| acc.union(*p));
    if covered != g.vertices() {
        return Err(Error::InvalidParameter("vertex sets do not cover the graph".into()));
    }
    let mut report = dom_bounds(g);
    let mut sum = 0;
    for &part in parts {
        let (sub, _) = g.induced_subgraph(part)?;
        sum += dom_with(&sub, options)?.value;
    }
    if sum < report.upper {
        report.upper = sum;
        report.upper_source = "sum of DOM over covering subgraphs".into();
    }
    Ok(report)
}

const LOG_TIE_EPSILON: f64 = 1e-9;

fn ceil_outward(x: f64) -> i64 {
    let r = x.round();
    if (x - r).abs() <= LOG_TIE_EPSILON {
        r as i64
    } else {
        x.ceil() as i64
    }
}

fn floor_outward(x: f64) -> i64 {
    let r = x.round();
    if (x - r).abs() <= LOG_TIE_EPSILON {
        r as i64
    } else {
        x.floor() as i64
    }
}

/// Classical bounds on `DOM(K_n)`:
/// `log₂n − 2·log₂log₂n <= DOM(K_n) <= log₂n − log₂log₂n + 2`,
/// the lower end clamped to 1 and both ends rounded outward.
pub fn erdos_szekeres_bounds(n: usize) -> Result<BoundsReport> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("complete-graph bounds need n >= 2, got {n}")));
    }
    let l = (n as f64).log2();
    let ll = l.log2();
    let lower = ceil_outward(l - 2.0 * ll).max(1) as usize;
    let upper = floor_outward(l - ll + 2.0).max(1) as usize;
    Ok(BoundsReport::new(lower, "log2 n - 2 log2 log2 n (clamped to 1)", upper, "log2 n - log2 log2 n + 2"))
}

/// Bounds on `DOM(K_{n_1,...,n_k})`: `[n_k, max(n_k, k)]`, exact when
/// `k = 2` or `n_k >= k`.
pub fn multipartite_dom_bounds(sizes: &[usize]) -> Result<BoundsReport> {
    if sizes.len() < 2 || sizes.contains(&0) {
        return Err(Error::InvalidParameter(format!("need at least two positive parts, got {sizes:?}")));
    }
    let mut sorted = sizes.to_vec();
    if !sorted.windows(2).all(|w| w[0] <= w[1]) {
        log::warn!("part sizes {sizes:?} not ascending; sorting");
        sorted.sort_unstable();
    }
    let k = sorted.len();
    let largest = sorted[k - 1];
    Ok(if k == 2 {
        BoundsReport::new(largest, "alpha", largest, "complete bipartite: DOM = n_2")
    } else if largest >= k {
        BoundsReport::new(largest, "alpha", largest, "n_k >= k: DOM = n_k")
    } else {
        BoundsReport::new(largest, "alpha = n_k", k, "max(n_k, k)")
    })
}
