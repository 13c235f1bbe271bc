//! Closed-form `DOM` values and the checks built on them.

use crate::error::Result;
use crate::family::path;
use crate::graph::UndirectedGraph;
use crate::invariants::is_bipartite;
use crate::products::join;

use super::dom::{dom_with, DomOptions};

/// `DOM(G ⊙ H)`: `DOM(H)·n(G)` when adding a universal vertex to `H` does
/// not raise `DOM`, and `DOM(H)·n(G) + DOM(G)` when it does.
pub fn corona_dom(g: &UndirectedGraph, h: &UndirectedGraph, options: &DomOptions) -> Result<usize> {
    let (dom_h, dom_h_join) = join_k1_check(h, options)?;
    let base = dom_h * g.n();
    if dom_h_join == dom_h {
        Ok(base)
    } else {
        Ok(base + dom_with(g, options)?.value)
    }
}

/// `(DOM(G), DOM(G + K_1))`. The second is always the first or one more.
pub fn join_k1_check(g: &UndirectedGraph, options: &DomOptions) -> Result<(usize, usize)> {
    let dom_g = dom_with(g, options)?.value;
    let dom_join = dom_with(&join(g, &path(1)), options)?.value;
    assert!(dom_join == dom_g || dom_join == dom_g + 1, "DOM(G + K1) = {dom_join} outside {{{dom_g}, {}}}", dom_g + 1);
    Ok((dom_g, dom_join))
}

/// `DOM(K_{n1,n2,n3})`: `n3` if `n3 >= 3`, 3 for `K_{2,2,2}`, otherwise 2.
pub fn tripartite_dom(n1: usize, n2: usize, n3: usize) -> usize {
    let mut sizes = [n1, n2, n3];
    if !(n1 <= n2 && n2 <= n3) {
        log::warn!("part sizes ({n1}, {n2}, {n3}) not ascending; sorting");
        sizes.sort_unstable();
    }
    match sizes {
        [_, _, largest] if largest >= 3 => largest,
        [2, 2, 2] => 3,
        _ => 2,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VizingReport {
    pub dom_product: usize,
    pub dom_g: usize,
    pub dom_h: usize,
    pub holds: bool,
    /// At least one factor is bipartite, where the inequality is known.
    pub bipartite_factor: bool,
}

impl VizingReport {
    pub fn dom_g_times_dom_h(&self) -> usize {
        self.dom_g * self.dom_h
    }
}

/// Compares `DOM(G □ H)` with `DOM(G)·DOM(H)`. Exploratory only: a `false`
/// `holds` would be a counterexample, not a solver error.
pub fn vizing_like_check(g: &UndirectedGraph, h: &UndirectedGraph, options: &DomOptions) -> Result<VizingReport> {
    let dom_g = dom_with(g, options)?.value;
    let dom_h = dom_with(h, options)?.value;
    let (product, _) = crate::products::try_cartesian(g, h)?;
    let dom_product = dom_with(&product, options)?.value;
    Ok(VizingReport {
        dom_product,
        dom_g,
        dom_h,
        holds: dom_product >= dom_g * dom_h,
        bipartite_factor: is_bipartite(g) || is_bipartite(h),
    })
}
