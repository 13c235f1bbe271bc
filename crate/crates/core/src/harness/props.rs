//! Randomized invariant checks over a seeded corpus. A property passes when
//! its violation list is empty.

use std::sync::Arc;

use rand::Rng;
use rayon::prelude::*;

use crate::error::Result;
use crate::graph::{Digraph, Orientation, UndirectedGraph};
use crate::harness::corpus::{labeled_trees, random_corpus, rng};
use crate::invariants::{independence_number, is_bipartite, matching_number, subsets_of_size};
use crate::orientations::enumerate_orientations;
use crate::solvers::{dom_oracle, dom_with, gamma, is_dominating, is_packing, rho, DomOptions};
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, Copy)]
pub struct PropsOptions {
    pub seed: u64,
    pub corpus_size: usize,
    pub max_n: usize,
    pub max_edges: usize,
    pub tree_max_n: usize,
    /// Witness minimality is checked exhaustively up to this order.
    pub exhaustive_max_n: usize,
    pub dom: DomOptions,
}

impl PropsOptions {
    pub fn new(seed: u64, dom: DomOptions) -> Self {
        PropsOptions { seed, corpus_size: 200, max_n: 8, max_edges: 14, tree_max_n: 7, exhaustive_max_n: 10, dom }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyReport {
    pub name: &'static str,
    pub checked: usize,
    pub violations: Vec<String>,
}

impl PropertyReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

fn describe(g: &UndirectedGraph) -> String {
    let edges: Vec<String> = g.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect();
    format!("n={} E={{{}}}", g.n(), edges.join(","))
}

/// Runs `check` on every item; each returns the number of checks made and
/// any violation messages.
fn sweep<T: Sync>(
    name: &'static str,
    items: &[T],
    check: impl Fn(&T) -> Result<(usize, Vec<String>)> + Sync,
) -> PropertyReport {
    let results: Vec<(usize, Vec<String>)> =
        items.par_iter().map(|item| check(item).unwrap_or_else(|e| (1, vec![format!("error: {e}")]))).collect();
    let mut report = PropertyReport { name, checked: 0, violations: Vec::new() };
    for (checked, violations) in results {
        report.checked += checked;
        report.violations.extend(violations);
    }
    report
}

fn random_digraph<R: Rng>(rng: &mut R, n: usize) -> Digraph {
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.gen_bool(0.3) {
                arcs.push((u, v));
            }
        }
    }
    Digraph::new(n, &arcs).expect("generated arcs are valid")
}

fn gamma_is_minimum(d: &Digraph, value: usize) -> bool {
    value == 0 || subsets_of_size(d.n(), value - 1).all(|s| !is_dominating(d, s))
}

fn rho_is_maximum(d: &Digraph, value: usize) -> bool {
    value >= d.n() || subsets_of_size(d.n(), value + 1).all(|s| !is_packing(d, s))
}

pub fn run_props(options: &PropsOptions) -> Vec<PropertyReport> {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(options.dom.workers.max(1)).build();
    match pool {
        Ok(pool) => pool.install(|| run_props_inner(options)),
        Err(_) => run_props_inner(options),
    }
}

fn run_props_inner(options: &PropsOptions) -> Vec<PropertyReport> {
    let dom_opts = options.dom.with_workers(1);
    let dom = |g: &UndirectedGraph| dom_with(g, &dom_opts).map(|r| r.value);
    let max_edges = options.max_edges;
    let corpus = random_corpus(options.seed, options.corpus_size, options.max_n, |_| max_edges);

    let mut r = rng(options.seed ^ 0x5eed_0001);
    let splits: Vec<(UndirectedGraph, VertexSet)> = corpus
        .iter()
        .filter(|g| g.n() >= 2)
        .map(|g| {
            let full = g.vertices().bits();
            let mask = loop {
                let m = r.gen::<u64>() & full;
                if m != 0 && m != full {
                    break m;
                }
            };
            (g.clone(), VertexSet::from_bits(mask))
        })
        .collect();
    let mut digraphs: Vec<Digraph> = corpus
        .iter()
        .map(|g| {
            let bits = (0..g.edge_count()).map(|_| r.gen_bool(0.5)).collect();
            Orientation::new(Arc::new(g.clone()), bits).unwrap().to_digraph()
        })
        .collect();
    for _ in 0..options.corpus_size {
        let n = r.gen_range(1..=options.max_n);
        digraphs.push(random_digraph(&mut r, n));
    }

    let mut reports = Vec::new();

    reports.push(sweep("oracle_equivalence", &corpus, |g| {
        let (fast, slow) = (dom(g)?, dom_oracle(g)?);
        let v = if fast == slow { vec![] } else { vec![format!("{}: dom {fast} != oracle {slow}", describe(g))] };
        Ok((1, v))
    }));

    reports.push(sweep("induced_monotonicity", &corpus, |g| {
        let mut out = (0, Vec::new());
        if g.n() < 2 {
            return Ok(out);
        }
        let whole = dom(g)?;
        for v in g.vertices() {
            let mut keep = g.vertices();
            keep.remove(v);
            let part = dom(&g.induced_subgraph(keep)?.0)?;
            out.0 += 1;
            if part > whole {
                out.1.push(format!("{}: DOM(G - {v}) = {part} > DOM(G) = {whole}", describe(g)));
            }
        }
        Ok(out)
    }));

    reports.push(sweep("spanning_monotonicity", &corpus, |g| {
        let whole = dom(g)?;
        let mut out = (0, Vec::new());
        for i in 0..g.edge_count() {
            let sub = dom(&g.without_edge(i))?;
            out.0 += 1;
            if whole > sub {
                out.1.push(format!("{}: DOM(G) = {whole} > DOM(G - e{i}) = {sub}", describe(g)));
            }
        }
        Ok(out)
    }));

    reports.push(sweep("partition_bound", &splits, |(g, left)| {
        let right = g.vertices().difference(*left);
        let whole = dom(g)?;
        let sum = dom(&g.induced_subgraph(*left)?.0)? + dom(&g.induced_subgraph(right)?.0)?;
        let v = if whole <= sum {
            vec![]
        } else {
            vec![format!("{}: split {:?}: DOM(G) = {whole} > {sum}", describe(g), left.to_vec())]
        };
        Ok((1, v))
    }));

    reports.push(sweep("alpha_matching_sandwich", &corpus, |g| {
        let value = dom(g)?;
        let alpha = independence_number(g).size;
        let upper = g.n() - matching_number(g).size;
        let mut v = Vec::new();
        if value < alpha || value > upper {
            v.push(format!("{}: DOM = {value} outside [{alpha}, {upper}]", describe(g)));
        }
        if is_bipartite(g) && value != alpha {
            v.push(format!("{}: bipartite but DOM = {value} != alpha = {alpha}", describe(g)));
        }
        Ok((1, v))
    }));

    reports.push(sweep("rho_at_most_gamma", &digraphs, |d| {
        let (g, p) = (gamma(d).value, rho(d).value);
        let v = if p <= g { vec![] } else { vec![format!("{:?}: rho {p} > gamma {g}", d.arcs())] };
        Ok((1, v))
    }));

    reports.push(sweep("witness_certification", &digraphs, |d| {
        let (g, p) = (gamma(d), rho(d));
        let mut v = Vec::new();
        let gs = g.witness_set().unwrap();
        let ps = p.witness_set().unwrap();
        if gs.len() != g.value || !is_dominating(d, gs) {
            v.push(format!("{:?}: gamma witness {:?} invalid", d.arcs(), gs.to_vec()));
        }
        if ps.len() != p.value || !is_packing(d, ps) {
            v.push(format!("{:?}: rho witness {:?} invalid", d.arcs(), ps.to_vec()));
        }
        if d.n() <= options.exhaustive_max_n {
            if !gamma_is_minimum(d, g.value) {
                v.push(format!("{:?}: a smaller dominating set exists", d.arcs()));
            }
            if !rho_is_maximum(d, p.value) {
                v.push(format!("{:?}: a larger packing exists", d.arcs()));
            }
        }
        Ok((1, v))
    }));

    reports.push(sweep("dom_witness_attains_value", &corpus, |g| {
        let r = dom_with(g, &dom_opts)?;
        let o = r.witness_orientation().unwrap();
        let attained = gamma(&o.to_digraph()).value;
        let v = if attained == r.value {
            vec![]
        } else {
            vec![format!("{}: witness has gamma {attained}, DOM = {}", describe(g), r.value)]
        };
        Ok((1, v))
    }));

    let trees: Vec<UndirectedGraph> = (1..=options.tree_max_n).flat_map(labeled_trees).collect();
    reports.push(sweep("trees_rho_equals_gamma", &trees, |t| {
        let mut out = (0, Vec::new());
        for o in enumerate_orientations(t)?.iter() {
            let d = o.to_digraph();
            let (g, p) = (gamma(&d).value, rho(&d).value);
            out.0 += 1;
            if g != p {
                out.1.push(format!("{:?}: gamma {g} != rho {p}", d.arcs()));
            }
        }
        Ok(out)
    }));

    reports
}

pub fn render_props(reports: &[PropertyReport], porcelain: bool) -> String {
    let mut out = String::new();
    for r in reports {
        let status = if r.passed() { "PASS" } else { "FAIL" };
        if porcelain {
            out.push_str(&format!("{}\t{status}\t{}\t{}\n", r.name, r.checked, r.violations.len()));
        } else {
            out.push_str(&format!(
                "{:<26}  {status}  checked {:>7}  violations {}\n",
                r.name,
                r.checked,
                r.violations.len()
            ));
            for v in r.violations.iter().take(5) {
                out.push_str(&format!("    {v}\n"));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_run_is_clean() {
        let mut o = PropsOptions::new(3, DomOptions::default().with_workers(1));
        o.corpus_size = 12;
        o.tree_max_n = 4;
        let reports = run_props(&o);
        assert_eq!(reports.len(), 9);
        for r in &reports {
            assert!(r.passed(), "{}: {:?}", r.name, r.violations);
            assert!(r.checked > 0, "{}", r.name);
        }
    }
}
