use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand};

use orientdom::format::{read_digraph_file, read_graph_file, write_digraph, write_graph};
use orientdom::harness::cache::{DomCache, CACHE_DIR_ENV};
use orientdom::harness::corpus::DEFAULT_SEED;
use orientdom::harness::expr::build_expr;
use orientdom::harness::props::{render_props, run_props, PropsOptions};
use orientdom::harness::verify::{all_passed, render_porcelain, render_table, run_verify, VerifyOptions};
use orientdom::invariants::{independence_number, InvariantReport};
use orientdom::orientations::{OrientationScheme, DEFAULT_EDGE_CAP};
use orientdom::products::join;
use orientdom::solvers::{dom_bounds, dom_with, gamma, rho, DomOptions, DomResult};
use orientdom::{family, Digraph, Orientation, UndirectedGraph, VertexSet};

#[derive(Parser)]
#[command(name = "orientdom", version, about = "Exact orientable domination numbers of small graphs")]
struct Cli {
    /// Refuse DOM searches on graphs with more edges than this.
    #[arg(long, global = true, default_value_t = DEFAULT_EDGE_CAP)]
    max_edges: usize,
    /// Worker threads (defaults to the number of CPUs).
    #[arg(long, global = true)]
    workers: Option<usize>,
    /// Seed for randomized corpora.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Directory holding the DOM result cache.
    #[arg(long, global = true, env = CACHE_DIR_ENV)]
    cache_dir: Option<PathBuf>,
    /// Tab-separated, line-per-record output.
    #[arg(long, global = true)]
    porcelain: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a graph from an expression such as `cart(path:3,complete:3)`.
    Construct {
        expr: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Apply a named orientation scheme and write the digraph.
    Orient {
        #[arg(long)]
        scheme: String,
        /// Comma-separated `key=value` pairs, e.g. `k=2,s=2` or `g=path:3,h=complete:2`.
        #[arg(long, default_value = "")]
        params: String,
        /// Graph file used as `g` when the scheme takes a base graph.
        #[arg(long)]
        base: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Orientable domination number DOM(G).
    Dom {
        #[arg(long)]
        graph: PathBuf,
        /// Ignore and do not update the cache.
        #[arg(long)]
        no_cache: bool,
    },
    /// Domination number of a digraph.
    Gamma {
        #[arg(long)]
        digraph: PathBuf,
    },
    /// Packing number of a digraph.
    Rho {
        #[arg(long)]
        digraph: PathBuf,
    },
    /// Lower and upper bounds on DOM(G) and the invariants behind them.
    Bounds {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Run a verification suite (bounds, corona, cartesian, prism, lex,
    /// multipartite, tripartite, counterexample or all).
    Verify { suite: String },
    /// Randomized invariant checks.
    Props {
        #[arg(long, default_value_t = 200)]
        corpus_size: usize,
    },
}

struct Ctx {
    dom: DomOptions,
    seed: u64,
    porcelain: bool,
    cache_dir: Option<PathBuf>,
}

impl Ctx {
    fn print(&self, key: &str, value: impl std::fmt::Display) {
        let sep = if self.porcelain { '\t' } else { ' ' };
        out(&format!("{key}{sep}{value}\n"));
    }
}

/// Writes to stdout; a closed pipe ends the process quietly.
fn out(text: &str) {
    let mut stdout = std::io::stdout().lock();
    if let Err(e) = stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()) {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        eprintln!("error: writing output: {e}");
        std::process::exit(2);
    }
}

fn load_graph(path: &Path) -> anyhow::Result<UndirectedGraph> {
    read_graph_file(path).with_context(|| format!("reading graph {}", path.display()))
}

fn load_digraph(path: &Path) -> anyhow::Result<Digraph> {
    read_digraph_file(path).with_context(|| format!("reading digraph {}", path.display()))
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let mut dom = DomOptions::default().with_max_edges(cli.max_edges);
    if let Some(w) = cli.workers {
        dom = dom.with_workers(w);
    }
    let ctx =
        Ctx { dom, seed: cli.seed, porcelain: cli.porcelain, cache_dir: cli.cache_dir.or_else(default_cache_dir) };
    match run(cli.command, &ctx) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn default_cache_dir() -> Option<PathBuf> {
    if let Some(xdg) = std::env::var_os("XDG_CACHE_HOME").filter(|v| !v.is_empty()) {
        return Some(PathBuf::from(xdg).join("orientdom"));
    }
    std::env::var_os("HOME").filter(|v| !v.is_empty()).map(|h| PathBuf::from(h).join(".cache").join("orientdom"))
}

/// `Ok(false)` means a check ran and failed.
fn run(command: Command, ctx: &Ctx) -> anyhow::Result<bool> {
    match command {
        Command::Construct { expr, out } => {
            let g = build_expr(&expr)?;
            emit(out.as_deref(), &write_graph(&g))?;
        }
        Command::Orient { scheme, params, base, out } => {
            let d = orient(&scheme, &params, base.as_deref(), ctx)?;
            emit(out.as_deref(), &write_digraph(&d))?;
        }
        Command::Dom { graph, no_cache } => {
            let g = load_graph(&graph)?;
            run_dom(&g, ctx, no_cache)?;
        }
        Command::Gamma { digraph } => print_set_result(&gamma(&load_digraph(&digraph)?), ctx),
        Command::Rho { digraph } => print_set_result(&rho(&load_digraph(&digraph)?), ctx),
        Command::Bounds { graph } => {
            let g = load_graph(&graph)?;
            let b = dom_bounds(&g);
            ctx.print("lower", b.lower);
            ctx.print("upper", b.upper);
            ctx.print("lower_source", &b.lower_source);
            ctx.print("upper_source", &b.upper_source);
            let inv = InvariantReport::compute(&g)?;
            ctx.print("alpha", inv.alpha);
            ctx.print("alpha_prime", inv.alpha_prime);
            ctx.print("beta", inv.beta);
            ctx.print("beta_prime", inv.beta_prime.map_or("-".to_string(), |b| b.to_string()));
            ctx.print("bip", inv.bip);
            ctx.print("bipartite", inv.is_bipartite);
        }
        Command::Verify { suite } => {
            let cases = run_verify(&suite, &VerifyOptions { dom: ctx.dom, seed: ctx.seed })?;
            if ctx.porcelain {
                out(&render_porcelain(&cases));
            } else {
                out(&render_table(&cases));
            }
            return Ok(all_passed(&cases));
        }
        Command::Props { corpus_size } => {
            let mut options = PropsOptions::new(ctx.seed, ctx.dom);
            options.corpus_size = corpus_size;
            let reports = run_props(&options);
            out(&render_props(&reports, ctx.porcelain));
            return Ok(reports.iter().all(|r| r.passed()));
        }
    }
    Ok(true)
}

fn emit(target: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match target {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            out(text);
            Ok(())
        }
    }
}

fn run_dom(g: &UndirectedGraph, ctx: &Ctx, no_cache: bool) -> anyhow::Result<()> {
    let cache = if no_cache { None } else { ctx.cache_dir.as_deref().map(DomCache::new) };
    if let Some(value) = cache.as_ref().and_then(|c| c.lookup(g)) {
        ctx.print("value", value);
        ctx.print("witness", "-");
        ctx.print("explored", 0);
        ctx.print("source", "cache");
        return Ok(());
    }
    let r = dom_with(g, &ctx.dom)?;
    ctx.print("value", r.value);
    let o = r.witness_orientation().expect("DOM witness is an orientation");
    ctx.print("witness", format_arcs(&o.to_digraph()));
    ctx.print("explored", r.nodes_explored);
    ctx.print("source", "search");
    for (rule, count) in &r.pruned_by {
        ctx.print(&format!("pruned_{rule}"), count);
    }
    if let Some(c) = cache {
        if let Err(e) = c.store(g, r.value) {
            log::warn!("could not write cache {}: {e}", c.path().display());
        }
    }
    Ok(())
}

fn print_set_result(r: &DomResult, ctx: &Ctx) {
    ctx.print("value", r.value);
    let set = r.witness_set().unwrap_or_default();
    ctx.print("witness", set.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","));
    ctx.print("explored", r.nodes_explored);
}

fn format_arcs(d: &Digraph) -> String {
    d.arcs().iter().map(|(u, v)| format!("{u}>{v}")).collect::<Vec<_>>().join(",")
}

/// Splits `k=2,g=cart(path:2,path:3),m=multi:1,2,2` into key/value pairs:
/// commas inside parentheses do not split, and a piece without `=` belongs
/// to the previous value.
fn parse_params(text: &str) -> anyhow::Result<Vec<(String, String)>> {
    let mut pieces = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, c) in text.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                pieces.push(&text[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    pieces.push(&text[start..]);
    let mut out: Vec<(String, String)> = Vec::new();
    for piece in pieces.into_iter().map(str::trim).filter(|p| !p.is_empty()) {
        match piece.split_once('=') {
            Some((k, v)) => out.push((k.trim().to_string(), v.trim().to_string())),
            None => match out.last_mut() {
                Some((_, v)) => {
                    v.push(',');
                    v.push_str(piece);
                }
                None => bail!("parameter `{piece}` is not of the form key=value"),
            },
        }
    }
    Ok(out)
}

struct Params(Vec<(String, String)>);

impl Params {
    fn get(&self, key: &str) -> Option<&str> {
        self.0.iter().rev().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    fn usize(&self, key: &str) -> anyhow::Result<usize> {
        let v = self.get(key).ok_or_else(|| anyhow!("missing parameter `{key}`"))?;
        v.parse().with_context(|| format!("parameter `{key}` must be a non-negative integer"))
    }

    fn graph(&self, key: &str) -> anyhow::Result<UndirectedGraph> {
        let v = self.get(key).ok_or_else(|| anyhow!("missing parameter `{key}`"))?;
        Ok(build_expr(v)?)
    }

    fn vertex_set(&self, key: &str) -> anyhow::Result<Option<VertexSet>> {
        let Some(v) = self.get(key) else { return Ok(None) };
        let mut set = VertexSet::EMPTY;
        for id in v.split([';', ' ']).filter(|s| !s.is_empty()) {
            set.insert(id.parse().with_context(|| format!("bad vertex `{id}` in `{key}`"))?);
        }
        Ok(Some(set))
    }
}

fn dom_orientation(g: &UndirectedGraph, ctx: &Ctx) -> anyhow::Result<Orientation> {
    Ok(dom_with(g, &ctx.dom)?.witness_orientation().cloned().expect("DOM witness is an orientation"))
}

fn orient(scheme: &str, params: &str, base: Option<&Path>, ctx: &Ctx) -> anyhow::Result<Digraph> {
    let p = Params(parse_params(params)?);
    let g_graph = || -> anyhow::Result<UndirectedGraph> {
        match base {
            Some(path) => load_graph(path),
            None => p.graph("g"),
        }
    };
    let name = scheme.strip_suffix("_orientation").unwrap_or(scheme);
    let s = match name {
        "path_join" => OrientationScheme::PathJoin { n: p.usize("n")? },
        "prism" => OrientationScheme::Prism { n: p.usize("n")? },
        "k3_box_k3" => OrientationScheme::K3BoxK3,
        "k222" => OrientationScheme::K222,
        "acyclic_lex_cycle" => OrientationScheme::AcyclicLexCycle { k: p.usize("k")?, s: p.usize("s")? },
        "corona" => {
            let (g_graph, h_graph) = (g_graph()?, p.graph("h")?);
            let g = dom_orientation(&g_graph, ctx)?;
            let h = dom_orientation(&join(&h_graph, &family::path(1)), ctx)?;
            OrientationScheme::Corona { g_graph, h_graph, g, h }
        }
        "cartesian" => {
            let (g, h) = (g_graph()?, p.graph("h")?);
            let g_f = dom_orientation(&g, ctx)?;
            let a = match p.vertex_set("a")? {
                Some(a) => a,
                None => independence_number(&h).witness,
            };
            let h_g = Orientation::from_mask(Arc::new(h), 0)?;
            OrientationScheme::Cartesian { g_f, h_g, a }
        }
        "lex" => {
            let (g, h) = (g_graph()?, p.graph("h")?);
            let h_f = dom_orientation(&h, ctx)?;
            let a = match p.vertex_set("a")? {
                Some(a) => a,
                None => independence_number(&g).witness,
            };
            OrientationScheme::Lex { g, a, h_f }
        }
        other => bail!("unknown scheme `{other}`; expected one of {}", OrientationScheme::NAMES.join(", ")),
    };
    Ok(s.apply()?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn params_split() {
        let p = parse_params("k=2, s=3").unwrap();
        assert_eq!(p, vec![("k".into(), "2".into()), ("s".into(), "3".into())]);
        let p = parse_params("g=cart(path:2,path:3),h=multi:1,2,2").unwrap();
        assert_eq!(p[0].1, "cart(path:2,path:3)");
        assert_eq!(p[1].1, "multi:1,2,2");
        assert!(parse_params("oops").is_err());
        assert!(parse_params("").unwrap().is_empty());
    }
}
