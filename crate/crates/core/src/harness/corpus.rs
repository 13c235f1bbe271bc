//! Seeded random graph corpora.

use rand::seq::index::sample;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::graph::UndirectedGraph;

pub const DEFAULT_SEED: u64 = 0x0D0_2024;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A uniformly labeled graph on `n` vertices with exactly `m` edges.
pub fn random_graph_with_edges<R: Rng>(rng: &mut R, n: usize, m: usize) -> UndirectedGraph {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let m = m.min(pairs.len());
    let mut edges: Vec<_> = sample(rng, pairs.len(), m).into_iter().map(|i| pairs[i]).collect();
    edges.sort_unstable();
    UndirectedGraph::new(n, &edges).expect("sampled edges are valid")
}

/// `count` graphs with `1 <= n <= max_n` and at most `max_edges(n)` edges,
/// order and size drawn uniformly.
pub fn random_corpus(
    seed: u64,
    count: usize,
    max_n: usize,
    max_edges: impl Fn(usize) -> usize,
) -> Vec<UndirectedGraph> {
    let mut rng = rng(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=max_n);
            let cap = max_edges(n).min(n * (n - 1) / 2);
            let m = rng.gen_range(0..=cap);
            random_graph_with_edges(&mut rng, n, m)
        })
        .collect()
}

/// Every labeled tree on `n` vertices, decoded from Prüfer sequences.
pub fn labeled_trees(n: usize) -> Vec<UndirectedGraph> {
    match n {
        0 => return Vec::new(),
        1 => return vec![UndirectedGraph::new(1, &[]).unwrap()],
        2 => return vec![UndirectedGraph::new(2, &[(0, 1)]).unwrap()],
        _ => {}
    }
    let len = n - 2;
    let total = n.pow(len as u32);
    let mut trees = Vec::with_capacity(total);
    let mut seq = vec![0usize; len];
    for code in 0..total {
        let mut c = code;
        for s in seq.iter_mut() {
            *s = c % n;
            c /= n;
        }
        trees.push(prufer_decode(n, &seq));
    }
    trees
}

fn prufer_decode(n: usize, seq: &[usize]) -> UndirectedGraph {
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &s in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf.min(s), leaf.max(s)));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges.sort_unstable();
    UndirectedGraph::new(n, &edges).unwrap()
}
