//! Brute-force `DOM(G)` used as ground truth for the real solver. It
//! deliberately shares nothing with it: plain `u64` words, every
//! orientation, every vertex subset by increasing size, no pruning.

use crate::error::{Error, Result};
use crate::graph::UndirectedGraph;

pub const ORACLE_MAX_VERTICES: usize = 12;
pub const ORACLE_MAX_EDGES: usize = 16;

pub fn dom_oracle(g: &UndirectedGraph) -> Result<usize> {
    let n = g.n();
    let edges = g.edges();
    if n > ORACLE_MAX_VERTICES || edges.len() > ORACLE_MAX_EDGES {
        return Err(Error::OracleCapExceeded { vertices: n, edges: edges.len() });
    }
    let everyone: u64 = (1u64 << n) - 1;

    let mut subsets: Vec<u64> = (1..=everyone).collect();
    subsets.sort_by_key(|s| (s.count_ones(), *s));

    let mut best = 0;
    for orientation in 0u64..(1u64 << edges.len()) {
        let mut reach = [0u64; ORACLE_MAX_VERTICES];
        for (v, r) in reach.iter_mut().enumerate().take(n) {
            *r = 1 << v;
        }
        for (i, &(a, b)) in edges.iter().enumerate() {
            if orientation >> i & 1 == 0 {
                reach[a] |= 1 << b;
            } else {
                reach[b] |= 1 << a;
            }
        }
        for &s in &subsets {
            let mut covered = 0u64;
            for (v, r) in reach.iter().enumerate().take(n) {
                if s >> v & 1 == 1 {
                    covered |= r;
                }
            }
            if covered == everyone {
                best = best.max(s.count_ones() as usize);
                break;
            }
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::*;

    #[test]
    fn oracle_examples() {
        assert_eq!(dom_oracle(&path(3)).unwrap(), 2);
        assert_eq!(dom_oracle(&cycle(4)).unwrap(), 2);
        assert_eq!(dom_oracle(&cycle(5)).unwrap(), 3);
        assert_eq!(dom_oracle(&complete(3)).unwrap(), 2);
        assert_eq!(dom_oracle(&empty(3)).unwrap(), 3);
    }

    #[test]
    fn oracle_caps() {
        assert!(matches!(dom_oracle(&complete(7)), Err(Error::OracleCapExceeded { .. })));
        assert!(matches!(dom_oracle(&empty(13)), Err(Error::OracleCapExceeded { .. })));
    }
}
