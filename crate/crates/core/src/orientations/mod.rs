//! Enumeration of all orientations of a graph, and the concrete orientation
//! constructions used to certify lower bounds.

mod schemes;

use std::ops::Range;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graph::{Orientation, UndirectedGraph};

pub use schemes::*;

/// Default limit on the edge count of graphs whose orientations are
/// enumerated exhaustively.
pub const DEFAULT_EDGE_CAP: usize = 22;

/// No override may go past this: masks are `u64` and 2^63 orientations is
/// far beyond any feasible search anyway.
pub const HARD_EDGE_LIMIT: usize = 63;

/// The `2^|E|` orientations of a graph, addressed by bitmask.
#[derive(Debug, Clone)]
pub struct OrientationSpace {
    base: Arc<UndirectedGraph>,
}

impl OrientationSpace {
    pub fn base(&self) -> &Arc<UndirectedGraph> {
        &self.base
    }

    pub fn len(&self) -> u64 {
        1u64 << self.base.edge_count()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// All orientations in increasing bitmask order.
    pub fn iter(&self) -> impl Iterator<Item = Orientation> + '_ {
        self.iter_range(0..self.len())
    }

    pub fn iter_range(&self, masks: Range<u64>) -> impl Iterator<Item = Orientation> + '_ {
        masks.map(move |m| Orientation::from_mask(Arc::clone(&self.base), m).expect("mask in range"))
    }

    /// Splits the mask space into at most `count` contiguous, non-empty,
    /// ascending ranges that cover it exactly.
    pub fn shards(&self, count: usize) -> Vec<Range<u64>> {
        shard_ranges(self.len(), count)
    }
}

pub(crate) fn shard_ranges(total: u64, count: usize) -> Vec<Range<u64>> {
    let count = (count.max(1) as u64).min(total);
    let base = total / count;
    let extra = total % count;
    let mut start = 0;
    (0..count)
        .map(|i| {
            let len = base + u64::from(i < extra);
            let r = start..start + len;
            start += len;
            r
        })
        .collect()
}

pub(crate) fn check_edge_cap(g: &UndirectedGraph, cap: usize) -> Result<()> {
    let edges = g.edge_count();
    if edges > cap.min(HARD_EDGE_LIMIT) {
        return Err(Error::EdgeCapExceeded { edges, cap: cap.min(HARD_EDGE_LIMIT) });
    }
    Ok(())
}

/// Orientation space of `g` under the default edge cap.
pub fn enumerate_orientations(g: &UndirectedGraph) -> Result<OrientationSpace> {
    enumerate_orientations_capped(g, DEFAULT_EDGE_CAP)
}

pub fn enumerate_orientations_capped(g: &UndirectedGraph, cap: usize) -> Result<OrientationSpace> {
    check_edge_cap(g, cap)?;
    Ok(OrientationSpace { base: Arc::new(g.clone()) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::*;
    use std::collections::HashSet;

    #[test]
    fn counts() {
        assert_eq!(enumerate_orientations(&complete(3)).unwrap().iter().count(), 8);
        assert_eq!(enumerate_orientations(&path(2)).unwrap().iter().count(), 2);
        let empty = enumerate_orientations(&empty(5)).unwrap();
        let only: Vec<_> = empty.iter().collect();
        assert_eq!(only.len(), 1);
        assert_eq!(only[0].to_digraph().arc_count(), 0);
    }

    #[test]
    fn cap_enforced() {
        let k7 = complete(7);
        assert!(enumerate_orientations(&k7).is_ok());
        assert!(matches!(enumerate_orientations_capped(&k7, 20), Err(Error::EdgeCapExceeded { edges: 21, cap: 20 })));
        assert!(enumerate_orientations(&complete(8)).is_err());
        assert!(enumerate_orientations_capped(&complete(8), 28).is_ok());
    }

    #[test]
    fn shards_cover_space() {
        let space = enumerate_orientations(&cycle(5)).unwrap();
        for k in [1, 3, 7, 32, 100] {
            let shards = space.shards(k);
            assert!(shards.len() <= k);
            assert_eq!(shards.first().unwrap().start, 0);
            assert_eq!(shards.last().unwrap().end, 32);
            for w in shards.windows(2) {
                assert_eq!(w[0].end, w[1].start);
            }
            assert!(shards.iter().all(|r| !r.is_empty()));
        }
    }

    #[test]
    fn distinct_orientations_up_to_twelve_edges() {
        for g in [cycle(6), complete(4), crate::products::cartesian(&cycle(4), &complete(2)).0] {
            let space = enumerate_orientations(&g).unwrap();
            let masks: HashSet<u64> = space.iter().map(|o| o.mask().unwrap()).collect();
            assert_eq!(masks.len() as u64, 1u64 << g.edge_count());
            let digraphs: HashSet<_> = space.iter().map(|o| o.to_digraph()).collect();
            assert_eq!(digraphs.len() as u64, 1u64 << g.edge_count());
        }
    }
}
