//! Counting translated placements of a fixed polyedge inside the triangle.
//!
//! A placement of a fixed shape in the side-`n` grid is a translation vector
//! `(dr, dc)` under which every edge of the shape lands on an internal edge.
//! For every shape the count follows a one-parameter law `T(n - c)` in the
//! side length: the shape needs a side-`c`-ish margin before it first fits
//! (one placement at `n = c + 1`), and each extra unit of side length grows
//! the placement region like a triangular number.

use super::FixedPolyedge;
use crate::geometry::{edge_is_internal, tri_number};

/// Placement data for one shape at one side length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlacementCount {
    /// Side length.
    pub n: u32,
    /// Number of translations putting the shape fully on internal edges.
    pub count: u64,
    /// The offset `c` with `count(n) = T(n - c)` for all `n`, if the law
    /// holds over the fitted range (see [`placement_offset`]).
    pub offset: Option<u32>,
}

/// Counts the translations placing `shape` on internal edges of the side-`n`
/// grid.
pub fn placements_in_grid(shape: &FixedPolyedge, n: u32) -> u64 {
    // Normalized shapes have min row = min col = 0 and internal edges live in
    // rows and columns 0..n, so all useful translations are in 0..n × 0..n.
    let mut count = 0;
    for dr in 0..n as i32 {
        for dc in 0..n as i32 {
            let fits = shape
                .edges()
                .iter()
                .all(|e| edge_is_internal(n, e.row + dr, e.col + dc, e.orientation));
            if fits {
                count += 1;
            }
        }
    }
    count
}

/// Largest side length [`placement_offset`] fits the law over.
pub const OFFSET_FIT_MAX_N: u32 = 12;

/// Fits the law `count(n) = T(n - c)`: takes the first side length with a
/// placement as `c + 1` and demands agreement for all `n ≤ 12`. Returns
/// `None` when no placement exists by `n = 12` or some side length deviates
/// (no shape with at most [`super::census::MAX_CENSUS_EDGES`] edges does).
pub fn placement_offset(shape: &FixedPolyedge) -> Option<u32> {
    let counts: Vec<u64> = (1..=OFFSET_FIT_MAX_N)
        .map(|n| placements_in_grid(shape, n))
        .collect();
    let first = (1..=OFFSET_FIT_MAX_N).find(|&n| counts[n as usize - 1] > 0)?;
    let c = first - 1;
    for n in 1..=OFFSET_FIT_MAX_N {
        if counts[n as usize - 1] != tri_number(n as i64 - c as i64) {
            return None;
        }
    }
    Some(c)
}

/// Placement count plus fitted offset law for one shape at one side length.
pub fn placement_count(shape: &FixedPolyedge, n: u32) -> PlacementCount {
    PlacementCount {
        n,
        count: placements_in_grid(shape, n),
        offset: placement_offset(shape),
    }
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeMap;

    use super::*;
    use crate::geometry::EdgeOrientation::{FallingLR, Horizontal, RisingLR};
    use crate::polyedges::census::fixed_forbidden_census;
    use crate::polyedges::LatticeEdge;

    #[test]
    fn single_edge_placements() {
        // One internal edge of each orientation: M(n-1)/3 = T(n-1) spots.
        for orientation in [Horizontal, RisingLR, FallingLR] {
            let shape = FixedPolyedge::new([LatticeEdge::new(0, 0, orientation)]);
            assert_eq!(placement_offset(&shape), Some(1));
            for n in 1..=9 {
                assert_eq!(
                    placements_in_grid(&shape, n),
                    tri_number(n as i64 - 1),
                    "{orientation:?} at n = {n}"
                );
            }
        }
    }

    #[test]
    fn conflicting_pairs_cover_all_conflicts() {
        // Summed over the six fixed conflicting pairs, placements count every
        // conflicting edge pair of the grid: 3(n-1)².
        let pairs = fixed_forbidden_census(2).unwrap();
        for n in 1..=12u64 {
            let total: u64 = pairs
                .iter()
                .map(|shape| placements_in_grid(shape, n as u32))
                .sum();
            assert_eq!(total, 3 * (n - 1) * (n - 1), "n = {n}");
        }
    }

    #[test]
    fn pair_offsets_split_three_three() {
        // Of the six conflicting pairs, the three whose edges flank a
        // downward triangle fit from n = 2 (offset 1); the three flanking an
        // upward triangle need n = 3 (offset 2).
        let pairs = fixed_forbidden_census(2).unwrap();
        let mut offsets = BTreeMap::new();
        for shape in &pairs {
            *offsets
                .entry(placement_offset(shape).expect("pairs follow the law"))
                .or_insert(0u32) += 1;
        }
        assert_eq!(offsets, BTreeMap::from([(1, 3), (2, 3)]));
    }

    #[test]
    fn triple_offsets() {
        // 14 single-cluster triples: the downward triangle outline fits
        // first (offset 1), the upward one last (offset 3), the 12 zigzags
        // and forks in between.
        let triples = fixed_forbidden_census(3).unwrap();
        let mut offsets = BTreeMap::new();
        for shape in &triples {
            *offsets
                .entry(placement_offset(shape).expect("triples follow the law"))
                .or_insert(0u32) += 1;
        }
        assert_eq!(offsets, BTreeMap::from([(1, 1), (2, 12), (3, 1)]));
    }

    #[test]
    fn quadruple_offsets() {
        let quads = fixed_forbidden_census(4).unwrap();
        let mut offsets = BTreeMap::new();
        for shape in &quads {
            *offsets
                .entry(placement_offset(shape).expect("quadruples follow the law"))
                .or_insert(0u32) += 1;
        }
        assert_eq!(offsets, BTreeMap::from([(2, 21), (3, 15)]));
    }

    #[test]
    fn placement_count_bundles_offset() {
        let shape = FixedPolyedge::new([
            LatticeEdge::new(1, 0, Horizontal),
            LatticeEdge::new(1, 0, FallingLR),
        ]);
        let pc = placement_count(&shape, 4);
        assert_eq!(pc.n, 4);
        assert_eq!(pc.count, tri_number(3));
        assert_eq!(pc.offset, Some(1));
    }
}
