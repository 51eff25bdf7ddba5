//! Exhaustive enumeration of small polyedges.
//!
//! Shapes are grown edge by edge: every connected `k`-edge shape arises from
//! some connected `(k-1)`-edge shape by attaching one edge at a shared
//! endpoint (remove a leaf of a spanning tree of the edge-incidence graph to
//! see why), so breadth-first growth over free canonical forms enumerates
//! every free class exactly once per level.

use std::collections::BTreeSet;

use super::{edges_at_vertex, FixedPolyedge, FreePolyedge, LatticeEdge};
use crate::geometry::EdgeOrientation;
use crate::Error;

/// Largest polyedge size the census functions enumerate. The growth search
/// itself has no intrinsic limit; the guard keeps accidental huge requests
/// from running for hours.
pub const MAX_CENSUS_EDGES: usize = 6;

fn size_guard(k: usize, min: usize) -> Result<(), Error> {
    if k < min || k > MAX_CENSUS_EDGES {
        return Err(Error::EdgeCountGuard {
            k,
            min,
            max: MAX_CENSUS_EDGES,
        });
    }
    Ok(())
}

/// All free polyedges with `k` edges, sorted by canonical form.
///
/// The counts for `k = 1..=5` are 1, 3, 12, 60, 375.
pub fn enumerate_free_polyedges(k: usize) -> Result<Vec<FreePolyedge>, Error> {
    size_guard(k, 1)?;
    let seed = FixedPolyedge::new([LatticeEdge::new(0, 0, EdgeOrientation::Horizontal)]);
    let mut level: BTreeSet<FixedPolyedge> = BTreeSet::from([seed.free_canonical()]);
    for _ in 2..=k {
        let mut next = BTreeSet::new();
        for shape in &level {
            for (row, col) in shape.vertex_set() {
                for candidate in edges_at_vertex(row, col) {
                    if !shape.contains(candidate) {
                        let mut edges = shape.edges().to_vec();
                        edges.push(candidate);
                        next.insert(FixedPolyedge::new(edges).free_canonical());
                    }
                }
            }
        }
        level = next;
    }
    Ok(level
        .into_iter()
        .map(|canonical| FreePolyedge::from_fixed(&canonical))
        .collect())
}

/// The free polyedges with `k` edges that are *forbidden*: every edge
/// conflicts with another edge of the shape, so any edge subset containing a
/// placement of the shape violates the lozenge condition on every edge of
/// that placement.
///
/// The counts for `k = 2..=6` are 1, 3, 12, 39, 209; `k = 1` yields none.
pub fn enumerate_forbidden_free(k: usize) -> Result<Vec<FreePolyedge>, Error> {
    size_guard(k, 1)?;
    Ok(enumerate_free_polyedges(k)?
        .into_iter()
        .filter(|shape| shape.canonical().is_forbidden())
        .collect())
}

/// Expands free classes to all their fixed (translation-class) shapes,
/// sorted and deduplicated.
pub fn expand_to_fixed(shapes: &[FreePolyedge]) -> Vec<FixedPolyedge> {
    let mut fixed: BTreeSet<FixedPolyedge> = BTreeSet::new();
    for shape in shapes {
        fixed.extend(shape.orbit());
    }
    fixed.into_iter().collect()
}

/// The fixed forbidden shapes with `k ∈ 2..=4` edges that form a single
/// conflict cluster, sorted; their counts are 6, 14 and 36.
///
/// These are exactly the component shapes of the inclusion–exclusion
/// pipeline: a violating subset decomposes into conflict clusters, so only
/// cluster-forming patterns occur as components. (At `k = 4` the *forbidden*
/// census is wider: it also contains shapes, such as the rhombus outline,
/// that split into two independent two-edge clusters; those are products of
/// smaller patterns, not new components.)
pub fn fixed_forbidden_census(k: usize) -> Result<Vec<FixedPolyedge>, Error> {
    if !(2..=4).contains(&k) {
        return Err(Error::EdgeCountGuard { k, min: 2, max: 4 });
    }
    let connected: Vec<FreePolyedge> = enumerate_forbidden_free(k)?
        .into_iter()
        .filter(|shape| shape.canonical().is_conflict_connected())
        .collect();
    Ok(expand_to_fixed(&connected))
}

/// All internal edges of the side-`n` grid as lattice edges, sorted.
pub fn internal_edges(n: u32) -> Vec<LatticeEdge> {
    let mut edges = Vec::new();
    let n = n as i32;
    for orientation in EdgeOrientation::ALL {
        for row in 0..=n {
            for col in 0..=n {
                if crate::geometry::edge_is_internal(n as u32, row, col, orientation) {
                    edges.push(LatticeEdge::new(row, col, orientation));
                }
            }
        }
    }
    edges.sort_unstable();
    edges
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::matchstick_number;

    #[test]
    fn free_census_counts() {
        let expected = [1usize, 3, 12, 60, 375];
        for (k, &count) in expected.iter().enumerate() {
            let shapes = enumerate_free_polyedges(k + 1).unwrap();
            assert_eq!(shapes.len(), count, "k = {}", k + 1);
            for shape in &shapes {
                assert_eq!(shape.edge_count(), k + 1);
                assert!(shape.canonical().is_connected());
                assert_eq!(12 % shape.orbit_size(), 0);
            }
        }
    }

    #[test]
    fn forbidden_census_counts() {
        assert!(enumerate_forbidden_free(1).unwrap().is_empty());
        let expected = [1usize, 3, 12, 39, 209];
        for (i, &count) in expected.iter().enumerate() {
            let k = i + 2;
            let shapes = enumerate_forbidden_free(k).unwrap();
            assert_eq!(shapes.len(), count, "k = {k}");
            for shape in &shapes {
                assert!(shape.canonical().is_forbidden());
            }
        }
    }

    #[test]
    fn fixed_forbidden_counts() {
        assert_eq!(fixed_forbidden_census(2).unwrap().len(), 6);
        assert_eq!(fixed_forbidden_census(3).unwrap().len(), 14);
        assert_eq!(fixed_forbidden_census(4).unwrap().len(), 36);
        assert!(fixed_forbidden_census(1).is_err());
        assert!(fixed_forbidden_census(5).is_err());
    }

    #[test]
    fn two_edge_classes() {
        // Three free classes of two touching edges: spanning angles of 60°
        // (the conflicting pair), 120°, and 180°.
        let shapes = enumerate_free_polyedges(2).unwrap();
        assert_eq!(shapes.len(), 3);
        let forbidden: Vec<bool> = shapes
            .iter()
            .map(|s| s.canonical().is_forbidden())
            .collect();
        assert_eq!(forbidden.iter().filter(|&&f| f).count(), 1);
        // The conflicting pair has six fixed placements per lattice cell.
        let v_class = shapes
            .iter()
            .find(|s| s.canonical().is_forbidden())
            .unwrap();
        assert_eq!(v_class.orbit_size(), 6);
    }

    #[test]
    fn three_edge_conflict_clusters() {
        // Every forbidden three-edge shape is a single conflict cluster: with
        // only three edges there is no room for two separate clusters of two.
        for shape in enumerate_forbidden_free(3).unwrap() {
            assert!(shape.canonical().is_conflict_connected());
        }
        // Fixed shapes: 2 triangle outlines (orbit 2) + 6 zigzags (orbit 6)
        // + 6 forks (orbit 6) = 14.
        let fixed = fixed_forbidden_census(3).unwrap();
        let triangles: Vec<_> = fixed
            .iter()
            .filter(|s| {
                s.edges()
                    .iter()
                    .all(|&a| s.edges().iter().filter(|&&b| a.conflicts_with(b)).count() == 2)
            })
            .collect();
        assert_eq!(triangles.len(), 2, "two unit-triangle outlines");
    }

    #[test]
    fn four_edge_census_includes_split_clusters() {
        // 12 free forbidden classes at k = 4, of which some split into two
        // conflict clusters (e.g. the rhombus outline); the fixed census of
        // single-cluster shapes has 36 members.
        let free = enumerate_forbidden_free(4).unwrap();
        let split: Vec<_> = free
            .iter()
            .filter(|s| !s.canonical().is_conflict_connected())
            .collect();
        assert!(!split.is_empty());
        for shape in split {
            assert_eq!(shape.canonical().conflict_components().len(), 2);
        }
    }

    #[test]
    fn internal_edge_lists_match_grid() {
        for n in 1..=8 {
            let edges = internal_edges(n);
            assert_eq!(edges.len() as u64, matchstick_number(n as i64 - 1));
            let grid = crate::geometry::build_grid(n).unwrap();
            let from_grid: BTreeSet<LatticeEdge> = grid
                .internal_edge_indices()
                .iter()
                .map(|&i| {
                    let e = &grid.edges()[i];
                    LatticeEdge::new(e.row as i32, e.col as i32, e.orientation)
                })
                .collect();
            assert_eq!(edges.iter().copied().collect::<BTreeSet<_>>(), from_grid);
        }
    }

    #[test]
    fn census_guard() {
        assert!(enumerate_free_polyedges(0).is_err());
        assert!(enumerate_free_polyedges(7).is_err());
        assert!(enumerate_forbidden_free(7).is_err());
    }
}
