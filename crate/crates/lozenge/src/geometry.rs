//! The subdivided equilateral triangle as an explicit plane graph.
//!
//! Side length `n` cuts the triangle into `n²` unit triangles. Vertices are
//! addressed as `(row, col)` with the apex at row 0 and row `r` holding
//! vertices `(r, 0)..=(r, r)` left to right. Edges come in three
//! orientations and are addressed by their upper-left endpoint:
//!
//! * `H(r, c)` joins `(r, c)`–`(r, c+1)`, horizontal;
//! * `R(r, c)` joins `(r, c)`–`(r+1, c)`, rising left-to-right (`/`);
//! * `F(r, c)` joins `(r, c)`–`(r+1, c+1)`, falling left-to-right (`\`).
//!
//! Faces (unit triangles) are addressed as `(row, slot)`: row `r` holds
//! `2r + 1` faces, alternating upward (even slot) and downward (odd slot).

use std::collections::BTreeMap;

use crate::Error;

/// Triangular number `T(k) = k(k+1)/2`, with `T(k) = 0` for negative `k`.
///
/// ```
/// use lozenge::geometry::tri_number;
/// assert_eq!(tri_number(4), 10);
/// assert_eq!(tri_number(-1), 0);
/// ```
pub fn tri_number(k: i64) -> u64 {
    if k < 0 {
        0
    } else {
        (k as u64) * (k as u64 + 1) / 2
    }
}

/// Matchstick number `M(k) = 3 T(k)`: the number of edges in the side-`k`
/// subdivision. `M(k) = 0` for negative `k`.
///
/// The side-`n` triangle has `M(n)` edges in total, of which `M(n-1)` are
/// internal (not on the outer boundary).
pub fn matchstick_number(k: i64) -> u64 {
    3 * tri_number(k)
}

/// Orientation of an edge of the triangular lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EdgeOrientation {
    /// Horizontal edge `(r, c)`–`(r, c+1)`.
    Horizontal,
    /// Edge `(r, c)`–`(r+1, c)`, drawn `/`.
    RisingLR,
    /// Edge `(r, c)`–`(r+1, c+1)`, drawn `\`.
    FallingLR,
}

impl EdgeOrientation {
    /// All three orientations, in their canonical order.
    pub const ALL: [EdgeOrientation; 3] = [
        EdgeOrientation::Horizontal,
        EdgeOrientation::RisingLR,
        EdgeOrientation::FallingLR,
    ];

    /// One-letter code used in textual shape formats: `H`, `R`, or `F`.
    pub fn letter(self) -> char {
        match self {
            EdgeOrientation::Horizontal => 'H',
            EdgeOrientation::RisingLR => 'R',
            EdgeOrientation::FallingLR => 'F',
        }
    }

    /// Inverse of [`EdgeOrientation::letter`].
    pub fn from_letter(c: char) -> Option<Self> {
        match c {
            'H' => Some(EdgeOrientation::Horizontal),
            'R' => Some(EdgeOrientation::RisingLR),
            'F' => Some(EdgeOrientation::FallingLR),
            _ => None,
        }
    }
}

impl std::fmt::Display for EdgeOrientation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// Orientation of a unit-triangle face.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FaceOrientation {
    /// Apex pointing up, like the outer triangle.
    Up,
    /// Apex pointing down.
    Down,
}

/// A lattice point of the subdivision.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GridVertex {
    /// Row, `0..=n`, counted from the apex.
    pub row: u32,
    /// Position within the row, `0..=row`.
    pub col: u32,
}

/// An edge of the subdivision.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GridEdge {
    /// Row of the upper-left endpoint.
    pub row: u32,
    /// Column of the upper-left endpoint.
    pub col: u32,
    /// Orientation.
    pub orientation: EdgeOrientation,
    /// Whether the edge lies on the outer boundary.
    pub boundary: bool,
    /// Indices of the two endpoints in [`TriGrid::vertices`].
    pub endpoints: (usize, usize),
    /// Indices of the incident faces in [`TriGrid::faces`]; boundary edges
    /// have exactly one.
    pub faces: (usize, Option<usize>),
}

/// A unit-triangle face of the subdivision.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GridFace {
    /// Row, `0..n`.
    pub row: u32,
    /// Slot within the row, `0..2·row+1`; even slots are upward faces.
    pub slot: u32,
    /// Orientation.
    pub orientation: FaceOrientation,
    /// Indices of the three sides in [`TriGrid::edges`].
    pub edges: [usize; 3],
}

/// The full incidence structure of the side-`n` subdivision.
///
/// Built by [`build_grid`]; all counting invariants (vertex, edge, face and
/// internal-edge totals, the Euler relation, and face incidence degrees) are
/// checked at construction time.
#[derive(Debug, Clone)]
pub struct TriGrid {
    n: u32,
    vertices: Vec<GridVertex>,
    edges: Vec<GridEdge>,
    faces: Vec<GridFace>,
    face_adjacency: Vec<Vec<usize>>,
}

/// Builds the side-`n` grid. Fails with [`Error::InvalidSide`] for `n = 0`.
///
/// ```
/// use lozenge::geometry::build_grid;
/// let g = build_grid(4).unwrap();
/// assert_eq!(g.faces().len(), 16);
/// assert_eq!(g.internal_edge_indices().len(), 18);
/// ```
pub fn build_grid(n: u32) -> Result<TriGrid, Error> {
    TriGrid::build(n)
}

/// Returns whether the edge `(row, col, orientation)` is an internal
/// (non-boundary) edge of the side-`n` grid. Coordinates outside the grid
/// yield `false`, so the predicate doubles as an existence test for
/// translated shape placements.
pub fn edge_is_internal(n: u32, row: i32, col: i32, orientation: EdgeOrientation) -> bool {
    let n = n as i32;
    match orientation {
        // Row 0 has no horizontal edge; row n is the bottom boundary.
        EdgeOrientation::Horizontal => (1..n).contains(&row) && (0..row).contains(&col),
        // Column 0 runs along the left boundary.
        EdgeOrientation::RisingLR => (0..n).contains(&row) && (1..=row).contains(&col),
        // Column `row` runs along the right boundary.
        EdgeOrientation::FallingLR => (0..n).contains(&row) && (0..row).contains(&col),
    }
}

impl TriGrid {
    fn build(n: u32) -> Result<Self, Error> {
        if n < 1 {
            return Err(Error::InvalidSide(n));
        }
        let tn = tri_number(n as i64) as usize;

        let mut vertices = Vec::with_capacity(tri_number(n as i64 + 1) as usize);
        for row in 0..=n {
            for col in 0..=row {
                vertices.push(GridVertex { row, col });
            }
        }

        // Edge blocks in index order: all H, then all R, then all F.
        let mut edges = Vec::with_capacity(3 * tn);
        for row in 1..=n {
            for col in 0..row {
                edges.push(GridEdge {
                    row,
                    col,
                    orientation: EdgeOrientation::Horizontal,
                    boundary: !edge_is_internal(
                        n,
                        row as i32,
                        col as i32,
                        EdgeOrientation::Horizontal,
                    ),
                    endpoints: (vertex_index(row, col), vertex_index(row, col + 1)),
                    faces: (usize::MAX, None),
                });
            }
        }
        for row in 0..n {
            for col in 0..=row {
                edges.push(GridEdge {
                    row,
                    col,
                    orientation: EdgeOrientation::RisingLR,
                    boundary: !edge_is_internal(
                        n,
                        row as i32,
                        col as i32,
                        EdgeOrientation::RisingLR,
                    ),
                    endpoints: (vertex_index(row, col), vertex_index(row + 1, col)),
                    faces: (usize::MAX, None),
                });
            }
        }
        for row in 0..n {
            for col in 0..=row {
                edges.push(GridEdge {
                    row,
                    col,
                    orientation: EdgeOrientation::FallingLR,
                    boundary: !edge_is_internal(
                        n,
                        row as i32,
                        col as i32,
                        EdgeOrientation::FallingLR,
                    ),
                    endpoints: (vertex_index(row, col), vertex_index(row + 1, col + 1)),
                    faces: (usize::MAX, None),
                });
            }
        }

        let h_index = |row: u32, col: u32| tri_number(row as i64 - 1) as usize + col as usize;
        let r_index = |row: u32, col: u32| tn + tri_number(row as i64) as usize + col as usize;
        let f_index = |row: u32, col: u32| 2 * tn + tri_number(row as i64) as usize + col as usize;

        let mut faces = Vec::with_capacity((n * n) as usize);
        for row in 0..n {
            for slot in 0..2 * row + 1 {
                let k = slot / 2;
                let (orientation, face_edges) = if slot % 2 == 0 {
                    (
                        FaceOrientation::Up,
                        [r_index(row, k), f_index(row, k), h_index(row + 1, k)],
                    )
                } else {
                    (
                        FaceOrientation::Down,
                        [h_index(row, k), f_index(row, k), r_index(row, k + 1)],
                    )
                };
                faces.push(GridFace {
                    row,
                    slot,
                    orientation,
                    edges: face_edges,
                });
            }
        }

        for (face_id, face) in faces.iter().enumerate() {
            for &edge_id in &face.edges {
                let slot = &mut edges[edge_id].faces;
                if slot.0 == usize::MAX {
                    slot.0 = face_id;
                } else {
                    assert!(slot.1.is_none(), "edge incident to more than two faces");
                    slot.1 = Some(face_id);
                }
            }
        }

        let mut face_adjacency = vec![Vec::new(); faces.len()];
        for edge in &edges {
            if let (a, Some(b)) = edge.faces {
                face_adjacency[a].push(b);
                face_adjacency[b].push(a);
            }
        }

        let grid = TriGrid {
            n,
            vertices,
            edges,
            faces,
            face_adjacency,
        };
        grid.validate();
        Ok(grid)
    }

    /// Checks the counting invariants of the structure; panics on violation.
    fn validate(&self) {
        let n = self.n as i64;
        assert_eq!(
            self.vertices.len() as u64,
            tri_number(n + 1),
            "vertex count"
        );
        assert_eq!(self.edges.len() as u64, matchstick_number(n), "edge count");
        assert_eq!(self.faces.len() as u64, (n * n) as u64, "face count");
        assert_eq!(
            self.internal_edge_indices().len() as u64,
            matchstick_number(n - 1),
            "internal edge count"
        );
        assert_eq!(
            self.interior_vertex_count() as u64,
            tri_number(n - 2),
            "interior vertex count"
        );
        // Euler relation for the planar embedding, outer face excluded:
        // faces + vertices = edges + 1.
        assert_eq!(
            self.faces.len() as u64 + self.vertices.len() as u64,
            self.edges.len() as u64 + 1,
            "Euler relation"
        );
        for (orientation, count) in self.count_edges_by_orientation(true) {
            assert_eq!(
                count as u64,
                tri_number(n - 1),
                "internal {orientation:?} edges"
            );
        }
        for edge in &self.edges {
            let (a, b) = edge.faces;
            assert_ne!(a, usize::MAX, "edge with no incident face");
            assert_eq!(edge.boundary, b.is_none(), "boundary flag vs face degree");
            if let Some(b) = b {
                assert_ne!(
                    self.faces[a].orientation, self.faces[b].orientation,
                    "incident faces must alternate orientation"
                );
            }
        }
        let adjacency_pairs: usize = self.face_adjacency.iter().map(Vec::len).sum::<usize>() / 2;
        assert_eq!(
            adjacency_pairs as u64,
            matchstick_number(n - 1),
            "face adjacency pairs"
        );
    }

    /// Side length.
    pub fn n(&self) -> u32 {
        self.n
    }

    /// All lattice points, ordered row by row.
    pub fn vertices(&self) -> &[GridVertex] {
        &self.vertices
    }

    /// All edges: the `H` block, then the `R` block, then the `F` block, each
    /// ordered row by row.
    pub fn edges(&self) -> &[GridEdge] {
        &self.edges
    }

    /// All faces, ordered row by row and left to right within a row.
    pub fn faces(&self) -> &[GridFace] {
        &self.faces
    }

    /// For each face, the faces sharing one of its internal edges.
    pub fn face_adjacency(&self) -> &[Vec<usize>] {
        &self.face_adjacency
    }

    /// Indices of the internal (non-boundary) edges, ascending.
    pub fn internal_edge_indices(&self) -> Vec<usize> {
        (0..self.edges.len())
            .filter(|&i| !self.edges[i].boundary)
            .collect()
    }

    /// Unordered pairs of edge-adjacent faces, one per internal edge, as
    /// `(face, face, shared edge)`.
    pub fn face_adjacency_pairs(&self) -> Vec<(usize, usize, usize)> {
        let mut pairs = Vec::new();
        for (edge_id, edge) in self.edges.iter().enumerate() {
            if let (a, Some(b)) = edge.faces {
                pairs.push((a.min(b), a.max(b), edge_id));
            }
        }
        pairs
    }

    /// Number of lattice points not on the outer boundary.
    pub fn interior_vertex_count(&self) -> usize {
        self.vertices
            .iter()
            .filter(|v| v.row != 0 && v.col != 0 && v.col != v.row && v.row != self.n)
            .count()
    }

    /// Edge totals per orientation, optionally restricted to internal edges.
    ///
    /// Internal edges split evenly: `T(n-1)` per orientation.
    pub fn count_edges_by_orientation(
        &self,
        internal_only: bool,
    ) -> BTreeMap<EdgeOrientation, usize> {
        let mut map = BTreeMap::new();
        for orientation in EdgeOrientation::ALL {
            map.insert(orientation, 0usize);
        }
        for edge in &self.edges {
            if internal_only && edge.boundary {
                continue;
            }
            *map.get_mut(&edge.orientation).unwrap() += 1;
        }
        map
    }
}

/// Index of vertex `(row, col)` in [`TriGrid::vertices`].
pub fn vertex_index(row: u32, col: u32) -> usize {
    tri_number(row as i64) as usize + col as usize
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangular_and_matchstick_numbers() {
        assert_eq!(
            (0..8).map(tri_number).collect::<Vec<_>>(),
            [0, 1, 3, 6, 10, 15, 21, 28]
        );
        assert_eq!(tri_number(-3), 0);
        assert_eq!(
            (0..6).map(matchstick_number).collect::<Vec<_>>(),
            [0, 3, 9, 18, 30, 45]
        );
        assert_eq!(matchstick_number(-1), 0);
    }

    #[test]
    fn rejects_zero_side() {
        assert!(matches!(build_grid(0), Err(Error::InvalidSide(0))));
    }

    #[test]
    fn side_one_grid() {
        let g = build_grid(1).unwrap();
        assert_eq!(g.vertices().len(), 3);
        assert_eq!(g.edges().len(), 3);
        assert_eq!(g.faces().len(), 1);
        assert!(g.internal_edge_indices().is_empty());
        assert!(g.edges().iter().all(|e| e.boundary));
    }

    #[test]
    fn side_three_internal_edges() {
        let g = build_grid(3).unwrap();
        let internal: Vec<(u32, u32, EdgeOrientation)> = g
            .internal_edge_indices()
            .iter()
            .map(|&i| {
                let e = &g.edges()[i];
                (e.row, e.col, e.orientation)
            })
            .collect();
        use EdgeOrientation::*;
        assert_eq!(
            internal,
            [
                (1, 0, Horizontal),
                (2, 0, Horizontal),
                (2, 1, Horizontal),
                (1, 1, RisingLR),
                (2, 1, RisingLR),
                (2, 2, RisingLR),
                (1, 0, FallingLR),
                (2, 0, FallingLR),
                (2, 1, FallingLR),
            ]
        );
    }

    #[test]
    fn orientation_partition() {
        for n in 1..=12 {
            let g = build_grid(n).unwrap();
            let all = g.count_edges_by_orientation(false);
            let internal = g.count_edges_by_orientation(true);
            for orientation in EdgeOrientation::ALL {
                assert_eq!(all[&orientation] as u64, tri_number(n as i64));
                assert_eq!(internal[&orientation] as u64, tri_number(n as i64 - 1));
            }
        }
    }

    #[test]
    fn invariants_up_to_twenty() {
        // `build` panics internally if any structural invariant fails.
        for n in 1..=20 {
            let g = build_grid(n).unwrap();
            assert_eq!(g.n(), n);
        }
    }

    #[test]
    fn face_edges_are_incident() {
        let g = build_grid(5).unwrap();
        for face in g.faces() {
            // The three sides of a face pairwise share one vertex each, and
            // the face has three distinct corners in total.
            let mut corners: Vec<usize> = face
                .edges
                .iter()
                .flat_map(|&e| {
                    let (a, b) = g.edges()[e].endpoints;
                    [a, b]
                })
                .collect();
            corners.sort_unstable();
            corners.dedup();
            assert_eq!(corners.len(), 3, "face {face:?}");
        }
    }

    #[test]
    fn down_faces_have_internal_sides_only() {
        // Every side of a downward face is shared with an upward face.
        for n in 2..=8 {
            let g = build_grid(n).unwrap();
            for face in g.faces() {
                if face.orientation == FaceOrientation::Down {
                    for &e in &face.edges {
                        assert!(!g.edges()[e].boundary);
                    }
                }
            }
        }
    }

    #[test]
    fn internal_predicate_matches_grid() {
        for n in 1..=8 {
            let g = build_grid(n).unwrap();
            for e in g.edges() {
                assert_eq!(
                    edge_is_internal(n, e.row as i32, e.col as i32, e.orientation),
                    !e.boundary
                );
            }
            // Out-of-grid coordinates are never internal.
            assert!(!edge_is_internal(n, -1, 0, EdgeOrientation::Horizontal));
            assert!(!edge_is_internal(n, n as i32, 0, EdgeOrientation::RisingLR));
        }
    }

    #[test]
    fn face_adjacency_degrees() {
        // Upward faces not in the last row touch 3 faces; downward faces
        // always touch 3; upward faces in the last row touch their row only.
        let g = build_grid(4).unwrap();
        let pair_count: usize = g.face_adjacency_pairs().len();
        assert_eq!(pair_count as u64, matchstick_number(3));
        for (id, face) in g.faces().iter().enumerate() {
            let degree = g.face_adjacency()[id].len();
            match face.orientation {
                FaceOrientation::Down => assert_eq!(degree, 3),
                FaceOrientation::Up => assert!(degree <= 3),
            }
        }
    }
}
