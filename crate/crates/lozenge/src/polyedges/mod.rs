//! Polyedges: finite connected edge patterns of the triangular lattice.
//!
//! A *polyedge* is a finite, connected (via shared endpoints) set of lattice
//! edges, considered either up to translation only (*fixed*) or up to the
//! full dihedral symmetry group of the lattice, rotations by 60° and
//! reflections (*free*). They play the role for edge patterns that polyominoes
//! play for cell patterns.
//!
//! Two edges *conflict* when they lie in a common unit triangle; a set of
//! deleted edges forms a valid partial lozenge tiling exactly when it is
//! conflict-free. The patterns that can be present in a *violating* edge
//! subset are classified here ([`census`]), counted inside the side-`n`
//! triangle ([`placement`]), and fed into a Möbius-inversion pipeline that
//! reconstructs the tiling counts for `l ∈ {2, 3, 4}` from pattern data alone
//! ([`inclusion_exclusion`]).

pub mod census;
pub mod inclusion_exclusion;
pub mod placement;

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::geometry::{EdgeOrientation, FaceOrientation};
use crate::Error;

/// A unit triangle of the infinite lattice, addressed like the faces of
/// [`crate::geometry::TriGrid`] but with unbounded coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct UnitTriangle {
    /// Row of the face.
    pub row: i32,
    /// Index among the faces of the same orientation in the row.
    pub col: i32,
    /// Orientation.
    pub orientation: FaceOrientation,
}

/// An edge of the infinite triangular lattice, addressed by its upper-left
/// endpoint and orientation exactly like [`crate::geometry::GridEdge`], but
/// with unbounded (possibly negative) coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticeEdge {
    /// Row of the upper-left endpoint.
    pub row: i32,
    /// Column of the upper-left endpoint.
    pub col: i32,
    /// Orientation.
    pub orientation: EdgeOrientation,
}

impl LatticeEdge {
    /// Shorthand constructor.
    pub fn new(row: i32, col: i32, orientation: EdgeOrientation) -> Self {
        LatticeEdge {
            row,
            col,
            orientation,
        }
    }

    /// The two endpoints, as `(row, col)` lattice points.
    pub fn endpoints(self) -> [(i32, i32); 2] {
        let (r, c) = (self.row, self.col);
        match self.orientation {
            EdgeOrientation::Horizontal => [(r, c), (r, c + 1)],
            EdgeOrientation::RisingLR => [(r, c), (r + 1, c)],
            EdgeOrientation::FallingLR => [(r, c), (r + 1, c + 1)],
        }
    }

    /// The two unit triangles having this edge as a side.
    pub fn triangles(self) -> [UnitTriangle; 2] {
        let (r, c) = (self.row, self.col);
        let up = |row, col| UnitTriangle {
            row,
            col,
            orientation: FaceOrientation::Up,
        };
        let down = |row, col| UnitTriangle {
            row,
            col,
            orientation: FaceOrientation::Down,
        };
        match self.orientation {
            EdgeOrientation::Horizontal => [up(r - 1, c), down(r, c)],
            EdgeOrientation::RisingLR => [up(r, c), down(r, c - 1)],
            EdgeOrientation::FallingLR => [up(r, c), down(r, c)],
        }
    }

    /// Whether two distinct edges lie in a common unit triangle. Deleting two
    /// conflicting edges cannot yield two lozenges, so conflicting pairs are
    /// exactly what violating subsets contain.
    pub fn conflicts_with(self, other: LatticeEdge) -> bool {
        if self == other {
            return false;
        }
        let mine = self.triangles();
        other.triangles().iter().any(|t| mine.contains(t))
    }

    /// Whether two distinct edges share an endpoint.
    pub fn touches(self, other: LatticeEdge) -> bool {
        if self == other {
            return false;
        }
        let mine = self.endpoints();
        other.endpoints().iter().any(|p| mine.contains(p))
    }

    /// Image under the 60° rotation about the apex lattice point.
    pub fn rotate60(self) -> LatticeEdge {
        let (r, c) = (self.row, self.col);
        match self.orientation {
            EdgeOrientation::Horizontal => {
                LatticeEdge::new(r - c - 1, r, EdgeOrientation::RisingLR)
            }
            EdgeOrientation::RisingLR => LatticeEdge::new(r - c, r, EdgeOrientation::FallingLR),
            EdgeOrientation::FallingLR => LatticeEdge::new(r - c, r, EdgeOrientation::Horizontal),
        }
    }

    /// Image under the reflection across the vertical axis through the apex.
    pub fn mirror(self) -> LatticeEdge {
        let (r, c) = (self.row, self.col);
        match self.orientation {
            EdgeOrientation::Horizontal => {
                LatticeEdge::new(r, r - c - 1, EdgeOrientation::Horizontal)
            }
            EdgeOrientation::RisingLR => LatticeEdge::new(r, r - c, EdgeOrientation::FallingLR),
            EdgeOrientation::FallingLR => LatticeEdge::new(r, r - c, EdgeOrientation::RisingLR),
        }
    }

    /// Translate by `(dr, dc)`.
    pub fn translate(self, dr: i32, dc: i32) -> LatticeEdge {
        LatticeEdge::new(self.row + dr, self.col + dc, self.orientation)
    }
}

impl std::fmt::Display for LatticeEdge {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "({},{},{})",
            self.row,
            self.col,
            self.orientation.letter()
        )
    }
}

/// The six lattice edges incident to the lattice point `(row, col)`.
pub fn edges_at_vertex(row: i32, col: i32) -> [LatticeEdge; 6] {
    [
        LatticeEdge::new(row, col, EdgeOrientation::Horizontal),
        LatticeEdge::new(row, col - 1, EdgeOrientation::Horizontal),
        LatticeEdge::new(row, col, EdgeOrientation::RisingLR),
        LatticeEdge::new(row - 1, col, EdgeOrientation::RisingLR),
        LatticeEdge::new(row, col, EdgeOrientation::FallingLR),
        LatticeEdge::new(row - 1, col - 1, EdgeOrientation::FallingLR),
    ]
}

/// A polyedge up to translation: a nonempty set of lattice edges normalized
/// so that the smallest base row and smallest base column are both zero.
///
/// Ordering and equality are on the sorted normalized edge list, so two
/// `FixedPolyedge` values are equal exactly when the underlying edge sets are
/// translates of each other.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FixedPolyedge {
    edges: Vec<LatticeEdge>,
}

impl FixedPolyedge {
    /// Normalizes an edge set. Panics on an empty or duplicated input; the
    /// parsing entry point [`FixedPolyedge::from_text`] reports those as
    /// errors instead.
    pub fn new(edges: impl IntoIterator<Item = LatticeEdge>) -> Self {
        let mut edges: Vec<LatticeEdge> = edges.into_iter().collect();
        assert!(!edges.is_empty(), "a polyedge has at least one edge");
        edges.sort_unstable();
        let before = edges.len();
        edges.dedup();
        assert_eq!(edges.len(), before, "a polyedge has no repeated edges");
        let dr = edges.iter().map(|e| e.row).min().unwrap();
        let dc = edges.iter().map(|e| e.col).min().unwrap();
        for e in &mut edges {
            *e = e.translate(-dr, -dc);
        }
        FixedPolyedge { edges }
    }

    /// The normalized edges, sorted.
    pub fn edges(&self) -> &[LatticeEdge] {
        &self.edges
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Whether the edge is part of the shape.
    pub fn contains(&self, edge: LatticeEdge) -> bool {
        self.edges.binary_search(&edge).is_ok()
    }

    /// All lattice points used by the shape.
    pub fn vertex_set(&self) -> BTreeSet<(i32, i32)> {
        self.edges.iter().flat_map(|e| e.endpoints()).collect()
    }

    /// Raw translated edge list (not renormalized).
    pub fn translated(&self, dr: i32, dc: i32) -> Vec<LatticeEdge> {
        self.edges.iter().map(|e| e.translate(dr, dc)).collect()
    }

    /// The shape rotated by 60°, renormalized.
    pub fn rotate60(&self) -> Self {
        FixedPolyedge::new(self.edges.iter().map(|e| e.rotate60()))
    }

    /// The shape reflected, renormalized.
    pub fn mirrored(&self) -> Self {
        FixedPolyedge::new(self.edges.iter().map(|e| e.mirror()))
    }

    /// The images of the shape under all twelve lattice symmetries
    /// (six rotations, each optionally reflected). May contain duplicates
    /// when the shape has symmetries of its own.
    pub fn dihedral_images(&self) -> Vec<Self> {
        let mut images = Vec::with_capacity(12);
        let mut current = self.clone();
        for _ in 0..6 {
            images.push(current.clone());
            images.push(current.mirrored());
            current = current.rotate60();
        }
        images
    }

    /// The lexicographically least dihedral image: a canonical representative
    /// of the shape's free (translation + rotation + reflection) class.
    pub fn free_canonical(&self) -> Self {
        self.dihedral_images().into_iter().min().unwrap()
    }

    /// Whether the shape is connected via shared endpoints.
    pub fn is_connected(&self) -> bool {
        self.component_count(|a, b| a.touches(b)) == 1
    }

    /// Whether the shape is connected via shared unit triangles, i.e. forms a
    /// single conflict cluster.
    pub fn is_conflict_connected(&self) -> bool {
        self.component_count(|a, b| a.conflicts_with(b)) == 1
    }

    /// Whether the shape is *forbidden*: connected, and every edge conflicts
    /// with some other edge of the shape. A violating edge subset is built
    /// from exactly such patterns (plus isolated conflict-free edges), which
    /// is what makes this subfamily worth enumerating separately.
    pub fn is_forbidden(&self) -> bool {
        self.is_connected()
            && self
                .edges
                .iter()
                .all(|&a| self.edges.iter().any(|&b| a.conflicts_with(b)))
    }

    /// The conflict clusters of the shape, each renormalized, sorted.
    /// Single edges conflicting with nothing come out as one-edge shapes.
    pub fn conflict_components(&self) -> Vec<FixedPolyedge> {
        let mut components = Vec::new();
        for group in self.partition(|a, b| a.conflicts_with(b)) {
            components.push(FixedPolyedge::new(group));
        }
        components.sort_unstable();
        components
    }

    fn component_count(&self, related: impl Fn(LatticeEdge, LatticeEdge) -> bool) -> usize {
        self.partition(related).len()
    }

    /// Partitions the edges into classes of the transitive closure of
    /// `related`.
    fn partition(
        &self,
        related: impl Fn(LatticeEdge, LatticeEdge) -> bool,
    ) -> Vec<Vec<LatticeEdge>> {
        let n = self.edges.len();
        let mut seen = vec![false; n];
        let mut groups = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut group = Vec::new();
            let mut queue = VecDeque::from([start]);
            seen[start] = true;
            while let Some(i) = queue.pop_front() {
                group.push(self.edges[i]);
                for (j, seen_j) in seen.iter_mut().enumerate() {
                    if !*seen_j && related(self.edges[i], self.edges[j]) {
                        *seen_j = true;
                        queue.push_back(j);
                    }
                }
            }
            groups.push(group);
        }
        groups
    }

    /// Textual form: space-separated `(row,col,orientation)` triples, e.g.
    /// `(0,0,H) (0,0,R)`.
    pub fn to_text(&self) -> String {
        let parts: Vec<String> = self.edges.iter().map(|e| e.to_string()).collect();
        parts.join(" ")
    }

    /// Parses the format produced by [`FixedPolyedge::to_text`]; the result
    /// is renormalized, so round-tripping canonicalizes.
    pub fn from_text(s: &str) -> Result<Self, Error> {
        let mut edges = Vec::new();
        for part in s.split_whitespace() {
            let inner = part
                .strip_prefix('(')
                .and_then(|p| p.strip_suffix(')'))
                .ok_or_else(|| Error::Parse(format!("edge {part:?} is not parenthesized")))?;
            let fields: Vec<&str> = inner.split(',').map(str::trim).collect();
            if fields.len() != 3 {
                return Err(Error::Parse(format!(
                    "edge {part:?} does not have three fields"
                )));
            }
            let row: i32 = fields[0]
                .parse()
                .map_err(|_| Error::Parse(format!("bad row in {part:?}")))?;
            let col: i32 = fields[1]
                .parse()
                .map_err(|_| Error::Parse(format!("bad column in {part:?}")))?;
            let mut chars = fields[2].chars();
            let orientation = chars
                .next()
                .filter(|_| chars.next().is_none())
                .and_then(EdgeOrientation::from_letter)
                .ok_or_else(|| {
                    Error::Parse(format!("bad orientation in {part:?}, expected H, R or F"))
                })?;
            edges.push(LatticeEdge::new(row, col, orientation));
        }
        if edges.is_empty() {
            return Err(Error::Parse("a polyedge has at least one edge".into()));
        }
        edges.sort_unstable();
        let before = edges.len();
        edges.dedup();
        if edges.len() != before {
            return Err(Error::Parse("repeated edge in polyedge text".into()));
        }
        Ok(FixedPolyedge::new(edges))
    }
}

impl std::fmt::Display for FixedPolyedge {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl std::str::FromStr for FixedPolyedge {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        FixedPolyedge::from_text(s)
    }
}

/// A polyedge up to the full symmetry group: a canonical fixed representative
/// together with the size of its translation-class orbit.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FreePolyedge {
    canonical: FixedPolyedge,
    orbit_size: usize,
}

impl FreePolyedge {
    /// The free class of a fixed shape.
    pub fn from_fixed(shape: &FixedPolyedge) -> Self {
        let mut images = shape.dihedral_images();
        images.sort_unstable();
        images.dedup();
        FreePolyedge {
            canonical: images.remove(0),
            orbit_size: images.len() + 1,
        }
    }

    /// Canonical fixed representative (least dihedral image).
    pub fn canonical(&self) -> &FixedPolyedge {
        &self.canonical
    }

    /// Number of distinct fixed shapes in the class; always divides 12.
    pub fn orbit_size(&self) -> usize {
        self.orbit_size
    }

    /// All distinct fixed shapes in the class, sorted.
    pub fn orbit(&self) -> Vec<FixedPolyedge> {
        let mut images = self.canonical.dihedral_images();
        images.sort_unstable();
        images.dedup();
        images
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        self.canonical.edge_count()
    }
}

impl std::fmt::Display for FreePolyedge {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.canonical.fmt(f)
    }
}

/// Groups fixed shapes by free class, preserving deterministic order.
pub fn group_by_free_class(shapes: &[FixedPolyedge]) -> Vec<(FreePolyedge, Vec<FixedPolyedge>)> {
    let mut by_class: HashMap<FixedPolyedge, Vec<FixedPolyedge>> = HashMap::new();
    for shape in shapes {
        by_class
            .entry(shape.free_canonical())
            .or_default()
            .push(shape.clone());
    }
    let mut grouped: Vec<(FreePolyedge, Vec<FixedPolyedge>)> = by_class
        .into_iter()
        .map(|(canonical, mut members)| {
            members.sort_unstable();
            (FreePolyedge::from_fixed(&canonical), members)
        })
        .collect();
    grouped.sort_unstable_by(|a, b| a.0.cmp(&b.0));
    grouped
}
