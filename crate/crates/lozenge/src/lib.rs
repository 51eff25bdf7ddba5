//! Exact enumeration of partial lozenge tilings of the subdivided equilateral
//! triangle.
//!
//! Subdividing each side of an equilateral triangle into `n` sections cuts it
//! into `n²` unit triangles. A *lozenge* is the rhombus obtained by merging two
//! unit triangles that share an edge, which is the same thing as deleting one
//! internal edge of the subdivision. Placing `l` non-overlapping lozenges
//! therefore means deleting `l` internal edges such that no two deleted edges
//! belong to a common unit triangle. This crate counts the number `L(n, l)` of
//! such placements exactly, for every `l` at once, by three independent
//! methods, and cross-checks them against each other and against an embedded
//! reference table:
//!
//! * [`counting::count_brute_force`] — pruned depth-first scan over subsets of
//!   internal edges (the definition, executed literally).
//! * [`counting::count_dp`] — a broken-profile dynamic program sweeping the
//!   unit triangles row by row, carrying a bitmask of frontier coverage and a
//!   per-`l` coefficient vector of unbounded integers.
//! * [`closedforms`] — closed-form polynomials for `l ≤ 6`, evaluated in exact
//!   rational arithmetic.
//!
//! The [`polyedges`] module reproduces the counts for `l ∈ {2, 3, 4}` a fourth
//! way: it enumerates the finite edge patterns ("polyedges") whose presence in
//! a deleted-edge set violates the lozenge condition, counts their placements
//! inside the triangle, and runs a rank-by-rank inclusion–exclusion (Möbius
//! inversion over a small poset of patterns) to count violating subsets.
//!
//! # Quick start
//!
//! ```
//! use lozenge::counting::count_dp;
//!
//! let v = count_dp(3).unwrap();
//! let row: Vec<String> = v.counts()[..=v.max_lozenge_count()]
//!     .iter()
//!     .map(|c| c.to_string())
//!     .collect();
//! assert_eq!(row, ["1", "9", "24", "18"]);
//! ```
//!
//! The `lozenge` binary exposes the same functionality as a small CLI
//! (`count`, `verify`, `polyedges`, `formulas`), and the `examples/` directory
//! contains one runnable walk-through per capability.

pub mod closedforms;
pub mod counting;
pub mod geometry;
pub mod polyedges;
pub mod reference;
pub mod table_io;
pub mod verify;

/// Errors reported by the library.
///
/// Guard violations and out-of-domain arguments are ordinary errors; internal
/// arithmetic inconsistencies (for example a closed form failing to reduce to
/// an integer) are bugs and panic instead.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Side length below 1.
    #[error("side length must be at least 1, got {0}")]
    InvalidSide(u32),

    /// Brute-force subset scan refused: the search space has `2^{subset_bits}`
    /// subsets.
    #[error(
        "brute-force scan at n = {n} would visit up to 2^{subset_bits} edge subsets; \
         the guard allows n <= {guard}"
    )]
    BruteForceGuard {
        /// Requested side length.
        n: u32,
        /// Largest side length the guard allows.
        guard: u32,
        /// Number of internal edges, i.e. the exponent of the subset count.
        subset_bits: u64,
    },

    /// A formula was evaluated below its validity domain.
    #[error("{id} is defined for n >= {min}, got n = {n}")]
    OutOfDomain {
        /// Formula name.
        id: &'static str,
        /// Smallest valid side length.
        min: u32,
        /// Offending argument.
        n: u32,
    },

    /// A formula id was passed to an evaluator that does not handle it.
    #[error("{id} is not handled by this evaluator; use {expected}")]
    WrongEvaluator {
        /// Formula name.
        id: &'static str,
        /// Name of the function that evaluates this id.
        expected: &'static str,
    },

    /// Polyedge enumeration asked for a size outside the supported range.
    #[error("polyedge size {k} outside supported range {min}..={max}")]
    EdgeCountGuard {
        /// Requested number of edges.
        k: usize,
        /// Smallest supported size.
        min: usize,
        /// Largest supported size.
        max: usize,
    },

    /// The inclusion–exclusion pipeline supports subset sizes 2..=4 only.
    #[error("inclusion-exclusion pipeline handles l in 2..=4, got l = {0}")]
    UnsupportedSubsetSize(usize),

    /// Verification was asked to run beyond the supported table range.
    #[error("max-n must be at most {limit}, got {max_n}")]
    MaxSideGuard {
        /// Requested bound.
        max_n: u32,
        /// Largest supported bound.
        limit: u32,
    },

    /// Malformed textual input (CSV, JSON, or shape text).
    #[error("parse error: {0}")]
    Parse(String),

    /// I/O failure while reading or writing a table.
    #[error(transparent)]
    Io(#[from] std::io::Error),

    /// CSV layer failure while reading or writing a table.
    #[error(transparent)]
    Csv(#[from] csv::Error),

    /// JSON layer failure while reading or writing a table.
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
