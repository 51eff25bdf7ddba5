//! Exact counting of partial lozenge tilings.
//!
//! A partial lozenge tiling of the side-`n` triangle with `l` lozenges is a
//! set of `l` internal edges no two of which lie in a common unit triangle
//! (deleting such a set merges `l` disjoint pairs of unit triangles into
//! lozenges). Equivalently it is an `l`-edge matching in the face-adjacency
//! graph of the `n²` unit triangles. Both views are implemented here:
//! [`count_brute_force`] scans edge subsets with pruning, [`count_dp`] runs a
//! broken-profile dynamic program over the faces.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::geometry::{build_grid, matchstick_number, tri_number};
use crate::Error;

/// Default side-length guard for [`count_brute_force`].
pub const DEFAULT_BRUTE_GUARD: u32 = 5;

/// Environment variable consulted by [`brute_guard_from_env`].
pub const BRUTE_GUARD_ENV: &str = "LOZENGE_BRUTE_GUARD";

/// Hard cap on the brute-force side length: beyond `n = 9` the internal
/// edges no longer fit the 128-bit conflict masks (and the scan would be
/// astronomically slow well before that).
pub const BRUTE_HARD_CAP: u32 = 9;

/// The full count row for one side length: `counts[l]` is the number of
/// partial lozenge tilings with exactly `l` lozenges.
///
/// The vector always has length `⌊n²/2⌋ + 1` (the area bound on the number of
/// lozenges); trailing entries beyond the densest achievable packing are zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountVector {
    n: u32,
    counts: Vec<BigUint>,
}

impl CountVector {
    /// Length of the count vector minus one: no placement can exceed
    /// `⌊n²/2⌋` lozenges because each lozenge covers two of the `n²` unit
    /// triangles.
    pub fn capacity_for(n: u32) -> usize {
        ((n as usize) * (n as usize)) / 2
    }

    /// Wraps a raw count row, padding with zeros up to the capacity bound.
    ///
    /// Fails if `n` is zero or if a nonzero count is claimed beyond the
    /// capacity bound.
    pub fn from_counts(n: u32, mut counts: Vec<BigUint>) -> Result<Self, Error> {
        if n < 1 {
            return Err(Error::InvalidSide(n));
        }
        let cap = Self::capacity_for(n);
        if counts.len() > cap + 1 {
            if counts[cap + 1..].iter().any(|c| !c.is_zero()) {
                return Err(Error::Parse(format!(
                    "nonzero count beyond the capacity bound {cap} for n = {n}"
                )));
            }
            counts.truncate(cap + 1);
        }
        counts.resize(cap + 1, BigUint::zero());
        Ok(CountVector { n, counts })
    }

    /// Side length this row belongs to.
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Counts by number of lozenges; length `⌊n²/2⌋ + 1`.
    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    /// Count for exactly `l` lozenges; zero beyond the capacity bound.
    pub fn count(&self, l: usize) -> BigUint {
        self.counts.get(l).cloned().unwrap_or_else(BigUint::zero)
    }

    /// Total number of partial lozenge tilings, all sizes combined.
    pub fn row_sum(&self) -> BigUint {
        self.counts.iter().sum()
    }

    /// Largest `l` with a nonzero count: the densest achievable packing.
    /// This equals `T(n-1) = n(n-1)/2`, the area bound minus the `n` unit
    /// triangles that every packing necessarily leaves uncovered.
    pub fn max_lozenge_count(&self) -> usize {
        self.counts.iter().rposition(|c| !c.is_zero()).unwrap_or(0)
    }
}

/// Total number of partial lozenge tilings in the row (method alias).
pub fn row_sum(v: &CountVector) -> BigUint {
    v.row_sum()
}

/// Largest achievable number of lozenges in the row (method alias).
pub fn max_lozenge_count(v: &CountVector) -> usize {
    v.max_lozenge_count()
}

/// Where the densest packing sits relative to the two candidate triangular
/// numbers, produced by [`max_packing_report`].
///
/// A packing of the side-`n` triangle leaves at least `n` unit triangles
/// uncovered (one per row by a parity argument along each row of faces), so
/// the measured maximum is `(n² - n)/2 = T(n-1)`. The report also carries
/// `T(n-2)`, the index one step lower, so that a consumer comparing against
/// externally quoted values can see at a glance which of the two conventions
/// a quoted index follows; the two agree only at `n = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaxPackingReport {
    /// Side length.
    pub n: u32,
    /// Index of the last nonzero count.
    pub measured_max_l: usize,
    /// Number of densest packings, `counts[measured_max_l]`.
    pub max_count: BigUint,
    /// `T(n-1)`, the area-minus-defects bound.
    pub t_n_minus_1: u64,
    /// `T(n-2)`, the same bound shifted down one side length.
    pub t_n_minus_2: u64,
    /// Whether the measured maximum equals `T(n-1)`.
    pub matches_t_n_minus_1: bool,
    /// Whether the measured maximum equals `T(n-2)`.
    pub matches_t_n_minus_2: bool,
}

/// Summarizes the densest packing of a count row against the triangular-number
/// candidates `T(n-1)` and `T(n-2)`.
pub fn max_packing_report(v: &CountVector) -> MaxPackingReport {
    let n = v.n() as i64;
    let measured = v.max_lozenge_count();
    let t1 = tri_number(n - 1);
    let t2 = tri_number(n - 2);
    MaxPackingReport {
        n: v.n(),
        measured_max_l: measured,
        max_count: v.count(measured),
        t_n_minus_1: t1,
        t_n_minus_2: t2,
        matches_t_n_minus_1: measured as u64 == t1,
        matches_t_n_minus_2: measured as u64 == t2,
    }
}

/// Reads the brute-force guard from `LOZENGE_BRUTE_GUARD`, falling back to
/// [`DEFAULT_BRUTE_GUARD`] when unset or unparsable.
pub fn brute_guard_from_env() -> u32 {
    std::env::var(BRUTE_GUARD_ENV)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_BRUTE_GUARD)
}

/// Counts partial lozenge tilings by a pruned depth-first scan over subsets of
/// internal edges, the definition executed literally.
///
/// The scan extends each independent (conflict-free) edge set by every later
/// edge that conflicts with nothing chosen so far, so it visits exactly one
/// node per counted tiling. Conflicts are precomputed as 128-bit masks, which
/// caps the method at `n ≤ 9`; the `max_n_guard` argument (default
/// [`DEFAULT_BRUTE_GUARD`], overridable at the CLI via `LOZENGE_BRUTE_GUARD`)
/// keeps accidental large runs from being attempted at all, since the visit
/// count is the full row sum and grows like `2^{Θ(n²)}`.
pub fn count_brute_force(n: u32, max_n_guard: u32) -> Result<CountVector, Error> {
    if n < 1 {
        return Err(Error::InvalidSide(n));
    }
    let subset_bits = matchstick_number(n as i64 - 1);
    if n > max_n_guard || n > BRUTE_HARD_CAP {
        return Err(Error::BruteForceGuard {
            n,
            guard: max_n_guard.min(BRUTE_HARD_CAP),
            subset_bits,
        });
    }

    let grid = build_grid(n)?;
    let internal = grid.internal_edge_indices();
    let m = internal.len();
    debug_assert_eq!(m as u64, subset_bits);

    // position of each edge in `internal`, or MAX for boundary edges
    let mut position = vec![usize::MAX; grid.edges().len()];
    for (pos, &edge_id) in internal.iter().enumerate() {
        position[edge_id] = pos;
    }

    // conflicts[j]: edges sharing a unit triangle with internal edge j
    let mut conflicts = vec![0u128; m];
    for face in grid.faces() {
        let members: Vec<usize> = face
            .edges
            .iter()
            .map(|&e| position[e])
            .filter(|&p| p != usize::MAX)
            .collect();
        for (i, &a) in members.iter().enumerate() {
            for &b in &members[i + 1..] {
                conflicts[a] |= 1u128 << b;
                conflicts[b] |= 1u128 << a;
            }
        }
    }

    let cap = CountVector::capacity_for(n);
    let mut counts = vec![BigUint::zero(); cap + 1];
    counts[0] = BigUint::one();

    fn extend(start: usize, banned: u128, l: usize, conflicts: &[u128], counts: &mut [BigUint]) {
        for j in start..conflicts.len() {
            if banned & (1u128 << j) == 0 {
                counts[l + 1] += 1u32;
                extend(
                    j + 1,
                    banned | conflicts[j] | (1u128 << j),
                    l + 1,
                    conflicts,
                    counts,
                );
            }
        }
    }
    extend(0, 0, 0, &conflicts, &mut counts);

    CountVector::from_counts(n, counts)
}

/// Counts partial lozenge tilings for all `l` at once with a broken-profile
/// dynamic program over the unit triangles.
///
/// Faces are swept row by row, upward and downward faces alternating within a
/// row. The state is a bitmask recording which upward faces on the sweep
/// frontier are already covered by a lozenge; each state carries a vector of
/// exact counts indexed by the number of lozenges placed so far. A downward
/// face may pair with the upward face to its left, with the upward face above
/// it, or stay uncovered; an upward face may additionally pair with the
/// downward face to its left. Summing the state vectors after the last row
/// gives the complete count row.
///
/// Time and memory grow like `2^n · n²`, so side lengths up to the embedded
/// reference table's `n = 15` run in seconds; `n` beyond roughly 20 exhausts
/// memory.
pub fn count_dp(n: u32) -> Result<CountVector, Error> {
    if n < 1 {
        return Err(Error::InvalidSide(n));
    }
    let cap = CountVector::capacity_for(n);

    // states[mask]: counts by l for sweeps reaching this frontier coverage;
    // an empty vector marks an unreachable mask.
    let mut states: Vec<Vec<BigUint>> = vec![vec![BigUint::one()]];

    for r in 0..n as usize {
        // Entering row r: the previous row's upward faces shift up one bit and
        // bit 0 becomes the (so far uncovered) status of the row's first
        // upward face.
        let size = 1usize << (r + 1);
        let mut shifted: Vec<Vec<BigUint>> = vec![Vec::new(); size];
        for (mask, vec) in states.into_iter().enumerate() {
            if !vec.is_empty() {
                shifted[mask << 1] = vec;
            }
        }
        states = shifted;

        // Step k settles the downward face k (neighbors: upward face k of
        // this row at bit k, upward face k of the previous row at bit k+1)
        // and then the upward face k+1 of this row, whose status replaces
        // bit k+1.
        for k in 0..r {
            let bit_left = 1usize << k;
            let bit_slot = 1usize << (k + 1);
            let mut next: Vec<Vec<BigUint>> = vec![Vec::new(); size];
            for mask in 0..size {
                if states[mask].is_empty() {
                    continue;
                }
                let vec = std::mem::take(&mut states[mask]);
                // down face uncovered, up face k+1 uncovered
                deposit(&mut next[mask & !bit_slot], &vec, 0);
                // down face uncovered, then paired with up face k+1
                deposit(&mut next[mask | bit_slot], &vec, 1);
                // down face paired with the upward face above it
                if mask & bit_slot == 0 {
                    deposit(&mut next[mask & !bit_slot], &vec, 1);
                }
                // down face paired with the upward face to its left
                if mask & bit_left == 0 {
                    deposit(&mut next[(mask | bit_left) & !bit_slot], &vec, 1);
                }
            }
            states = next;
        }
    }

    let mut total: Vec<BigUint> = Vec::new();
    for vec in &states {
        deposit(&mut total, vec, 0);
    }
    assert!(
        total.len() <= cap + 1,
        "dynamic program exceeded the capacity bound"
    );
    assert!(total.first().map(BigUint::is_one).unwrap_or(false));
    CountVector::from_counts(n, total)
}

/// `dst[i + shift] += src[i]` for all `i`, growing `dst` as needed.
fn deposit(dst: &mut Vec<BigUint>, src: &[BigUint], shift: usize) {
    if dst.len() < src.len() + shift {
        dst.resize(src.len() + shift, BigUint::zero());
    }
    for (i, c) in src.iter().enumerate() {
        dst[i + shift] += c;
    }
}

/// Count rows for `n = 1..=max_n`, sharing no state but convenient for
/// sweeps; index 0 holds `n = 1`.
pub fn count_dp_range(max_n: u32) -> Result<Vec<CountVector>, Error> {
    (1..=max_n).map(count_dp).collect()
}

/// Internal-edge totals per orientation for the side-`n` grid, as a map from
/// orientation letters; convenience over building the grid by hand.
pub fn internal_edge_census(n: u32) -> Result<BTreeMap<char, usize>, Error> {
    let grid = build_grid(n)?;
    Ok(grid
        .count_edges_by_orientation(true)
        .into_iter()
        .map(|(o, c)| (o.letter(), c))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::build_grid;

    /// Slow oracle: test all `2^m` subsets of internal edges literally.
    fn literal_subset_scan(n: u32) -> Vec<BigUint> {
        let grid = build_grid(n).unwrap();
        let internal = grid.internal_edge_indices();
        let m = internal.len();
        assert!(m <= 20, "literal scan oracle is for tiny n only");
        let mut position = vec![usize::MAX; grid.edges().len()];
        for (pos, &edge_id) in internal.iter().enumerate() {
            position[edge_id] = pos;
        }
        let mut conflicts = vec![0u64; m];
        for face in grid.faces() {
            let members: Vec<usize> = face
                .edges
                .iter()
                .map(|&e| position[e])
                .filter(|&p| p != usize::MAX)
                .collect();
            for (i, &a) in members.iter().enumerate() {
                for &b in &members[i + 1..] {
                    conflicts[a] |= 1 << b;
                    conflicts[b] |= 1 << a;
                }
            }
        }
        let cap = CountVector::capacity_for(n);
        let mut counts = vec![BigUint::zero(); cap + 1];
        for mask in 0u64..(1 << m) {
            let valid = (0..m).all(|j| mask & (1 << j) == 0 || conflicts[j] & mask == 0);
            if valid {
                counts[mask.count_ones() as usize] += 1u32;
            }
        }
        counts
    }

    /// Slow oracle: enumerate matchings in the face-adjacency graph.
    fn matching_oracle(n: u32) -> Vec<BigUint> {
        let grid = build_grid(n).unwrap();
        let pairs = grid.face_adjacency_pairs();
        assert!(grid.faces().len() <= 32);
        let cap = CountVector::capacity_for(n);
        let mut counts = vec![BigUint::zero(); cap + 1];
        counts[0] = BigUint::one();
        fn extend(
            start: usize,
            used: u32,
            l: usize,
            pairs: &[(usize, usize, usize)],
            counts: &mut [BigUint],
        ) {
            for (i, &(a, b, _)) in pairs.iter().enumerate().skip(start) {
                if used & (1 << a) == 0 && used & (1 << b) == 0 {
                    counts[l + 1] += 1u32;
                    extend(i + 1, used | (1 << a) | (1 << b), l + 1, pairs, counts);
                }
            }
        }
        extend(0, 0, 0, &pairs, &mut counts);
        counts
    }

    #[test]
    fn brute_force_matches_literal_scan() {
        for n in 1..=3 {
            let v = count_brute_force(n, DEFAULT_BRUTE_GUARD).unwrap();
            assert_eq!(v.counts(), literal_subset_scan(n), "n = {n}");
        }
    }

    #[test]
    fn brute_force_matches_matching_oracle() {
        for n in 1..=4 {
            let v = count_brute_force(n, DEFAULT_BRUTE_GUARD).unwrap();
            assert_eq!(v.counts(), matching_oracle(n), "n = {n}");
        }
    }

    #[test]
    fn dp_matches_brute_force() {
        for n in 1..=5 {
            let brute = count_brute_force(n, DEFAULT_BRUTE_GUARD).unwrap();
            let dp = count_dp(n).unwrap();
            assert_eq!(brute, dp, "n = {n}");
        }
    }

    #[test]
    fn small_rows_have_known_values() {
        let rows: [&[u32]; 4] = [
            &[1],
            &[1, 3],
            &[1, 9, 24, 18],
            &[1, 18, 126, 434, 762, 630, 187],
        ];
        for (i, row) in rows.iter().enumerate() {
            let n = i as u32 + 1;
            let v = count_dp(n).unwrap();
            for (l, &expected) in row.iter().enumerate() {
                assert_eq!(v.count(l), BigUint::from(expected), "n = {n}, l = {l}");
            }
            assert_eq!(v.max_lozenge_count() + 1, row.len(), "n = {n}");
        }
    }

    #[test]
    fn capacity_padding_and_max_packing() {
        let v = count_dp(5).unwrap();
        assert_eq!(v.counts().len(), 13);
        assert_eq!(v.count(10), BigUint::from(3135u32));
        assert!(v.count(11).is_zero());
        assert!(v.count(12).is_zero());
        assert_eq!(v.row_sum(), BigUint::from(286242u32));

        let report = max_packing_report(&v);
        assert_eq!(report.measured_max_l, 10);
        assert_eq!(report.t_n_minus_1, 10);
        assert_eq!(report.t_n_minus_2, 6);
        assert!(report.matches_t_n_minus_1);
        assert!(!report.matches_t_n_minus_2);
    }

    #[test]
    fn densest_packing_index_is_t_n_minus_1() {
        for n in 1..=7 {
            let v = count_dp(n).unwrap();
            assert_eq!(
                v.max_lozenge_count() as u64,
                tri_number(n as i64 - 1),
                "n = {n}"
            );
        }
    }

    #[test]
    fn single_lozenge_count_is_internal_edge_count() {
        for n in 1..=10 {
            let v = count_dp(n).unwrap();
            assert_eq!(
                v.count(1),
                BigUint::from(matchstick_number(n as i64 - 1)),
                "n = {n}"
            );
        }
    }

    #[test]
    fn guard_rejects_large_sides() {
        match count_brute_force(6, DEFAULT_BRUTE_GUARD) {
            Err(Error::BruteForceGuard {
                n: 6,
                guard: 5,
                subset_bits: 45,
            }) => {}
            other => panic!("expected guard error, got {other:?}"),
        }
        // The 128-bit conflict masks cap the method at n = 9 regardless of
        // how far the guard is raised.
        match count_brute_force(12, 100) {
            Err(Error::BruteForceGuard { guard: 9, .. }) => {}
            other => panic!("expected hard-cap error, got {other:?}"),
        }
    }

    #[test]
    fn guard_env_override() {
        assert_eq!(brute_guard_from_env(), DEFAULT_BRUTE_GUARD);
        std::env::set_var(BRUTE_GUARD_ENV, "7");
        assert_eq!(brute_guard_from_env(), 7);
        std::env::set_var(BRUTE_GUARD_ENV, "not a number");
        assert_eq!(brute_guard_from_env(), DEFAULT_BRUTE_GUARD);
        std::env::remove_var(BRUTE_GUARD_ENV);
    }

    #[test]
    fn from_counts_validates() {
        assert!(matches!(
            CountVector::from_counts(0, vec![]),
            Err(Error::InvalidSide(0))
        ));
        let padded = CountVector::from_counts(2, vec![BigUint::one()]).unwrap();
        assert_eq!(padded.counts().len(), 3);
        let overflow =
            CountVector::from_counts(1, vec![BigUint::one(), BigUint::zero(), BigUint::one()]);
        assert!(matches!(overflow, Err(Error::Parse(_))));
    }

    #[test]
    fn internal_edge_census_splits_evenly() {
        let census = internal_edge_census(6).unwrap();
        assert_eq!(census[&'H'], 15);
        assert_eq!(census[&'R'], 15);
        assert_eq!(census[&'F'], 15);
    }
}
