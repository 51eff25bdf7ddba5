//! Rank-by-rank inclusion–exclusion over conflict patterns.
//!
//! An `l`-subset of internal edges is *violating* when it contains two edges
//! of a common unit triangle. Partition any subset into its conflict clusters:
//! the clusters with at least two edges form a multiset of fixed shapes, and
//! the remaining edges are conflict-free singletons. That data is the
//! subset's [`Profile`], and its *rank* is `Σ (cluster size - 1)`, so rank 0
//! means conflict-free.
//!
//! For each profile `P`, the *closure count* is easy: place `P`'s component
//! shapes anywhere in the grid, pairwise edge-disjoint, and fill up with
//! arbitrary other edges. Each subset with true profile `Q` is counted
//! [`multiplicity`]`(P, Q)` times, a matrix that is unitriangular when
//! profiles are ordered by rank. Inverting it top-down (highest rank first)
//! yields the exact number of subsets per profile, hence the number of
//! violating subsets and finally the tiling count `L(n, l)` as the
//! complement. The pipeline covers `l ∈ {2, 3, 4}`, whose component shapes
//! are exactly the censuses of [`super::census::fixed_forbidden_census`].

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};

use super::census::fixed_forbidden_census;
use super::{FixedPolyedge, LatticeEdge};
use crate::closedforms::choose;
use crate::geometry::matchstick_number;
use crate::Error;

/// The conflict-cluster decomposition type of an edge subset: a sorted
/// multiset of cluster shapes (each conflict-connected, at least two edges)
/// plus a number of conflict-free edges.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Profile {
    components: Vec<FixedPolyedge>,
    free_edges: usize,
}

impl Profile {
    /// Builds a profile. Panics if a component has fewer than two edges or is
    /// not a single conflict cluster; single edges belong in `free_edges`.
    pub fn new(components: impl IntoIterator<Item = FixedPolyedge>, free_edges: usize) -> Self {
        let mut components: Vec<FixedPolyedge> = components.into_iter().collect();
        for c in &components {
            assert!(c.edge_count() >= 2, "profile component with a single edge");
            assert!(
                c.is_conflict_connected(),
                "profile component is not one conflict cluster: {c}"
            );
        }
        components.sort_unstable();
        Profile {
            components,
            free_edges,
        }
    }

    /// The cluster shapes, sorted.
    pub fn components(&self) -> &[FixedPolyedge] {
        &self.components
    }

    /// Number of conflict-free edges.
    pub fn free_edges(&self) -> usize {
        self.free_edges
    }

    /// `Σ (cluster size - 1)`: how far the subset is from conflict-free.
    pub fn rank(&self) -> usize {
        self.components.iter().map(|c| c.edge_count() - 1).sum()
    }

    /// Edges inside clusters.
    pub fn component_edges(&self) -> usize {
        self.components.iter().map(FixedPolyedge::edge_count).sum()
    }

    /// Total subset size `l` the profile describes.
    pub fn total_edges(&self) -> usize {
        self.component_edges() + self.free_edges
    }
}

impl std::fmt::Display for Profile {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.components.is_empty() {
            write!(f, "conflict-free")?;
        } else {
            for (i, c) in self.components.iter().enumerate() {
                if i > 0 {
                    write!(f, " + ")?;
                }
                write!(f, "{{{c}}}")?;
            }
        }
        if self.free_edges > 0 {
            write!(f, " + {} free", self.free_edges)?;
        }
        Ok(())
    }
}

/// The profile of a concrete edge subset.
pub fn classify_profile(edges: &[LatticeEdge]) -> Profile {
    if edges.is_empty() {
        return Profile::new([], 0);
    }
    let mut components = Vec::new();
    let mut free_edges = 0;
    for cluster in FixedPolyedge::new(edges.iter().copied()).conflict_components() {
        if cluster.edge_count() == 1 {
            free_edges += 1;
        } else {
            components.push(cluster);
        }
    }
    Profile::new(components, free_edges)
}

/// All profiles a violating `l`-subset can have, for `l ∈ {2, 3, 4}`, sorted
/// by rank and then by component shapes.
///
/// Component shapes come straight from the fixed censuses: 6 two-edge
/// clusters, 14 three-edge clusters, 36 four-edge clusters, plus the
/// two-cluster combinations at `l = 4` (21 unordered pairs of two-edge
/// clusters).
pub fn profiles_for(l: usize) -> Result<Vec<Profile>, Error> {
    let pairs = fixed_forbidden_census(2)?;
    let mut profiles = Vec::new();
    match l {
        2 => {
            for p in &pairs {
                profiles.push(Profile::new([p.clone()], 0));
            }
        }
        3 => {
            for p in &pairs {
                profiles.push(Profile::new([p.clone()], 1));
            }
            for t in fixed_forbidden_census(3)? {
                profiles.push(Profile::new([t], 0));
            }
        }
        4 => {
            for p in &pairs {
                profiles.push(Profile::new([p.clone()], 2));
            }
            for t in fixed_forbidden_census(3)? {
                profiles.push(Profile::new([t], 1));
            }
            for (i, p) in pairs.iter().enumerate() {
                for q in &pairs[i..] {
                    profiles.push(Profile::new([p.clone(), q.clone()], 0));
                }
            }
            for quad in fixed_forbidden_census(4)? {
                profiles.push(Profile::new([quad], 0));
            }
        }
        _ => return Err(Error::UnsupportedSubsetSize(l)),
    }
    profiles.sort_unstable_by(|a, b| a.rank().cmp(&b.rank()).then_with(|| a.cmp(b)));
    Ok(profiles)
}

/// Sorted edge lists of all placements of `shape` in the side-`n` grid.
fn shape_placements(shape: &FixedPolyedge, n: u32) -> Vec<Vec<LatticeEdge>> {
    let mut placements = Vec::new();
    for dr in 0..n as i32 {
        for dc in 0..n as i32 {
            let fits = shape.edges().iter().all(|e| {
                crate::geometry::edge_is_internal(n, e.row + dr, e.col + dc, e.orientation)
            });
            if fits {
                // Translation preserves the sort order of the edge list.
                placements.push(shape.translated(dr, dc));
            }
        }
    }
    placements
}

fn lists_disjoint(a: &[LatticeEdge], b: &[LatticeEdge]) -> bool {
    a.iter().all(|e| !b.contains(e))
}

/// `Π multiplicity!` over runs of equal shapes in a sorted component list:
/// the number of orderings of an unordered placement collection.
fn symmetry_factor(components: &[FixedPolyedge]) -> u64 {
    let mut factor = 1u64;
    let mut run = 1u64;
    for i in 1..components.len() {
        if components[i] == components[i - 1] {
            run += 1;
            factor *= run;
        } else {
            run = 1;
        }
    }
    factor
}

/// Number of unordered collections of pairwise edge-disjoint placements of
/// the given sorted component multiset in the side-`n` grid.
fn disjoint_placements(components: &[FixedPolyedge], n: u32) -> u64 {
    let lists: Vec<Vec<Vec<LatticeEdge>>> =
        components.iter().map(|c| shape_placements(c, n)).collect();

    fn ordered(idx: usize, chosen: &mut Vec<usize>, lists: &[Vec<Vec<LatticeEdge>>]) -> u64 {
        if idx == lists.len() {
            return 1;
        }
        let mut total = 0;
        for (p, placement) in lists[idx].iter().enumerate() {
            let ok = chosen
                .iter()
                .enumerate()
                .all(|(j, &c)| lists_disjoint(&lists[j][c], placement));
            if ok {
                chosen.push(p);
                total += ordered(idx + 1, chosen, lists);
                chosen.pop();
            }
        }
        total
    }

    let count = ordered(0, &mut Vec::new(), &lists);
    let symmetry = symmetry_factor(components);
    debug_assert_eq!(count % symmetry, 0);
    count / symmetry
}

/// The closure count of a profile at side length `n`: component placements
/// (pairwise edge-disjoint, otherwise unrestricted) times free-edge choices
/// from all remaining internal edges.
pub fn closure_count(profile: &Profile, n: u32) -> BigUint {
    let placements = disjoint_placements(profile.components(), n);
    if placements == 0 {
        return BigUint::zero();
    }
    let m = matchstick_number(n as i64 - 1);
    let used = profile.component_edges() as u64;
    debug_assert!(used <= m, "placements exist, so the edges fit");
    BigUint::from(placements) * choose(m - used, profile.free_edges() as u64)
}

/// How often a subset with true profile `q` is counted in the closure of
/// `p`: the number of unordered collections of pairwise edge-disjoint
/// translates of `p`'s components inside a representative subset with
/// profile `q`.
///
/// The value does not depend on `n` or on the representative: a
/// conflict-connected shape inside a subset always lies within one conflict
/// cluster of the subset, so the count only sees `q`'s component shapes. For
/// profiles of equal total size, `multiplicity(p, p) = 1` and
/// `multiplicity(p, q) = 0` unless `p`'s rank is strictly smaller than
/// `q`'s.
pub fn multiplicity(p: &Profile, q: &Profile) -> u64 {
    debug_assert_eq!(p.total_edges(), q.total_edges());
    // Far-apart translates cannot interact: conflicts and shared endpoints
    // only happen between edges whose coordinates differ by at most one.
    let mut representative: Vec<LatticeEdge> = Vec::new();
    for (i, component) in q.components().iter().enumerate() {
        representative.extend(component.translated(100 * i as i32, 200 * i as i32));
    }
    representative.sort_unstable();

    let candidates: Vec<Vec<Vec<LatticeEdge>>> = p
        .components()
        .iter()
        .map(|component| {
            let first = component.edges()[0];
            let mut found = Vec::new();
            for &anchor in &representative {
                if anchor.orientation != first.orientation {
                    continue;
                }
                let translated =
                    component.translated(anchor.row - first.row, anchor.col - first.col);
                if translated
                    .iter()
                    .all(|e| representative.binary_search(e).is_ok())
                {
                    found.push(translated);
                }
            }
            found
        })
        .collect();

    fn ordered(idx: usize, chosen: &mut Vec<usize>, lists: &[Vec<Vec<LatticeEdge>>]) -> u64 {
        if idx == lists.len() {
            return 1;
        }
        let mut total = 0;
        for (c, candidate) in lists[idx].iter().enumerate() {
            let ok = chosen
                .iter()
                .enumerate()
                .all(|(j, &prev)| lists_disjoint(&lists[j][prev], candidate));
            if ok {
                chosen.push(c);
                total += ordered(idx + 1, chosen, lists);
                chosen.pop();
            }
        }
        total
    }

    let count = ordered(0, &mut Vec::new(), &candidates);
    let symmetry = symmetry_factor(p.components());
    debug_assert_eq!(count % symmetry, 0);
    count / symmetry
}

/// The exact number of `l`-subsets per profile at side length `n`, obtained
/// by Möbius inversion of the closure counts from the highest rank down.
pub fn exact_profile_counts(n: u32, l: usize) -> Result<Vec<(Profile, BigUint)>, Error> {
    if n < 1 {
        return Err(Error::InvalidSide(n));
    }
    let profiles = profiles_for(l)?;
    let closures: Vec<BigInt> = profiles
        .iter()
        .map(|p| BigInt::from(closure_count(p, n)))
        .collect();

    // Highest rank first; `profiles_for` sorts ascending, so walk backwards.
    let mut exact: Vec<Option<BigInt>> = vec![None; profiles.len()];
    for i in (0..profiles.len()).rev() {
        let mut value = closures[i].clone();
        for j in (i + 1)..profiles.len() {
            if profiles[j].rank() > profiles[i].rank() {
                let m = multiplicity(&profiles[i], &profiles[j]);
                if m != 0 {
                    value -= BigInt::from(m) * exact[j].as_ref().unwrap();
                }
            }
        }
        assert!(
            !value.is_negative(),
            "internal error: inversion produced {value} for profile {}",
            profiles[i]
        );
        exact[i] = Some(value);
    }

    Ok(profiles
        .into_iter()
        .zip(exact)
        .map(|(p, v)| {
            let v = v.unwrap().to_biguint().unwrap();
            (p, v)
        })
        .collect())
}

/// Total number of violating `l`-subsets of internal edges at side length
/// `n`, for `l ∈ {2, 3, 4}`.
pub fn count_violating_subsets(n: u32, l: usize) -> Result<BigUint, Error> {
    Ok(exact_profile_counts(n, l)?
        .into_iter()
        .map(|(_, count)| count)
        .sum())
}

/// Reconstructs the tiling count `L(n, l)` from pattern data alone:
/// all `l`-subsets minus the violating ones.
pub fn reconstruct_l(n: u32, l: usize) -> Result<BigUint, Error> {
    let violating = count_violating_subsets(n, l)?;
    let total = choose(matchstick_number(n as i64 - 1), l as u64);
    assert!(
        violating <= total,
        "internal error: more violating subsets than subsets at n = {n}, l = {l}"
    );
    Ok(total - violating)
}

/// Violating-subset totals per rank, for `l ∈ {2, 3, 4}`.
pub fn rank_sum_report(n: u32, l: usize) -> Result<BTreeMap<usize, BigUint>, Error> {
    let mut report = BTreeMap::new();
    for (profile, count) in exact_profile_counts(n, l)? {
        *report.entry(profile.rank()).or_insert_with(BigUint::zero) += count;
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::count_dp;
    use crate::polyedges::census::internal_edges;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn profile_shapes_and_ranks() {
        let p2 = profiles_for(2).unwrap();
        assert_eq!(p2.len(), 6);
        assert!(p2.iter().all(|p| p.rank() == 1 && p.total_edges() == 2));

        let p3 = profiles_for(3).unwrap();
        assert_eq!(p3.len(), 20);
        assert_eq!(p3.iter().filter(|p| p.rank() == 1).count(), 6);
        assert_eq!(p3.iter().filter(|p| p.rank() == 2).count(), 14);

        let p4 = profiles_for(4).unwrap();
        assert_eq!(p4.len(), 77);
        assert_eq!(p4.iter().filter(|p| p.rank() == 1).count(), 6);
        assert_eq!(p4.iter().filter(|p| p.rank() == 2).count(), 35);
        assert_eq!(p4.iter().filter(|p| p.rank() == 3).count(), 36);

        assert!(matches!(
            profiles_for(5),
            Err(Error::UnsupportedSubsetSize(5))
        ));
    }

    #[test]
    fn multiplicity_is_unitriangular() {
        let profiles = profiles_for(4).unwrap();
        for (i, p) in profiles.iter().enumerate() {
            for (j, q) in profiles.iter().enumerate() {
                let m = multiplicity(p, q);
                if i == j {
                    assert_eq!(m, 1, "diagonal at {p}");
                } else if p.rank() >= q.rank() {
                    assert_eq!(m, 0, "{p} vs {q}");
                }
            }
        }
    }

    #[test]
    fn pair_embeddings_into_triples() {
        // Each three-edge cluster contains two conflicting pairs, except the
        // triangle outlines which contain three.
        let pairs = profiles_for(3).unwrap();
        let (rank1, rank2): (Vec<&Profile>, Vec<&Profile>) =
            pairs.iter().partition(|p| p.rank() == 1);
        for triple in rank2 {
            let total: u64 = rank1.iter().map(|p| multiplicity(p, triple)).sum();
            let shape = &triple.components()[0];
            let is_triangle = shape.edges().iter().all(|&a| {
                shape
                    .edges()
                    .iter()
                    .filter(|&&b| a.conflicts_with(b))
                    .count()
                    == 2
            });
            assert_eq!(total, if is_triangle { 3 } else { 2 }, "{triple}");
        }
    }

    #[test]
    fn violating_counts_small_cases() {
        assert_eq!(count_violating_subsets(2, 2).unwrap(), big(3));
        assert_eq!(count_violating_subsets(3, 2).unwrap(), big(12));
        assert_eq!(count_violating_subsets(4, 3).unwrap(), big(382));
    }

    #[test]
    fn rank_sums_small_cases() {
        assert_eq!(
            rank_sum_report(2, 3).unwrap(),
            BTreeMap::from([(1, big(0)), (2, big(1))])
        );
        assert_eq!(
            rank_sum_report(3, 3).unwrap(),
            BTreeMap::from([(1, big(51)), (2, big(15))])
        );
        assert_eq!(
            rank_sum_report(3, 4).unwrap(),
            BTreeMap::from([(1, big(39)), (2, big(66)), (3, big(21))])
        );
        assert_eq!(
            rank_sum_report(4, 4).unwrap(),
            BTreeMap::from([(1, big(1539)), (2, big(681)), (3, big(78))])
        );
    }

    #[test]
    fn reconstruction_matches_enumeration() {
        for n in 1..=6 {
            let row = count_dp(n).unwrap();
            for l in 2..=4 {
                assert_eq!(
                    reconstruct_l(n, l).unwrap(),
                    row.count(l),
                    "n = {n}, l = {l}"
                );
            }
        }
    }

    /// Enumerates every `l`-subset of internal edges, classifies it, and
    /// checks the per-profile counts against the inversion.
    #[test]
    fn profile_counts_match_literal_enumeration() {
        fn combinations(
            edges: &[LatticeEdge],
            l: usize,
            start: usize,
            current: &mut Vec<LatticeEdge>,
            sink: &mut dyn FnMut(&[LatticeEdge]),
        ) {
            if current.len() == l {
                sink(current);
                return;
            }
            for i in start..edges.len() {
                current.push(edges[i]);
                combinations(edges, l, i + 1, current, sink);
                current.pop();
            }
        }

        for n in 2..=4u32 {
            let edges = internal_edges(n);
            for l in 2..=4usize {
                let mut by_profile: BTreeMap<Profile, BigUint> = BTreeMap::new();
                let mut conflict_free = BigUint::zero();
                combinations(&edges, l, 0, &mut Vec::new(), &mut |subset| {
                    let profile = classify_profile(subset);
                    if profile.rank() == 0 {
                        conflict_free += 1u32;
                    } else {
                        *by_profile.entry(profile).or_default() += 1u32;
                    }
                });

                let computed: BTreeMap<Profile, BigUint> = exact_profile_counts(n, l)
                    .unwrap()
                    .into_iter()
                    .filter(|(_, count)| !count.is_zero())
                    .collect();
                assert_eq!(by_profile, computed, "profile table at n = {n}, l = {l}");
                assert_eq!(
                    reconstruct_l(n, l).unwrap(),
                    conflict_free,
                    "n = {n}, l = {l}"
                );
            }
        }
    }

    #[test]
    fn classify_examples() {
        use crate::geometry::EdgeOrientation::{FallingLR, Horizontal, RisingLR};
        let v = [
            LatticeEdge::new(1, 0, Horizontal),
            LatticeEdge::new(1, 0, FallingLR),
            LatticeEdge::new(5, 1, RisingLR),
        ];
        let profile = classify_profile(&v);
        assert_eq!(profile.rank(), 1);
        assert_eq!(profile.free_edges(), 1);
        assert_eq!(profile.total_edges(), 3);
        assert_eq!(classify_profile(&[]).total_edges(), 0);
    }
}
