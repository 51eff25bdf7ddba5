//! Cross-verification suites.
//!
//! Each suite re-derives a family of values by at least two independent
//! routes and compares: enumerated counts against the embedded reference
//! table, closed forms against enumeration, the inclusion–exclusion pipeline
//! against both, and structural identities of the grid against their counting
//! consequences. A [`Check`] records one comparison; a failed check carries
//! the mismatching values.

use std::time::{Duration, Instant};

use num_bigint::BigUint;

use crate::closedforms::{
    binomial_transform_check, choose, eval_formula, eval_rank_sum, gf_l1_coefficients,
    l5_correction_identity, l6_correction_identity, FormulaId,
};
use crate::counting::{count_dp, max_packing_report, CountVector};
use crate::geometry::{build_grid, matchstick_number, tri_number, EdgeOrientation};
use crate::polyedges::census::{
    enumerate_forbidden_free, enumerate_free_polyedges, fixed_forbidden_census,
};
use crate::polyedges::inclusion_exclusion::{rank_sum_report, reconstruct_l};
use crate::polyedges::placement::{placement_offset, placements_in_grid};
use crate::reference;
use crate::Error;

/// Largest side length [`run_suites`] accepts: the range the embedded
/// reference table covers.
pub const VERIFY_MAX_N_LIMIT: u32 = 15;

/// Side-length cap for the inclusion–exclusion pipeline checks, which are
/// the slowest part of the polyedges suite.
pub const PIPELINE_MAX_N: u32 = 12;

/// One verification suite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    /// Enumeration versus the embedded reference table.
    Table,
    /// Closed forms `L0..=L4` versus enumeration.
    Formulas,
    /// Conjectured closed forms for `l = 5, 6` versus enumeration and their
    /// alternate algebraic forms.
    Conjectures,
    /// Polyedge censuses, placement laws, and the inclusion–exclusion
    /// pipeline.
    Polyedges,
    /// Structural grid identities and count-vector identities.
    Identities,
}

impl Suite {
    /// All suites in canonical execution order.
    pub const ALL: [Suite; 5] = [
        Suite::Table,
        Suite::Formulas,
        Suite::Conjectures,
        Suite::Polyedges,
        Suite::Identities,
    ];

    /// Stable lowercase name.
    pub fn name(self) -> &'static str {
        match self {
            Suite::Table => "table",
            Suite::Formulas => "formulas",
            Suite::Conjectures => "conjectures",
            Suite::Polyedges => "polyedges",
            Suite::Identities => "identities",
        }
    }
}

impl std::fmt::Display for Suite {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| {
                Error::Parse(format!(
                    "unknown suite {s:?}, expected one of table, formulas, conjectures, \
                     polyedges, identities"
                ))
            })
    }
}

/// One executed comparison.
#[derive(Debug, Clone)]
pub struct Check {
    /// Owning suite.
    pub suite: Suite,
    /// Stable descriptive name.
    pub name: String,
    /// Whether the comparison held.
    pub passed: bool,
    /// Mismatch description, present exactly when the check failed.
    pub detail: Option<String>,
    /// Wall-clock time the check took.
    pub duration: Duration,
}

/// The outcome of [`run_suites`].
#[derive(Debug, Clone)]
pub struct VerificationReport {
    /// Side-length ceiling the suites ran to.
    pub max_n: u32,
    /// All executed checks, in execution order.
    pub checks: Vec<Check>,
}

impl VerificationReport {
    /// Whether every check passed.
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    /// Number of failed checks.
    pub fn failed_count(&self) -> usize {
        self.checks.iter().filter(|c| !c.passed).count()
    }

    /// Renders one line per check plus a summary line.
    pub fn render<W: std::io::Write>(&self, mut writer: W) -> std::io::Result<()> {
        for check in &self.checks {
            writeln!(
                writer,
                "[{}] {}: {} ({:.1?})",
                if check.passed { "PASS" } else { "FAIL" },
                check.suite,
                check.name,
                check.duration
            )?;
            if let Some(detail) = &check.detail {
                writeln!(writer, "       {detail}")?;
            }
        }
        writeln!(
            writer,
            "{} of {} checks passed (n up to {})",
            self.checks.len() - self.failed_count(),
            self.checks.len(),
            self.max_n
        )
    }
}

struct Runner {
    suite: Suite,
    checks: Vec<Check>,
}

impl Runner {
    fn check(&mut self, name: impl Into<String>, body: impl FnOnce() -> Result<(), String>) {
        let start = Instant::now();
        let outcome = body();
        self.checks.push(Check {
            suite: self.suite,
            name: name.into(),
            passed: outcome.is_ok(),
            detail: outcome.err(),
            duration: start.elapsed(),
        });
    }
}

fn expect_eq<T: PartialEq + std::fmt::Display>(
    what: impl std::fmt::Display,
    expected: T,
    computed: T,
) -> Result<(), String> {
    if expected == computed {
        Ok(())
    } else {
        Err(format!("{what}: expected {expected}, computed {computed}"))
    }
}

fn run_err(e: Error) -> String {
    format!("failed to compute: {e}")
}

/// Runs the requested suites (in canonical order, deduplicated) for side
/// lengths up to `max_n`, which must lie in `1..=15`.
pub fn run_suites(max_n: u32, suites: &[Suite]) -> Result<VerificationReport, Error> {
    if max_n < 1 {
        return Err(Error::InvalidSide(max_n));
    }
    if max_n > VERIFY_MAX_N_LIMIT {
        return Err(Error::MaxSideGuard {
            max_n,
            limit: VERIFY_MAX_N_LIMIT,
        });
    }

    // Count rows are shared by every suite; index n - 1 holds side length n.
    let rows: Vec<CountVector> = (1..=max_n).map(count_dp).collect::<Result<_, _>>()?;

    let mut checks = Vec::new();
    for suite in Suite::ALL {
        if !suites.contains(&suite) {
            continue;
        }
        let mut runner = Runner {
            suite,
            checks: Vec::new(),
        };
        match suite {
            Suite::Table => table_suite(&mut runner, max_n, &rows),
            Suite::Formulas => formulas_suite(&mut runner, max_n, &rows),
            Suite::Conjectures => conjectures_suite(&mut runner, max_n, &rows),
            Suite::Polyedges => polyedges_suite(&mut runner, max_n, &rows),
            Suite::Identities => identities_suite(&mut runner, max_n, &rows),
        }
        checks.extend(runner.checks);
    }
    Ok(VerificationReport { max_n, checks })
}

fn table_suite(runner: &mut Runner, max_n: u32, rows: &[CountVector]) {
    for n in 1..=max_n {
        let row = &rows[n as usize - 1];
        runner.check(format!("published row n={n}"), || {
            let published = reference::table_row(n).expect("n is within the table");
            for (l, text) in published.iter().enumerate() {
                let expected: BigUint = text.parse().expect("embedded entries are decimal");
                expect_eq(format!("l={l}"), expected, row.count(l))?;
            }
            Ok(())
        });
    }
    for &(n, text) in reference::ROW_SUMS.iter().filter(|&&(n, _)| n <= max_n) {
        let row = &rows[n as usize - 1];
        runner.check(format!("row sum n={n}"), || {
            let expected: BigUint = text.parse().expect("embedded entries are decimal");
            expect_eq("total", expected, row.row_sum())
        });
    }
    for &(n, text) in reference::MAX_TILINGS
        .iter()
        .filter(|&&(n, _)| n >= 2 && n <= max_n)
    {
        let row = &rows[n as usize - 1];
        runner.check(format!("densest packing n={n}"), || {
            let report = max_packing_report(row);
            let expected: BigUint = text.parse().expect("embedded entries are decimal");
            expect_eq("count", &expected, &report.max_count)?;
            if !report.matches_t_n_minus_1 {
                return Err(format!(
                    "densest packing uses {} lozenges; T(n-1) = {}, T(n-2) = {}",
                    report.measured_max_l, report.t_n_minus_1, report.t_n_minus_2
                ));
            }
            Ok(())
        });
    }
}

fn formulas_suite(runner: &mut Runner, max_n: u32, rows: &[CountVector]) {
    for id in [
        FormulaId::L0,
        FormulaId::L1,
        FormulaId::L2,
        FormulaId::L3,
        FormulaId::L4,
    ] {
        let l = id.lozenge_count().expect("count formulas only");
        runner.check(
            format!("closed form {id} for n={}..={max_n}", id.domain_min()),
            || {
                for n in id.domain_min()..=max_n {
                    let expected = rows[n as usize - 1].count(l);
                    let computed = eval_formula(id, n).map_err(run_err)?;
                    expect_eq(format!("n={n}"), expected, computed)?;
                }
                Ok(())
            },
        );
    }
}

fn conjectures_suite(runner: &mut Runner, max_n: u32, rows: &[CountVector]) {
    for id in [FormulaId::L5Conj, FormulaId::L6Conj] {
        let l = id.lozenge_count().expect("count formulas only");
        runner.check(
            format!("conjecture {id} for n={}..={max_n}", id.domain_min()),
            || {
                for n in id.domain_min()..=max_n {
                    let expected = rows[n as usize - 1].count(l);
                    let computed = eval_formula(id, n).map_err(run_err)?;
                    expect_eq(format!("n={n}"), expected, computed)?;
                }
                Ok(())
            },
        );
    }
    runner.check("L5conj equals its subtraction form for n=3..=16", || {
        for n in 3..=16 {
            let direct = eval_formula(FormulaId::L5Conj, n).map_err(run_err)?;
            let subtraction = l5_correction_identity(n).map_err(run_err)?;
            expect_eq(format!("n={n}"), direct, subtraction)?;
        }
        Ok(())
    });
    runner.check("L6conj equals its subtraction form for n=4..=16", || {
        for n in 4..=16 {
            let direct = eval_formula(FormulaId::L6Conj, n).map_err(run_err)?;
            let subtraction = l6_correction_identity(n).map_err(run_err)?;
            expect_eq(format!("n={n}"), direct, subtraction)?;
        }
        Ok(())
    });
}

fn polyedges_suite(runner: &mut Runner, max_n: u32, rows: &[CountVector]) {
    let pipeline_max = max_n.min(PIPELINE_MAX_N);

    runner.check("free polyedge census k=1..=5", || {
        let expected = [1usize, 3, 12, 60, 375];
        for (i, &count) in expected.iter().enumerate() {
            let shapes = enumerate_free_polyedges(i + 1).map_err(run_err)?;
            expect_eq(format!("k={}", i + 1), count, shapes.len())?;
        }
        Ok(())
    });
    runner.check("forbidden free census k=2..=6", || {
        let expected = [1usize, 3, 12, 39, 209];
        for (i, &count) in expected.iter().enumerate() {
            let shapes = enumerate_forbidden_free(i + 2).map_err(run_err)?;
            expect_eq(format!("k={}", i + 2), count, shapes.len())?;
        }
        Ok(())
    });
    runner.check("fixed conflict-cluster census k=2..=4", || {
        let expected = [6usize, 14, 36];
        for (i, &count) in expected.iter().enumerate() {
            let shapes = fixed_forbidden_census(i + 2).map_err(run_err)?;
            expect_eq(format!("k={}", i + 2), count, shapes.len())?;
        }
        Ok(())
    });

    runner.check(
        format!("conflicting-pair placements total 3(n-1)^2 for n=1..={pipeline_max}"),
        || {
            let pairs = fixed_forbidden_census(2).map_err(run_err)?;
            for n in 1..=pipeline_max {
                let total: u64 = pairs.iter().map(|s| placements_in_grid(s, n)).sum();
                let closed: BigUint = eval_rank_sum(FormulaId::RankSumV, n).map_err(run_err)?;
                expect_eq(format!("n={n}"), closed, BigUint::from(total))?;
            }
            Ok(())
        },
    );

    let offset_laws: [(usize, &[(u32, usize)]); 3] = [
        (2, &[(1, 3), (2, 3)]),
        (3, &[(1, 1), (2, 12), (3, 1)]),
        (4, &[(2, 21), (3, 15)]),
    ];
    for (k, law) in offset_laws {
        runner.check(format!("placement law T(n-c) for k={k} clusters"), || {
            let shapes = fixed_forbidden_census(k).map_err(run_err)?;
            let mut seen: std::collections::BTreeMap<u32, usize> =
                std::collections::BTreeMap::new();
            for shape in &shapes {
                let offset =
                    placement_offset(shape).ok_or_else(|| format!("no T(n-c) law for {shape}"))?;
                *seen.entry(offset).or_default() += 1;
            }
            let expected: std::collections::BTreeMap<u32, usize> = law.iter().copied().collect();
            if seen != expected {
                return Err(format!("offset multiset {seen:?}, expected {expected:?}"));
            }
            Ok(())
        });
    }

    for l in 2..=4usize {
        runner.check(
            format!("pipeline reconstructs l={l} for n=2..={pipeline_max}"),
            || {
                for n in 2..=pipeline_max {
                    let expected = rows[n as usize - 1].count(l);
                    let computed = reconstruct_l(n, l).map_err(run_err)?;
                    expect_eq(format!("n={n}"), expected, computed)?;
                }
                Ok(())
            },
        );
    }

    runner.check(
        format!("rank sums for l=4 match closed forms for n=2..={pipeline_max}"),
        || {
            for n in 2..=pipeline_max {
                let report = rank_sum_report(n, 4).map_err(run_err)?;
                let rank = |r: usize| report.get(&r).cloned().unwrap_or_default();
                for (r, id) in [
                    (1, FormulaId::RankSum6),
                    (2, FormulaId::RankSum35),
                    (3, FormulaId::RankSum36),
                ] {
                    let closed = eval_rank_sum(id, n).map_err(run_err)?;
                    expect_eq(format!("n={n} rank {r}"), closed, rank(r))?;
                }
            }
            Ok(())
        },
    );
}

fn identities_suite(runner: &mut Runner, max_n: u32, rows: &[CountVector]) {
    runner.check("grid invariants for n=1..=20", || {
        for n in 1..=20 {
            // Construction asserts the vertex/edge/face counts and the Euler
            // relation internally; the orientation split is checked here.
            let grid = build_grid(n).map_err(run_err)?;
            let internal = grid.count_edges_by_orientation(true);
            for orientation in EdgeOrientation::ALL {
                expect_eq(
                    format!("n={n} internal {orientation} edges"),
                    tri_number(n as i64 - 1),
                    internal[&orientation] as u64,
                )?;
            }
        }
        Ok(())
    });

    runner.check(format!("count vector shape for n=1..={max_n}"), || {
        for n in 1..=max_n {
            let row = &rows[n as usize - 1];
            expect_eq(
                format!("n={n} length"),
                CountVector::capacity_for(n) + 1,
                row.counts().len(),
            )?;
            expect_eq(format!("n={n} l=0"), BigUint::from(1u32), row.count(0))?;
            expect_eq(
                format!("n={n} l=1"),
                BigUint::from(matchstick_number(n as i64 - 1)),
                row.count(1),
            )?;
            expect_eq(
                format!("n={n} densest packing"),
                tri_number(n as i64 - 1),
                row.max_lozenge_count() as u64,
            )?;
        }
        Ok(())
    });

    runner.check(format!("binomial dominance for n=1..={max_n}"), || {
        for n in 1..=max_n {
            let row = &rows[n as usize - 1];
            let m = matchstick_number(n as i64 - 1);
            for (l, count) in row.counts().iter().enumerate() {
                let bound = choose(m, l as u64);
                if *count > bound {
                    return Err(format!(
                        "n={n}, l={l}: count {count} exceeds C({m},{l}) = {bound}"
                    ));
                }
            }
        }
        Ok(())
    });

    for id in [FormulaId::BinTransL2, FormulaId::BinTransL3] {
        runner.check(format!("binomial transform {id} up to n={max_n}"), || {
            for check in binomial_transform_check(id, max_n).map_err(run_err)? {
                if !check.matches {
                    return Err(format!(
                        "n={}: transform {} vs closed form {}",
                        check.n, check.transform_value, check.closed_form_value
                    ));
                }
            }
            Ok(())
        });
    }

    runner.check(
        format!("generating function coefficients for n=1..={max_n}"),
        || {
            let coefficients = gf_l1_coefficients(max_n as usize + 1);
            for n in 1..=max_n {
                expect_eq(
                    format!("n={n}"),
                    rows[n as usize - 1].count(1),
                    coefficients[n as usize].clone(),
                )?;
            }
            Ok(())
        },
    );

    runner.check(
        format!("L4 equals C(M,4) minus rank sums for n=3..={max_n}"),
        || {
            for n in 3..=max_n {
                let bound = choose(matchstick_number(n as i64 - 1), 4);
                let correction = eval_rank_sum(FormulaId::RankSum6, n).map_err(run_err)?
                    + eval_rank_sum(FormulaId::RankSum35, n).map_err(run_err)?
                    + eval_rank_sum(FormulaId::RankSum36, n).map_err(run_err)?;
                expect_eq(
                    format!("n={n}"),
                    rows[n as usize - 1].count(4),
                    bound - correction,
                )?;
            }
            Ok(())
        },
    );
}
