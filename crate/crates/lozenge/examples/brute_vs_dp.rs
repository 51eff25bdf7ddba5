//! Cross-checks the guarded brute-force subset scan against the
//! transfer-matrix sweep on every side length the guard allows, then shows
//! the guard refusing a larger instance.

use lozenge::counting::{count_brute_force, count_dp, DEFAULT_BRUTE_GUARD};

fn main() {
    for n in 1..=DEFAULT_BRUTE_GUARD {
        let start = std::time::Instant::now();
        let brute = count_brute_force(n, DEFAULT_BRUTE_GUARD).expect("within the guard");
        let brute_time = start.elapsed();

        let start = std::time::Instant::now();
        let dp = count_dp(n).expect("side length is positive");
        let dp_time = start.elapsed();

        assert_eq!(brute.counts(), dp.counts(), "methods disagree at n={n}");
        println!(
            "n={n}: {} l-values agree (brute {brute_time:.1?}, dp {dp_time:.1?}), total {}",
            brute.counts().len(),
            brute.row_sum()
        );
    }

    // One past the guard: the scan refuses rather than grinding through
    // 2^45 subsets.
    let refused = count_brute_force(DEFAULT_BRUTE_GUARD + 1, DEFAULT_BRUTE_GUARD);
    println!("n={}: {}", DEFAULT_BRUTE_GUARD + 1, refused.unwrap_err());
}
