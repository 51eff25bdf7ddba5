//! Runs every cross-verification suite to a moderate side length and prints
//! the per-check report, exiting nonzero on any mismatch.

use lozenge::verify::{run_suites, Suite};

fn main() {
    let max_n: u32 = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("max_n must be a small integer"))
        .unwrap_or(10);

    let report = run_suites(max_n, &Suite::ALL).expect("max_n must lie in 1..=15");
    report
        .render(std::io::stdout().lock())
        .expect("stdout is writable");
    if !report.all_passed() {
        std::process::exit(1);
    }
}
