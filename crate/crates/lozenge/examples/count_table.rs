//! Builds the full table of partial-tiling counts with the transfer-matrix
//! sweep and checks every published entry along the way.
//!
//! Usage: `cargo run --example count_table [max_n]` (default 10, limit 15).

use lozenge::counting::count_dp;
use lozenge::reference;

fn main() {
    let max_n: u32 = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("max_n must be a small integer"))
        .unwrap_or(10);
    assert!(
        (1..=reference::MAX_TABLE_N).contains(&max_n),
        "max_n must lie in 1..={}",
        reference::MAX_TABLE_N
    );

    for n in 1..=max_n {
        let start = std::time::Instant::now();
        let row = count_dp(n).expect("side length is positive");
        let elapsed = start.elapsed();

        let published = reference::table_row(n).expect("n is within the table");
        for (l, text) in published.iter().enumerate() {
            assert_eq!(row.count(l).to_string(), *text, "mismatch at n={n}, l={l}");
        }

        // Rows get long; print up to the first twelve entries like the
        // published table does.
        let shown = row.counts().len().min(12);
        let cells: Vec<String> = row.counts()[..shown]
            .iter()
            .map(|c| c.to_string())
            .collect();
        let ellipsis = if row.counts().len() > shown {
            " ..."
        } else {
            ""
        };
        println!(
            "n={n:2} ({elapsed:8.1?})  [{}{}]  checked {} published entries",
            cells.join(", "),
            ellipsis,
            published.len()
        );
    }
    println!("all computed entries match the published table");
}
