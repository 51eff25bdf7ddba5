//! Evaluates the closed-form polynomials for l = 0..=6 against the
//! transfer-matrix counts, and prints the binomial ceiling each count sits
//! under.

use lozenge::closedforms::{binomial_upper_bound, eval_formula, FormulaId};
use lozenge::counting::count_dp;

fn main() {
    let max_n = 12;
    let rows: Vec<_> = (1..=max_n)
        .map(|n| count_dp(n).expect("side length is positive"))
        .collect();

    for id in FormulaId::COUNTS {
        let l = id.lozenge_count().expect("count formulas only");
        print!("{id:>6} (l={l}, n>={}):", id.domain_min());
        for n in id.domain_min()..=max_n {
            let value = eval_formula(id, n).expect("n is in the domain");
            assert_eq!(
                value,
                rows[n as usize - 1].count(l),
                "{id} disagrees with enumeration at n={n}"
            );
            if n <= id.domain_min() + 4 {
                print!(" {value}");
            }
        }
        println!(" ... (matches enumeration through n={max_n})");
    }

    // Every count is dominated by the number of unrestricted edge subsets.
    let n = 6;
    println!("\nbinomial ceiling at n={n}:");
    for l in 0..=4usize {
        let count = rows[n as usize - 1].count(l);
        let bound = binomial_upper_bound(n, l).expect("side length is positive");
        println!("  l={l}: {count} <= C(45,{l}) = {bound}");
        assert!(count <= bound);
    }
}
