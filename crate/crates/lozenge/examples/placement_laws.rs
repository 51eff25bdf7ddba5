//! Shows that every fixed conflict cluster lands in the grid a triangular
//! number of times: counts follow T(n-c) for a per-shape offset c, and the
//! pair placements sum to 3(n-1)^2.

use lozenge::geometry::tri_number;
use lozenge::polyedges::census::fixed_forbidden_census;
use lozenge::polyedges::placement::{placement_offset, placements_in_grid};

fn main() {
    for k in 2..=4 {
        let shapes = fixed_forbidden_census(k).expect("k is within the census bound");
        println!("k={k}: {} fixed clusters", shapes.len());

        let mut offsets = std::collections::BTreeMap::new();
        for shape in &shapes {
            let c = placement_offset(shape).expect("every cluster obeys a T(n-c) law");
            *offsets.entry(c).or_insert(0usize) += 1;

            // Spot-check the law at one side length.
            let n = 9;
            assert_eq!(
                placements_in_grid(shape, n) as u64,
                tri_number(n as i64 - c as i64),
                "T(n-{c}) fails for {shape}"
            );
        }
        for (c, how_many) in &offsets {
            println!("  {how_many} shapes place T(n-{c}) times");
        }
    }

    // Pair placements count the conflicting pairs inside the side-n grid.
    println!("\nconflicting pairs in the grid:");
    let pairs = fixed_forbidden_census(2).expect("k = 2 is within the census bound");
    for n in 2..=8u32 {
        let total: u64 = pairs.iter().map(|s| placements_in_grid(s, n)).sum();
        assert_eq!(total, 3 * (n as u64 - 1).pow(2));
        println!("  n={n}: {total} = 3(n-1)^2");
    }
}
