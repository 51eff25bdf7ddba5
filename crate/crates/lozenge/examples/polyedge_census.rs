//! Enumerates polyedges by size: free shapes, the forbidden subclass in
//! which every edge conflicts with a neighbor, and the fixed
//! conflict-connected clusters that drive the inclusion-exclusion pipeline.

use lozenge::polyedges::census::{
    enumerate_forbidden_free, enumerate_free_polyedges, fixed_forbidden_census,
};

fn main() {
    println!("free polyedges (up to rotation, reflection, translation):");
    for k in 1..=5 {
        let shapes = enumerate_free_polyedges(k).expect("k is within the census bound");
        println!("  k={k}: {}", shapes.len());
    }

    println!("forbidden free polyedges (every edge in some conflict):");
    for k in 2..=6 {
        let shapes = enumerate_forbidden_free(k).expect("k is within the census bound");
        println!("  k={k}: {}", shapes.len());
    }

    println!("fixed conflict-connected clusters (translation only):");
    for k in 2..=4 {
        let shapes = fixed_forbidden_census(k).expect("k is within the census bound");
        println!("  k={k}: {}", shapes.len());
        if k == 2 {
            for shape in &shapes {
                println!("    {shape}");
            }
        }
    }

    // The two-edge clusters are exactly the conflicting pairs: one free
    // class whose symmetry orbit has all six fixed orientations.
    let pairs = fixed_forbidden_census(2).expect("k = 2 is within the census bound");
    assert_eq!(pairs.len(), 6);
    let free_pairs = enumerate_forbidden_free(2).expect("k = 2 is within the census bound");
    let expanded: usize = free_pairs.iter().map(|f| f.orbit_size()).sum();
    assert_eq!(expanded, 6, "one free pair class with orbit size 6");
    println!("\nthe single free conflicting pair expands to {expanded} fixed shapes");
}
