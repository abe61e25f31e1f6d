//! Incidence data of the twelve-line combinatorics and its symmetries.

use arrtop::combinatorics::{builtin_g91, builtin_g91_prime};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let g = builtin_g91();
    g.validate()?;
    println!("{} lines, {} points", g.n_lines, g.points.len());
    for (m, count) in g.multiplicity_census().iter().rev() {
        println!("  {count} points of multiplicity {m}");
    }
    println!("automorphisms: {}", g.automorphisms().len());

    // dropping line 12 leaves a combinatorics with a cyclic symmetry of order 4
    let h = builtin_g91_prime();
    for p in h.automorphisms() {
        println!("  {:?}", p.images());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
