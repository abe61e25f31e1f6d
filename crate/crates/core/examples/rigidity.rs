//! Homological rigidity: admissible automorphisms of H₁ are ±1.

use arrtop::combinatorics::{builtin_g91, LineCombinatorics};
use arrtop::resonance::rigidity_check;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let v = rigidity_check(&builtin_g91())?;
    println!("g91: rigid={} ({} constraints, solutions of dim {})", v.rigid, v.constraint_count, v.solution_dim);
    println!("admissible scalars: {:?}", v.admissible_scalars);

    let mut pts = Vec::new();
    for i in 1..=4 {
        for j in i + 1..=4 {
            pts.push(vec![i, j]);
        }
    }
    match rigidity_check(&LineCombinatorics::new(4, pts)) {
        Ok(_) => println!("four generic lines: rigid"),
        Err(e) => println!("four generic lines: {e}"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
