//! End to end: the fundamental groups of the two conjugate arrangements differ.

use arrtop::aitest::theorem_pipeline;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let t = theorem_pipeline()?;
    println!("rigid: {}", t.rigidity.as_ref().is_some_and(|r| r.rigid));
    println!("automorphisms: {}", t.automorphism_count);
    println!("+1 test: {:?}, -1 test: {:?}", t.positive.verdict, t.negative.verdict);
    println!("not isomorphic: {}", t.conclusion);
    assert!(t.conclusion);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
