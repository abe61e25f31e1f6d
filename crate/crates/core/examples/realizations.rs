//! Four Galois-conjugate realizations over Q(ζ₅) share the same incidences.

use arrtop::combinatorics::builtin_g91;
use arrtop::realization::{builtin_a91, incidence_combinatorics, lines_to_json, Cyc5};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let z = Cyc5::zeta();
    let z5 = (0..5).fold(Cyc5::integer(1), |acc, _| &acc * &z);
    assert_eq!(z5, Cyc5::integer(1));
    println!("norm of 1 + ζ: {}", (&Cyc5::integer(1) + &z).norm());

    let g = builtin_g91();
    for i in 1..=4 {
        let lines = builtin_a91(i)?;
        let c = incidence_combinatorics(&lines)?;
        println!("ξ = ζ^{i}: {} points, same combinatorics: {}", c.points.len(), c.same_points(&g));
    }

    let first = &builtin_a91(1)?[6];
    println!("line 7 over ζ: {}", serde_json::to_string(&lines_to_json(std::slice::from_ref(first)))?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
