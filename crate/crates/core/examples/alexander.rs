//! Truncated Alexander invariants of the two builtin groups and the mirror.

use arrtop::alexander::{alexander_invariant, comm_expand};
use arrtop::wiring::{builtin_wiring, BuiltinWiring};
use arrtop::words::FreeWord;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    // [x1, x2 x3] = x_{1,2} + t_2 x_{1,3}
    let v = comm_expand(3, 1, &FreeWord::new(3, [2, 3])?);
    println!("[x1, x2 x3]: x12 -> {:?}, x13 -> {:?}", v.get(1, 2), v.get(1, 3));

    let x1 = builtin_wiring(BuiltinWiring::Xi1);
    for (name, w) in [("xi1", x1.clone()), ("xi2", builtin_wiring(BuiltinWiring::Xi2)), ("mirror of xi1", x1.mirror())] {
        let a = alexander_invariant(&w)?;
        println!(
            "{name}: rank M1 = {}, Jacobi rank = {}, rank gr1 M2 = {}, torsion free: {}",
            a.m1_rank(),
            a.jacobi_smith.rank,
            a.gr1_rank(),
            a.jacobi_smith.is_torsion_free()
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
