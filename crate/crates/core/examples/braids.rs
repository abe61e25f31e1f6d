//! Braids acting on free groups, half-twists, and reading off conjugates of generators.

use arrtop::words::{braid_act, braid_permutation, conjugate_normal_form, half_twist, BraidWord, FreeWord};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let n = 4;
    let x = |k: i32| FreeWord::generator(n, k);
    let s1 = BraidWord::new(n, [1])?;
    println!("x1 · σ1 = {:?}", braid_act(&s1, &x(1)?)?.letters());
    println!("x2 · σ1 = {:?}", braid_act(&s1, &x(2)?)?.letters());

    // σ1 σ2 σ1 = σ2 σ1 σ2
    let a = BraidWord::new(n, [1, 2, 1])?;
    let b = BraidWord::new(n, [2, 1, 2])?;
    for k in 1..=n as i32 {
        assert_eq!(braid_act(&a, &x(k)?)?, braid_act(&b, &x(k)?)?);
    }

    let d = half_twist(1, 4, n)?;
    println!("Δ on strands 1..4 = {:?}, permutation {:?}", d.letters(), braid_permutation(&d).images());

    let w = braid_act(&d, &x(2)?)?;
    let (g, c) = conjugate_normal_form(&w)?;
    println!("x2 · Δ = {:?} = x{g} conjugated by {:?}", w.letters(), c.letters());

    // the product x1 x2 x3 x4 is fixed by every braid
    let full = (1..=n as i32).try_fold(FreeWord::identity(n), |acc, k| x(k).map(|g| acc.mul(&g)))?;
    assert_eq!(braid_act(&d, &full)?, full);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
