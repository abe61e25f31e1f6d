//! Smith normal form, Hermite form and integer solvability.

use arrtop::exactalg::{echelon_division_free, hermite_form, smith_normal_form, solve_integer_system, IntMatrix};
use num_bigint::BigInt;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let m = IntMatrix::from_rows(3, &[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
    let s = smith_normal_form(&m);
    println!("invariant factors: {:?}", s.invariant_factors());
    assert_eq!(s.u.mul(&m).mul(&s.v), s.d);

    println!("Bareiss pivots {:?}, Hermite pivots {:?}", echelon_division_free(&m).pivot_cols, hermite_form(&m).pivot_cols);

    // 5x = 1, y = 1 is solvable only once 5 is inverted
    let a = IntMatrix::from_rows(2, &[vec![5, 0], vec![0, 1]]);
    let r = solve_integer_system(&a, &[BigInt::from(1), BigInt::from(1)])?;
    println!("integer solution: {}, denominators: {:?}", r.integer_solvable, r.denominator_primes);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
