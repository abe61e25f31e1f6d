//! Combinatorial pencils, their resonance components and triangle counts.

use arrtop::combinatorics::builtin_g91;
use arrtop::resonance::{ceva_pencils, component_of, triangle_table};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let g = builtin_g91();
    let ceva = ceva_pencils(&g);
    println!("{} Ceva-type subarrangements, first fibers {:?}", ceva.len(), ceva[0].fibers);
    println!("component dimension: {}", component_of(&ceva[0], g.n_lines).dim());

    let table = triangle_table(&g);
    println!("{} triangles among {} pencils", table.triangles.len(), table.rows.len());
    for r in &table.rows {
        println!("{:<24} dim {}  Δ {:>3}  through quintuple {:>3}", format!("{:?}", r.lines), r.dim, r.triangles, r.triangles_through_quintuple);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
