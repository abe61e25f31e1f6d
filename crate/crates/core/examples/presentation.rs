//! Compiling a braided wiring diagram into a presentation.

use arrtop::wiring::{builtin_wiring, relations, BuiltinWiring, WiringDiagram};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let w = builtin_wiring(BuiltinWiring::Xi1);
    let p = relations(&w)?;
    println!("{} generators, {} point relations, {} commutators", p.n_generators, p.relations.len(), p.relator_count());
    for r in p.relations.iter().take(4) {
        let conj: Vec<&[i32]> = r.conjugators.iter().map(|c| c.letters()).collect();
        println!("  lines {:?}, conjugators {:?}", r.lines, conj);
    }
    println!("abelianization (rank, torsion): {:?}", p.abelianization());

    // the same data round-trips through JSON
    let json = serde_json::to_string(&w)?;
    let back: WiringDiagram = serde_json::from_str(&json)?;
    assert_eq!(back, w);

    // a pencil of three lines through one point
    let tiny: WiringDiagram = serde_json::from_str(r#"{"n":3,"initial_order":[1,2,3],"crossings":[{"braid":[],"lines":[1,2,3]}]}"#)?;
    let q = relations(&tiny)?;
    println!("triple point: {:?}", q.relations[0].lines);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
