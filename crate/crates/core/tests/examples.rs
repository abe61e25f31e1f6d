// Every example under examples/ must keep running.

#[path = "../examples/combinatorics.rs"]
mod combinatorics;
#[path = "../examples/realizations.rs"]
mod realizations;
#[path = "../examples/pencils.rs"]
mod pencils;
#[path = "../examples/rigidity.rs"]
mod rigidity;
#[path = "../examples/braids.rs"]
mod braids;
#[path = "../examples/presentation.rs"]
mod presentation;
#[path = "../examples/alexander.rs"]
mod alexander;
#[path = "../examples/ai_test.rs"]
mod ai_test;
#[path = "../examples/zariski.rs"]
mod zariski;
#[path = "../examples/smith.rs"]
mod smith;

#[test]
fn example_combinatorics() {
    combinatorics::run_example().unwrap();
}

#[test]
fn example_realizations() {
    realizations::run_example().unwrap();
}

#[test]
fn example_pencils() {
    pencils::run_example().unwrap();
}

#[test]
fn example_rigidity() {
    rigidity::run_example().unwrap();
}

#[test]
fn example_braids() {
    braids::run_example().unwrap();
}

#[test]
fn example_presentation() {
    presentation::run_example().unwrap();
}

#[test]
fn example_alexander() {
    alexander::run_example().unwrap();
}

#[test]
fn example_ai_test() {
    ai_test::run_example().unwrap();
}

#[test]
fn example_zariski() {
    zariski::run_example().unwrap();
}

#[test]
fn example_smith() {
    smith::run_example().unwrap();
}

#[test]
fn example_cli() {
    cli::run_example().unwrap();
}
