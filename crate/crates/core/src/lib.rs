pub mod aitest;
pub mod alexander;
pub mod cli;
pub mod combinatorics;
pub mod exactalg;
pub mod realization;
pub mod resonance;
pub mod wiring;
pub mod words;
