//! Driving the command line from code, as the `arrtop` binary does.

use arrtop::cli::{execute, Cli};
use clap::Parser;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for args in [
        vec!["arrtop", "validate", "builtin:xi2"],
        vec!["arrtop", "realize", "builtin:a91-2"],
        vec!["arrtop", "present", "--builtin", "xi1-mirror"],
    ] {
        let cli = Cli::try_parse_from(&args)?;
        let out = execute(&cli.command)?;
        println!("$ {}", args.join(" "));
        print!("{}", out.text.lines().take(3).map(|l| format!("{l}\n")).collect::<String>());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
