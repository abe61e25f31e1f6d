//! The `arrtop` command line.
//!
//! Inputs are either `builtin:<name>` URIs or paths to JSON files holding a
//! line combinatorics, a list of lines over ℚ(ζ₅), or a wiring diagram.
//! Exit codes: 0 on success, 1 when the mathematics says no, 2 on bad input.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::Value;
use thiserror::Error;

use crate::aitest::{run_test_with, theorem_pipeline, TestReport, TheoremReport, Verdict};
use crate::alexander::alexander_invariant;
use crate::combinatorics::{builtin_g91, builtin_g91_prime, LineCombinatorics};
use crate::exactalg::ser_display;
use crate::realization::{builtin_a91, incidence_combinatorics, lines_from_json, LineJson, ProjLine};
use crate::resonance::{rigidity_check, triangle_table, TriangleRow};
use crate::wiring::{builtin_wiring, relations, BuiltinWiring, Presentation, WiringDiagram};

#[derive(Parser, Debug)]
#[command(name = "arrtop", version, about = "Topology of line arrangements from their combinatorics and wiring diagrams")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Worker threads for parallel stages.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Expect {
    Pass,
    Fail,
}

#[derive(clap::Args, Debug, Clone)]
pub struct InputArgs {
    /// `builtin:<name>` or a JSON file.
    pub input: Option<String>,
    /// Shorthand for `builtin:<name>`.
    #[arg(long)]
    pub builtin: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check an input: incidence axioms, line distinctness, or wiring consistency.
    Validate(InputArgs),
    /// Line permutations preserving the combinatorics.
    Automorphisms(InputArgs),
    /// Combinatorial pencils with their triangle counts.
    Pencils(InputArgs),
    /// Homological rigidity check.
    Rigidity(InputArgs),
    /// Incidence combinatorics of explicit lines.
    Realize(InputArgs),
    /// Presentation of the fundamental group compiled from a wiring diagram.
    Present(InputArgs),
    /// Ranks of the truncated Alexander invariant.
    Alexander(InputArgs),
    /// Level-2 isomorphism test inducing the identity on homology.
    AiTest {
        #[arg(long)]
        source: String,
        #[arg(long)]
        target: String,
        #[arg(long, value_enum)]
        expect: Option<Expect>,
    },
    /// End-to-end non-isomorphism check for the two conjugate arrangements.
    Zariski,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Refuted(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Refuted(_) => 1,
        }
    }
}

fn input_err(e: impl std::fmt::Display) -> CliError {
    CliError::Input(e.to_string())
}

#[derive(Clone, Debug)]
pub enum Loaded {
    Combinatorics(LineCombinatorics),
    Lines(Vec<ProjLine>),
    Wiring(WiringDiagram),
}

pub const BUILTINS: [&str; 10] =
    ["g91", "g91-prime", "a91-1", "a91-2", "a91-3", "a91-4", "xi1", "xi2", "xi1-mirror", "xi2-mirror"];

fn load_builtin(name: &str) -> Result<Loaded, CliError> {
    Ok(match name {
        "g91" => Loaded::Combinatorics(builtin_g91()),
        "g91-prime" => Loaded::Combinatorics(builtin_g91_prime()),
        "xi1" => Loaded::Wiring(builtin_wiring(BuiltinWiring::Xi1)),
        "xi2" => Loaded::Wiring(builtin_wiring(BuiltinWiring::Xi2)),
        "xi1-mirror" => Loaded::Wiring(builtin_wiring(BuiltinWiring::Xi1).mirror()),
        "xi2-mirror" => Loaded::Wiring(builtin_wiring(BuiltinWiring::Xi2).mirror()),
        _ => match name.strip_prefix("a91-").and_then(|i| i.parse::<u32>().ok()) {
            Some(i @ 1..=4) => Loaded::Lines(builtin_a91(i).map_err(input_err)?),
            _ => return Err(CliError::Input(format!("unknown builtin `{name}`; known: {}", BUILTINS.join(", ")))),
        },
    })
}

/// Resolves a `builtin:` URI or reads and sniffs a JSON file.
pub fn load(spec: &str) -> Result<Loaded, CliError> {
    if let Some(name) = spec.strip_prefix("builtin:") {
        return load_builtin(name);
    }
    let text = std::fs::read_to_string(spec).map_err(|e| CliError::Input(format!("{spec}: {e}")))?;
    parse_json(&text).map_err(|e| CliError::Input(format!("{spec}: {e}")))
}

pub fn parse_json(text: &str) -> Result<Loaded, String> {
    let v: Value = serde_json::from_str(text).map_err(|e| e.to_string())?;
    match &v {
        Value::Array(_) => {
            let lines: Vec<LineJson> = serde_json::from_value(v).map_err(|e| e.to_string())?;
            Ok(Loaded::Lines(lines_from_json(&lines).map_err(|e| e.to_string())?))
        }
        Value::Object(m) if m.contains_key("crossings") => {
            Ok(Loaded::Wiring(serde_json::from_value(v).map_err(|e| e.to_string())?))
        }
        Value::Object(m) if m.contains_key("points") => {
            Ok(Loaded::Combinatorics(serde_json::from_value(v).map_err(|e| e.to_string())?))
        }
        _ => Err("not a combinatorics, lines or wiring document".into()),
    }
}

fn resolve(args: &InputArgs) -> Result<Loaded, CliError> {
    match (&args.input, &args.builtin) {
        (Some(s), None) => load(s),
        (None, Some(b)) => load_builtin(b),
        _ => Err(CliError::Input("give exactly one of INPUT or --builtin".into())),
    }
}

fn combinatorics_of(args: &InputArgs) -> Result<LineCombinatorics, CliError> {
    match resolve(args)? {
        Loaded::Combinatorics(c) => Ok(c),
        Loaded::Lines(l) => incidence_combinatorics(&l).map_err(input_err),
        Loaded::Wiring(_) => Err(CliError::Input("expected a combinatorics or lines, got a wiring diagram".into())),
    }
}

fn wiring_of(spec: &Loaded) -> Result<WiringDiagram, CliError> {
    match spec {
        Loaded::Wiring(w) => Ok(w.clone()),
        _ => Err(CliError::Input("expected a wiring diagram".into())),
    }
}

/// A rendered report plus whether it refutes what was asked.
pub struct Outcome {
    pub json: Value,
    pub text: String,
    pub refutation: Option<String>,
}

fn outcome<T: Serialize>(report: &T, text: String) -> Outcome {
    Outcome { json: serde_json::to_value(report).expect("reports serialize"), text, refutation: None }
}

#[derive(Serialize)]
struct ValidateReport {
    kind: &'static str,
    valid: bool,
    error: Option<String>,
}

#[derive(Serialize)]
struct AutomorphismReport {
    #[serde(serialize_with = "ser_display")]
    order: usize,
    automorphisms: Vec<Vec<usize>>,
}

#[derive(Serialize)]
struct RealizeReport {
    combinatorics: LineCombinatorics,
    census: Vec<(String, String)>,
    matches_g91: bool,
}

#[derive(Serialize)]
struct AlexanderReport {
    #[serde(serialize_with = "ser_display")]
    generators: usize,
    #[serde(serialize_with = "ser_display")]
    module_relations: usize,
    #[serde(serialize_with = "ser_display")]
    m1_rank: usize,
    pivots: Vec<(usize, usize)>,
    basis: Vec<(usize, usize)>,
    #[serde(serialize_with = "ser_display")]
    jacobi_rank: usize,
    jacobi_torsion_free: bool,
    #[serde(serialize_with = "ser_display")]
    gr1_rank: usize,
}

fn census_text(c: &LineCombinatorics) -> String {
    c.multiplicity_census().iter().rev().map(|(m, k)| format!("{k}x{m}")).collect::<Vec<_>>().join(", ")
}

fn test_text(label: &str, r: &TestReport) -> String {
    let primes: Vec<String> = r.denominator_primes.iter().map(ToString::to_string).collect();
    format!(
        "{label}: {:?}\n  equations: {} raw, {} distinct ({} before canonicalization), {} unknowns\n  rank {} (augmented {}), consistent over Q: {}, solution dim {}\n  denominator primes: {{{}}}, integer solution: {}\n",
        r.verdict,
        r.raw_equation_count,
        r.distinct_equation_count,
        r.exact_distinct_equation_count,
        r.unknown_count,
        r.rank,
        r.augmented_rank,
        r.consistent_over_q,
        r.q_solution_dim,
        primes.join(", "),
        r.integer_solvable,
    )
}

fn presentation_text(p: &Presentation) -> String {
    let mut s = format!("{} generators, {} relations\n", p.n_generators, p.relations.len());
    for r in &p.relations {
        let factors: Vec<String> = r
            .lines
            .iter()
            .zip(&r.conjugators)
            .map(|(l, c)| if c.is_empty() { format!("x{l}") } else { format!("x{l}^{:?}", c.letters()) })
            .collect();
        let _ = writeln!(s, "  [{}]", factors.join(" "));
    }
    s
}

fn theorem_text(t: &TheoremReport) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "rigidity: {}",
        match (&t.rigidity, &t.rigidity_error) {
            (Some(v), _) if v.rigid => "rigid, admissible scalars {+1, -1}".to_string(),
            (_, Some(e)) => format!("failed ({e})"),
            _ => "failed".to_string(),
        }
    );
    let _ = writeln!(s, "automorphisms of the combinatorics: {}", t.automorphism_count);
    s.push_str(&test_text("(G1, +1) -> G2", &t.positive));
    s.push_str(&test_text("(G4, +1) -> G2", &t.negative));
    if !t.failures.is_empty() {
        let _ = writeln!(s, "failed gates: {:?}", t.failures);
    }
    let _ = writeln!(s, "conclusion: {}", if t.conclusion { "the groups are not isomorphic" } else { "not established" });
    s
}

/// Runs one command and renders its report.
pub fn execute(cmd: &Command) -> Result<Outcome, CliError> {
    match cmd {
        Command::Validate(args) => {
            let loaded = resolve(args)?;
            let (kind, res) = match &loaded {
                Loaded::Combinatorics(c) => ("combinatorics", c.validate().map_err(|e| e.to_string())),
                Loaded::Lines(l) => (
                    "lines",
                    incidence_combinatorics(l).map_err(|e| e.to_string()).and_then(|c| c.validate().map_err(|e| e.to_string())),
                ),
                Loaded::Wiring(w) => ("wiring", relations(w).map(|_| ()).map_err(|e| e.to_string())),
            };
            let report = ValidateReport { kind, valid: res.is_ok(), error: res.as_ref().err().cloned() };
            let text = match &res {
                Ok(()) => format!("valid {kind}\n"),
                Err(e) => format!("invalid {kind}: {e}\n"),
            };
            let mut o = outcome(&report, text);
            o.refutation = res.err();
            Ok(o)
        }
        Command::Automorphisms(args) => {
            let c = combinatorics_of(args)?;
            c.validate().map_err(input_err)?;
            let auts = c.automorphisms();
            let report = AutomorphismReport {
                order: auts.len(),
                automorphisms: auts.iter().map(|p| p.images().to_vec()).collect(),
            };
            let mut text = format!("automorphism group of order {}\n", auts.len());
            for p in &auts {
                let _ = writeln!(text, "  {:?}", p.images());
            }
            Ok(outcome(&report, text))
        }
        Command::Pencils(args) => {
            let c = combinatorics_of(args)?;
            c.validate().map_err(input_err)?;
            let table = triangle_table(&c);
            let mut text = format!("{:>3}  {:<22} {:>3} {:>5} {:>5}\n", "i", "lines", "dim", "tri", "tri1");
            for (i, r) in table.rows.iter().enumerate() {
                let lines: Vec<String> = r.lines.iter().map(ToString::to_string).collect();
                let _ = writeln!(
                    text,
                    "{:>3}  {:<22} {:>3} {:>5} {:>5}",
                    i + 1,
                    lines.join(", "),
                    r.dim,
                    r.triangles,
                    r.triangles_through_quintuple
                );
            }
            Ok(outcome::<Vec<TriangleRow>>(&table.rows, text))
        }
        Command::Rigidity(args) => {
            let c = combinatorics_of(args)?;
            c.validate().map_err(input_err)?;
            match rigidity_check(&c) {
                Ok(v) => {
                    let text = format!(
                        "rigid: {} constraints, solution space of dimension {}, admissible scalars {:?}\n",
                        v.constraint_count, v.solution_dim, v.admissible_scalars
                    );
                    Ok(outcome(&v, text))
                }
                Err(e) => {
                    let report = ValidateReport { kind: "rigidity", valid: false, error: Some(e.to_string()) };
                    let mut o = outcome(&report, format!("not rigid: {e}\n"));
                    o.refutation = Some(e.to_string());
                    Ok(o)
                }
            }
        }
        Command::Realize(args) => {
            let lines = match resolve(args)? {
                Loaded::Lines(l) => l,
                _ => return Err(CliError::Input("expected lines".into())),
            };
            let c = incidence_combinatorics(&lines).map_err(input_err)?;
            let report = RealizeReport {
                census: c.multiplicity_census().iter().map(|(m, k)| (m.to_string(), k.to_string())).collect(),
                matches_g91: c.same_points(&builtin_g91()),
                combinatorics: c.clone(),
            };
            let text = format!(
                "{} lines, {} points ({})\nsame combinatorics as g91: {}\n",
                c.n_lines,
                c.points.len(),
                census_text(&c),
                report.matches_g91
            );
            Ok(outcome(&report, text))
        }
        Command::Present(args) => {
            let w = wiring_of(&resolve(args)?)?;
            let p = relations(&w).map_err(input_err)?;
            let text = presentation_text(&p);
            Ok(outcome(&p, text))
        }
        Command::Alexander(args) => {
            let w = wiring_of(&resolve(args)?)?;
            let a = alexander_invariant(&w).map_err(input_err)?;
            let report = AlexanderReport {
                generators: a.n(),
                module_relations: a.vectors.len(),
                m1_rank: a.m1_rank(),
                pivots: a.reduction.pivots.clone(),
                basis: a.reduction.basis.clone(),
                jacobi_rank: a.jacobi_smith.rank,
                jacobi_torsion_free: a.jacobi_smith.is_torsion_free(),
                gr1_rank: a.gr1_rank(),
            };
            let text = format!(
                "{} generators, {} module relations\nrank M1 = {}\nJacobi rank {} ({})\nrank gr1 M2 = {}\n",
                report.generators,
                report.module_relations,
                report.m1_rank,
                report.jacobi_rank,
                if report.jacobi_torsion_free { "torsion free" } else { "with torsion" },
                report.gr1_rank
            );
            Ok(outcome(&report, text))
        }
        Command::AiTest { source, target, expect } => {
            let s = wiring_of(&load(source)?)?;
            let t = wiring_of(&load(target)?)?;
            let (si, ti) = rayon::join(|| alexander_invariant(&s), || alexander_invariant(&t));
            let (report, _, _) = run_test_with(&si.map_err(input_err)?, &ti.map_err(input_err)?).map_err(input_err)?;
            let mut o = outcome(&report, test_text(&format!("{source} -> {target}"), &report));
            let wanted = match expect {
                Some(Expect::Pass) => Some(Verdict::Pass),
                Some(Expect::Fail) => Some(Verdict::Fail),
                None => None,
            };
            if wanted.is_some_and(|v| v != report.verdict) {
                o.refutation = Some(format!("expected {:?}, got {:?}", wanted.unwrap(), report.verdict));
            }
            Ok(o)
        }
        Command::Zariski => {
            let t = theorem_pipeline().map_err(input_err)?;
            let mut o = outcome(&t, theorem_text(&t));
            if !t.conclusion {
                o.refutation = Some(format!("failed gates: {:?}", t.failures));
            }
            Ok(o)
        }
    }
}

/// Parses arguments, runs, writes the report, and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    if let Some(j) = cli.jobs {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(j.max(1)).build_global();
    }
    let o = match execute(&cli.command) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return e.exit_code();
        }
    };
    let body = match cli.format {
        Format::Json => serde_json::to_string_pretty(&o.json).expect("json") + "\n",
        Format::Text => o.text,
    };
    let written = match &cli.output {
        Some(p) => std::fs::write(p, &body).map_err(|e| format!("{}: {e}", p.display())),
        None => {
            print!("{body}");
            Ok(())
        }
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return 2;
    }
    match o.refutation {
        Some(r) => {
            eprintln!("refuted: {r}");
            1
        }
        None => 0,
    }
}
