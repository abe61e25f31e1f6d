//! End-to-end acceptance run: one PASS/FAIL line per criterion.

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::sync::OnceLock;

use arrtop::aitest::{run_test_with, Verdict};
use arrtop::alexander::{alexander_invariant, AlexanderInvariant, TruncSeries};
use arrtop::combinatorics::{builtin_g91, builtin_g91_prime};
use arrtop::exactalg::{smith_normal_form, IntMatrix};
use arrtop::realization::{builtin_a91, incidence_combinatorics};
use arrtop::resonance::{quadruple_fingerprints, rigidity_check, triangle_table, PencilKind};
use arrtop::wiring::{builtin_wiring, relations, BuiltinWiring, LINE_AT_INFINITY};
use arrtop::words::{braid_act, BraidWord, FreeWord, Perm};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn invariants() -> &'static [AlexanderInvariant; 3] {
    static CELL: OnceLock<[AlexanderInvariant; 3]> = OnceLock::new();
    CELL.get_or_init(|| {
        let x1 = builtin_wiring(BuiltinWiring::Xi1);
        [
            alexander_invariant(&x1).unwrap(),
            alexander_invariant(&builtin_wiring(BuiltinWiring::Xi2)).unwrap(),
            alexander_invariant(&x1.mirror()).unwrap(),
        ]
    })
}

fn combinatorics() -> Check {
    let g = builtin_g91();
    g.validate().map_err(|e| e.to_string())?;
    let census: Vec<(usize, usize)> = g.multiplicity_census().into_iter().collect();
    ensure!(census == [(2, 17), (3, 5), (4, 4), (5, 1)], "census {census:?}");
    let aut = g.automorphisms();
    ensure!(aut.len() == 1 && aut[0].is_identity(), "Aut(g91) has order {}", aut.len());

    let h = builtin_g91_prime();
    let aut = h.automorphisms();
    ensure!(aut.len() == 4, "Aut(g91') has order {}", aut.len());
    let gen = Perm::from_cycles(11, &[&[1, 2, 3, 4], &[7, 8, 9, 10], &[5, 6]]).unwrap();
    ensure!(aut.contains(&gen), "generator missing");
    let mut p = Perm::identity(11);
    let mut powers = Vec::new();
    for _ in 0..4 {
        powers.push(p.clone());
        p = p.then(&gen);
    }
    powers.sort();
    let mut sorted = aut.clone();
    sorted.sort();
    ensure!(powers == sorted && p.is_identity(), "group is not generated by the 4-cycle");
    Ok("census 1x5 4x4 5x3 17x2, |Aut| = 1, |Aut'| = 4".into())
}

fn realizations() -> Check {
    let g = builtin_g91();
    for i in 1..=4 {
        let c = incidence_combinatorics(&builtin_a91(i).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        ensure!(c.canonical_points() == g.canonical_points(), "a91-{i} differs");
    }
    Ok("all four conjugates realize g91".into())
}

const TABLE: [(&[usize], usize, usize, usize); 25] = [
    (&[1, 7, 11], 2, 18, 7),
    (&[3, 9, 11], 2, 22, 8),
    (&[4, 10, 11], 2, 21, 7),
    (&[5, 8, 10], 2, 24, 7),
    (&[6, 7, 9], 2, 16, 6),
    (&[1, 2, 6, 10], 3, 53, 12),
    (&[2, 3, 5, 7], 3, 49, 13),
    (&[2, 8, 11, 12], 3, 57, 15),
    (&[3, 4, 6, 8], 3, 50, 12),
    (&[1, 4, 5, 9, 12], 4, 91, 91),
    (&[1, 2, 3, 4, 5, 6], 2, 24, 8),
    (&[1, 2, 4, 6, 8, 12], 2, 24, 8),
    (&[1, 2, 4, 10, 11, 12], 2, 20, 7),
    (&[1, 2, 5, 6, 7, 9], 2, 14, 7),
    (&[1, 2, 5, 7, 11, 12], 2, 14, 7),
    (&[1, 2, 5, 8, 10, 12], 2, 20, 8),
    (&[1, 3, 5, 7, 9, 11], 2, 14, 7),
    (&[1, 4, 5, 6, 8, 10], 2, 19, 6),
    (&[2, 3, 4, 5, 8, 12], 2, 20, 8),
    (&[2, 3, 5, 6, 8, 10], 2, 14, 0),
    (&[2, 3, 5, 9, 11, 12], 2, 18, 9),
    (&[2, 4, 6, 8, 10, 11], 2, 15, 0),
    (&[3, 4, 5, 6, 7, 9], 2, 12, 6),
    (&[3, 4, 8, 9, 11, 12], 2, 13, 7),
    (&[4, 5, 8, 10, 11, 12], 2, 15, 7),
];

fn table() -> Check {
    let t = triangle_table(&builtin_g91());
    let points = t.rows.iter().filter(|r| r.kind == PencilKind::MultiplePoint).count();
    let ceva = t.rows.iter().filter(|r| r.kind == PencilKind::Ceva).count();
    ensure!((points, ceva) == (10, 15), "{points} multiple points, {ceva} Ceva pencils");
    let mut matched = 0;
    for &(lines, dim, tri, through) in &TABLE {
        let row = t.rows.iter().find(|r| r.lines == lines).ok_or(format!("missing {lines:?}"))?;
        let got = (row.dim, row.triangles, row.triangles_through_quintuple);
        ensure!(got == (dim, tri, through), "{lines:?}: got {got:?}, want {:?}", (dim, tri, through));
        matched += 3;
    }
    Ok(format!("{matched}/75 numbers match"))
}

fn rigidity() -> Check {
    let v = rigidity_check(&builtin_g91()).map_err(|e| e.to_string())?;
    ensure!(v.rigid && v.admissible_scalars == [1, -1], "{v:?}");
    let fp = quadruple_fingerprints(&triangle_table(&builtin_g91()));
    ensure!(fp == [(53, 12), (49, 13), (57, 15), (50, 12)], "fingerprints {fp:?}");
    Ok(format!("rigid, scalars {{1, -1}}, fingerprints {fp:?}"))
}

fn presentations() -> Check {
    let mut profiles = Vec::new();
    for w in [BuiltinWiring::Xi1, BuiltinWiring::Xi2] {
        let d = builtin_wiring(w);
        let p = relations(&d).map_err(|e| e.to_string())?;
        ensure!(p.n_generators == 11 && p.relations.len() == 22, "{w:?}: {} gens, {} rels", p.n_generators, p.relations.len());
        ensure!(p.relator_count() == 32, "{w:?}: {} relators", p.relator_count());
        ensure!(p.abelianization() == (11, vec![]), "{w:?}: abelianization {:?}", p.abelianization());
        profiles.push(d.crossing_combinatorics());
    }
    ensure!(profiles[0] == profiles[1], "crossing multisets differ");
    Ok("11 generators, 22 relations, 32 relators, H1 = Z^11".into())
}

fn alexander_ranks() -> Check {
    let affine: usize =
        builtin_g91().points.iter().filter(|p| !p.contains(&LINE_AT_INFINITY)).map(|p| p.len() - 1).sum();
    let oracle = 55 - affine;
    for (name, a) in ["xi1", "xi2", "mirror(xi1)"].iter().zip(invariants()) {
        ensure!(a.m1_rank() == 23 && a.m1_rank() == oracle, "{name}: m1 {} oracle {oracle}", a.m1_rank());
        ensure!(a.gr1_rank() == 91, "{name}: gr1 {}", a.gr1_rank());
        ensure!(a.jacobi_smith.rank == 162 && a.jacobi_smith.is_torsion_free(), "{name}: jacobi");
    }
    Ok(format!("m1 = 23 (oracle {oracle}), gr1 = 91, Jacobi rank 162 torsion-free"))
}

fn ai_xi1_xi2() -> Check {
    let [x1, x2, _] = invariants();
    let (r, _, _) = run_test_with(x1, x2).map_err(|e| e.to_string())?;
    ensure!(r.raw_equation_count == 2912, "raw {}", r.raw_equation_count);
    ensure!(r.unknown_count == 253, "unknowns {}", r.unknown_count);
    ensure!(r.consistent_over_q && r.q_solution_dim == 12, "Q-solution dim {}", r.q_solution_dim);
    ensure!(r.denominator_primes == [BigInt::from(5)].into(), "primes {:?}", r.denominator_primes);
    ensure!(!r.integer_solvable && r.verdict == Verdict::Fail, "verdict {:?}", r.verdict);
    Ok(format!(
        "2912 raw, {} distinct (930 expected; verdict governs), 253 unknowns, dim 12, primes {{5}}, Fail",
        r.distinct_equation_count
    ))
}

fn ai_mirror_xi2() -> Check {
    let [_, x2, m] = invariants();
    let (r, _, _) = run_test_with(m, x2).map_err(|e| e.to_string())?;
    ensure!(r.verdict == Verdict::Fail, "verdict {:?}", r.verdict);
    ensure!(r.denominator_primes == [BigInt::from(5)].into(), "primes {:?}", r.denominator_primes);
    Ok("Fail, denominators powers of 5".into())
}

fn letters(rank: i32, len: usize) -> impl Strategy<Value = Vec<i32>> {
    prop::collection::vec((1..=rank, any::<bool>()).prop_map(|(k, s)| if s { -k } else { k }), 0..len)
}

fn controls() -> Check {
    let [x1, _, _] = invariants();
    let (r, sys, _) = run_test_with(x1, x1).map_err(|e| e.to_string())?;
    ensure!(r.verdict == Verdict::Pass, "self test {:?}", r.verdict);
    ensure!(sys.b.iter().all(Zero::is_zero), "zero is not a solution");

    let cases = 256;
    let mut runner = TestRunner::new(Config { failure_persistence: None, ..Config::with_cases(cases) });
    let mut suites: BTreeMap<&str, bool> = BTreeMap::new();

    let braid = runner.run(&(1..4i32, letters(5, 12)), |(i, w)| {
        let w = FreeWord::new(5, w).unwrap();
        let act = |l: Vec<i32>| braid_act(&BraidWord::new(5, l).unwrap(), &w).unwrap();
        prop_assert_eq!(act(vec![i, i + 1, i]), act(vec![i + 1, i, i + 1]));
        prop_assert_eq!(act(vec![i, -i]), w.clone());
        if i + 2 <= 4 {
            prop_assert_eq!(act(vec![i, i + 2]), act(vec![i + 2, i]));
        }
        Ok(())
    });
    suites.insert("braid relations", braid.is_ok());

    let series = (-9i64..=9, prop::collection::vec(-9i64..=9, 3))
        .prop_map(|(c, l)| TruncSeries { c0: BigInt::from(c), linear: l.into_iter().map(BigInt::from).collect() });
    let ring = runner.run(&(series.clone(), series.clone(), series), |(a, b, c)| {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&TruncSeries::one(3)), a.clone());
        prop_assert_eq!(TruncSeries::t(2, 3).mul(&TruncSeries::t(-2, 3)), TruncSeries::one(3));
        Ok(())
    });
    suites.insert("truncated ring", ring.is_ok());

    let matrices = (1usize..=5, 1usize..=5).prop_flat_map(|(r, c)| {
        prop::collection::vec(-9i64..=9, r * c)
            .prop_map(move |d| IntMatrix::from_vec(r, c, d.into_iter().map(BigInt::from).collect()))
    });
    let snf = runner.run(&matrices, |m| {
        let s = smith_normal_form(&m);
        prop_assert_eq!(s.u.mul(&m).mul(&s.v), s.d.clone());
        prop_assert!(s.u.determinant().abs() == BigInt::from(1) && s.v.determinant().abs() == BigInt::from(1));
        let f = s.invariant_factors();
        prop_assert!(f.windows(2).all(|w| (&w[1] % &w[0]).is_zero()));
        Ok(())
    });
    suites.insert("Smith form", snf.is_ok());

    let reduction = runner.run(&(letters(3, 30), letters(3, 30)), |(a, b)| {
        let wa = FreeWord::new(3, a.clone()).unwrap();
        prop_assert!(wa.letters().windows(2).all(|p| p[0] != -p[1]));
        prop_assert!(wa.mul(&wa.inverse()).is_empty());
        let wb = FreeWord::new(3, b.clone()).unwrap();
        prop_assert_eq!(wa.mul(&wb), FreeWord::new(3, a.into_iter().chain(b)).unwrap());
        Ok(())
    });
    suites.insert("free reduction", reduction.is_ok());

    let failed: Vec<&str> = suites.iter().filter(|(_, ok)| !**ok).map(|(k, _)| *k).collect();
    ensure!(failed.is_empty(), "property suites failed: {failed:?}");
    Ok(format!("self test passes at 0; {} property suites x {cases} cases", suites.len()))
}

fn theorem() -> Check {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let out = dir.path().join("zariski.json");
    let code = arrtop::cli::run(["arrtop", "--format", "json", "--output", out.to_str().unwrap(), "zariski"]);
    ensure!(code == 0, "exit code {code}");
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&out).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    ensure!(report["conclusion"] == true, "conclusion {}", report["conclusion"]);
    Ok("conclusion: the two groups are not isomorphic".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("combinatorics", combinatorics),
        ("realizations", realizations),
        ("pencil table", table),
        ("rigidity", rigidity),
        ("presentations", presentations),
        ("alexander ranks", alexander_ranks),
        ("ai test xi1 -> xi2", ai_xi1_xi2),
        ("ai test mirror -> xi2", ai_mirror_xi2),
        ("controls", controls),
        ("theorem", theorem),
    ];
    let mut failures = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let result = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        match result {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(why) => {
                failures += 1;
                println!("FAIL {:>2} {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
