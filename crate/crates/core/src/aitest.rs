//! The level-2 isomorphism test between two presented groups with the same
//! combinatorics, and the pipeline deciding that the two builtin groups are
//! not isomorphic.
//!
//! A candidate isomorphism inducing the identity on homology sends
//! `x_k ↦ x_k · Π_{(u,v)∈𝓑} [x_u, x_v]^{n_{k,u,v}}` modulo deeper terms.
//! Pushing the relations of the source through it and reading them in the
//! target's `gr¹ M₂` gives an integer linear system in the unknowns
//! `n_{k,u,v}`; the test passes exactly when that system has an integer
//! solution.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::alexander::{
    alexander_invariant, pair_index, sigma_coefficients, AlexanderError, AlexanderInvariant, Coeff, LinForm,
    ModuleVector, ReductionMatrix, TruncSeries,
};
use crate::combinatorics::{builtin_g91, LineCombinatorics};
use crate::exactalg::{ser_big_set, ser_display, solve_integer_system, IntMatrix, SmithDecomposition, SolveReport};
use crate::resonance::{rigidity_check, RigidityVerdict};
use crate::wiring::{builtin_wiring, BuiltinWiring, WiringDiagram};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AiTestError {
    #[error(transparent)]
    Alexander(#[from] AlexanderError),
    #[error("source has {source_n} generators, target {target_n}")]
    GeneratorMismatch { source_n: usize, target_n: usize },
    #[error("source and target have different point sets")]
    CombinatoricsMismatch,
    #[error("degree-0 part of mapped relation {0} does not vanish")]
    DegreeZeroResidue(usize),
    #[error(transparent)]
    Solve(#[from] crate::exactalg::ExactAlgError),
}

/// Index of the unknown `n_{k,l}`, `l` indexing the basis `𝓑`.
pub fn unknown_index(k: usize, l: usize, basis_len: usize) -> usize {
    (k - 1) * basis_len + l
}

/// `Img(x_{i,j}) = x_{i,j} + σ_i Σ_𝓑 n_{j,u,v} x_{u,v} − σ_j Σ_𝓑 n_{i,u,v} x_{u,v}`.
pub fn morphism_image(n: usize, pair: (usize, usize), basis: &[(usize, usize)]) -> ModuleVector<LinForm> {
    let (i, j) = pair;
    let nb = basis.len();
    let mut v: ModuleVector<LinForm> = ModuleVector::zero(n);
    v.entries[pair_index(n, i, j)].c0 = LinForm::constant(1);
    for (l, &(u, w)) in basis.iter().enumerate() {
        let e = &mut v.entries[pair_index(n, u, w)];
        e.linear[i - 1].add_scaled(&LinForm::unknown(unknown_index(j, l, nb)), &BigInt::from(1));
        e.linear[j - 1].add_scaled(&LinForm::unknown(unknown_index(i, l, nb)), &BigInt::from(-1));
    }
    v
}

/// Image `Σ p_c · Img(x_c)` of a module element.
pub fn map_relation(rel: &ModuleVector<BigInt>, images: &[ModuleVector<LinForm>]) -> ModuleVector<LinForm> {
    let n = rel.n;
    let mut out = ModuleVector::zero(n);
    for (p, img) in rel.entries.iter().zip(images) {
        if p.is_zero() {
            continue;
        }
        for (acc, e) in out.entries.iter_mut().zip(&img.entries) {
            if !e.is_zero() {
                acc.add_product(p, e);
            }
        }
    }
    out
}

/// The assembled integer system together with its bookkeeping counts.
#[derive(Clone, Debug)]
pub struct AssembledSystem {
    pub raw_equation_count: usize,
    /// Distinct nonzero equations before canonicalization.
    pub exact_distinct_count: usize,
    pub equations: Vec<LinForm>,
    pub a: IntMatrix,
    pub b: Vec<BigInt>,
    pub unknown_count: usize,
}

/// Pushes every source relation through the candidate morphism, writes it
/// in the target basis, passes to the Jacobi quotient (last columns of
/// `row · V`) and collects the distinct nonzero canonical equations.
pub fn assemble_system(
    source_relations: &[ModuleVector<BigInt>],
    reduction: &ReductionMatrix,
    jacobi: &SmithDecomposition,
    basis: &[(usize, usize)],
) -> Result<AssembledSystem, AiTestError> {
    let n = reduction.n;
    let unknown_count = n * basis.len();
    let images: Vec<ModuleVector<LinForm>> =
        crate::alexander::all_pairs(n).into_iter().map(|p| morphism_image(n, p, basis)).collect();
    let v = &jacobi.v;
    let rows = jacobi.rank..v.cols();

    let projected: Vec<Vec<LinForm>> = source_relations
        .par_iter()
        .enumerate()
        .map(|(r, rel)| {
            let coords: Vec<TruncSeries<LinForm>> = reduction.reduce(&map_relation(rel, &images));
            if coords.iter().any(|c| !c.c0.is_zero_coeff()) {
                return Err(AiTestError::DegreeZeroResidue(r));
            }
            let row = sigma_coefficients(&coords);
            Ok(rows
                .clone()
                .map(|c| {
                    let mut acc = LinForm::default();
                    for (k, f) in row.iter().enumerate() {
                        let m = v.get(k, c);
                        if !m.is_zero() && !f.is_zero_coeff() {
                            acc.add_scaled(f, m);
                        }
                    }
                    acc
                })
                .collect())
        })
        .collect::<Result<_, _>>()?;

    let raw_equation_count = projected.iter().map(Vec::len).sum();
    let exact_distinct_count =
        projected.iter().flatten().filter(|f| !f.is_zero_coeff()).collect::<BTreeSet<&LinForm>>().len();
    let distinct: BTreeSet<LinForm> =
        projected.into_iter().flatten().filter(|f| !f.is_zero_coeff()).map(|f| f.canonical()).collect();
    let equations: Vec<LinForm> = distinct.into_iter().collect();
    let coeff_rows: Vec<Vec<BigInt>> =
        equations.iter().map(|f| (0..unknown_count).map(|u| f.coefficient(u)).collect()).collect();
    let a = IntMatrix::from_rows(unknown_count, &coeff_rows);
    let b = equations.iter().map(|f| -f.constant.clone()).collect();
    Ok(AssembledSystem { raw_equation_count, exact_distinct_count, equations, a, b, unknown_count })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct TestReport {
    #[serde(serialize_with = "ser_display")]
    pub raw_equation_count: usize,
    #[serde(serialize_with = "ser_display")]
    pub exact_distinct_equation_count: usize,
    #[serde(serialize_with = "ser_display")]
    pub distinct_equation_count: usize,
    #[serde(serialize_with = "ser_display")]
    pub unknown_count: usize,
    #[serde(serialize_with = "ser_display")]
    pub rank: usize,
    #[serde(serialize_with = "ser_display")]
    pub augmented_rank: usize,
    pub consistent_over_q: bool,
    #[serde(serialize_with = "ser_display")]
    pub q_solution_dim: usize,
    #[serde(serialize_with = "ser_big_set")]
    pub denominator_primes: BTreeSet<BigInt>,
    pub integer_solvable: bool,
    pub verdict: Verdict,
}

impl TestReport {
    fn from_solve(sys: &AssembledSystem, s: &SolveReport) -> Self {
        TestReport {
            raw_equation_count: sys.raw_equation_count,
            exact_distinct_equation_count: sys.exact_distinct_count,
            distinct_equation_count: sys.equations.len(),
            unknown_count: sys.unknown_count,
            rank: s.rank,
            augmented_rank: s.augmented_rank,
            consistent_over_q: s.consistent_over_q,
            q_solution_dim: s.nullspace_dim,
            denominator_primes: s.denominator_primes.clone(),
            integer_solvable: s.integer_solvable,
            verdict: if s.integer_solvable { Verdict::Pass } else { Verdict::Fail },
        }
    }
}

/// Runs the test for already computed invariants.
pub fn run_test_with(
    source: &AlexanderInvariant,
    target: &AlexanderInvariant,
) -> Result<(TestReport, AssembledSystem, SolveReport), AiTestError> {
    if source.n() != target.n() {
        return Err(AiTestError::GeneratorMismatch { source_n: source.n(), target_n: target.n() });
    }
    if source.presentation.point_sets() != target.presentation.point_sets() {
        return Err(AiTestError::CombinatoricsMismatch);
    }
    let sys = assemble_system(&source.vectors, &target.reduction, &target.jacobi_smith, &target.combinatorial_basis)?;
    let solve = solve_integer_system(&sys.a, &sys.b)?;
    Ok((TestReport::from_solve(&sys, &solve), sys, solve))
}

pub fn run_test(source: &WiringDiagram, target: &WiringDiagram) -> Result<TestReport, AiTestError> {
    let (s, t) = rayon::join(|| alexander_invariant(source), || alexander_invariant(target));
    Ok(run_test_with(&s?, &t?)?.0)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum GateFailure {
    RigidityFailed,
    NontrivialAutomorphisms,
    PositiveTestPassed,
    NegativeTestPassed,
}

#[derive(Clone, Debug, Serialize)]
pub struct TheoremReport {
    pub rigidity: Option<RigidityVerdict>,
    pub rigidity_error: Option<String>,
    #[serde(serialize_with = "ser_display")]
    pub automorphism_count: usize,
    pub positive: TestReport,
    pub negative: TestReport,
    pub failures: Vec<GateFailure>,
    pub conclusion: bool,
}

/// Inputs of the pipeline: the combinatorics, the two sources (the second
/// one models the homology map `−1` through complex conjugation) and the
/// target.
#[derive(Clone, Debug)]
pub struct TheoremInputs {
    pub combinatorics: LineCombinatorics,
    pub source: WiringDiagram,
    pub conjugate_source: WiringDiagram,
    pub target: WiringDiagram,
}

impl Default for TheoremInputs {
    fn default() -> Self {
        let xi1 = builtin_wiring(BuiltinWiring::Xi1);
        TheoremInputs {
            combinatorics: builtin_g91(),
            conjugate_source: xi1.mirror(),
            source: xi1,
            target: builtin_wiring(BuiltinWiring::Xi2),
        }
    }
}

pub fn theorem_pipeline() -> Result<TheoremReport, AiTestError> {
    theorem_pipeline_from(&TheoremInputs::default())
}

/// Rigidity makes any isomorphism act as `±1` on homology up to
/// automorphisms of the combinatorics; with no such automorphisms, the
/// two tests rule out `+1` and `−1`.
pub fn theorem_pipeline_from(inputs: &TheoremInputs) -> Result<TheoremReport, AiTestError> {
    let (rigidity, rigidity_error) = match rigidity_check(&inputs.combinatorics) {
        Ok(v) => (Some(v), None),
        Err(e) => (None, Some(e.to_string())),
    };
    let automorphism_count = inputs.combinatorics.automorphisms().len();

    let invs: Vec<Result<AlexanderInvariant, AlexanderError>> =
        [&inputs.source, &inputs.conjugate_source, &inputs.target].par_iter().map(|w| alexander_invariant(w)).collect();
    let mut invs = invs.into_iter();
    let (src, conj, tgt) = (invs.next().unwrap()?, invs.next().unwrap()?, invs.next().unwrap()?);
    let (pos, neg) = rayon::join(|| run_test_with(&src, &tgt), || run_test_with(&conj, &tgt));
    let (positive, negative) = (pos?.0, neg?.0);

    let mut failures = Vec::new();
    if !rigidity.as_ref().is_some_and(|r| r.rigid) {
        failures.push(GateFailure::RigidityFailed);
    }
    if automorphism_count != 1 {
        failures.push(GateFailure::NontrivialAutomorphisms);
    }
    if positive.verdict == Verdict::Pass {
        failures.push(GateFailure::PositiveTestPassed);
    }
    if negative.verdict == Verdict::Pass {
        failures.push(GateFailure::NegativeTestPassed);
    }
    Ok(TheoremReport {
        rigidity,
        rigidity_error,
        automorphism_count,
        positive,
        negative,
        conclusion: failures.is_empty(),
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_image_at_zero() {
        let basis = vec![(1, 2), (1, 3)];
        let img = morphism_image(3, (2, 3), &basis);
        let zero = vec![BigInt::zero(); 3 * basis.len()];
        for (k, e) in img.entries.iter().enumerate() {
            let expect = if k == pair_index(3, 2, 3) { 1 } else { 0 };
            assert_eq!(e.c0.evaluate(&zero), BigInt::from(expect));
            assert!(e.linear.iter().all(|f| f.evaluate(&zero).is_zero()));
        }
    }

    #[test]
    fn self_test_has_zero_solution() {
        let inv = alexander_invariant(&builtin_wiring(BuiltinWiring::Xi1)).unwrap();
        let (report, sys, solve) = run_test_with(&inv, &inv).unwrap();
        assert!(sys.b.iter().all(Zero::is_zero));
        let zero = vec![BigInt::zero(); sys.unknown_count];
        assert!(sys.equations.iter().all(|f| f.evaluate(&zero).is_zero()));
        assert_eq!(report.verdict, Verdict::Pass);
        assert!(solve.particular_solution.unwrap().iter().all(Zero::is_zero));
    }

    #[test]
    fn generic_combinatorics_fails_rigidity_gate() {
        let mut pts = Vec::new();
        for i in 1..=5 {
            for j in i + 1..=5 {
                pts.push(vec![i, j]);
            }
        }
        let inputs = TheoremInputs { combinatorics: LineCombinatorics::new(5, pts), ..TheoremInputs::default() };
        let r = theorem_pipeline_from(&inputs).unwrap();
        assert!(!r.conclusion);
        assert!(r.failures.contains(&GateFailure::RigidityFailed));
        assert!(r.failures.contains(&GateFailure::NontrivialAutomorphisms));
    }

    #[test]
    fn image_sigma_coefficients() {
        let basis = vec![(1, 2), (1, 3)];
        let img = morphism_image(3, (2, 3), &basis);
        let e = img.get(1, 3);
        assert_eq!(e.linear[1], LinForm::unknown(unknown_index(3, 1, 2)));
        let mut neg = LinForm::unknown(unknown_index(2, 1, 2));
        neg.negate();
        assert_eq!(e.linear[2], neg);
        assert!(e.linear[0].is_zero_coeff());
    }
}

