//! Truncated Alexander invariants.
//!
//! Everything is computed in `Λ/𝔪²`, where `Λ = ℤ[t_1^{±1}, …, t_n^{±1}]` and
//! `𝔪` is the augmentation ideal. Writing `σ_k = t_k − 1`, an element is
//! `c_0 + Σ c_k σ_k`, so `t_k = 1 + σ_k` and `t_k⁻¹ = 1 − σ_k`.
//!
//! The module `M` is generated by the commutator classes `x_{i,j}`,
//! `1 ≤ i < j ≤ n`, ordered lexicographically.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::exactalg::{hermite_form, smith_normal_form, IntMatrix, SmithDecomposition};
use crate::wiring::{relations, Presentation, Relation, WiringDiagram, WiringError};
use crate::words::FreeWord;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlexanderError {
    #[error("pair with equal indices {0} and {1}")]
    EqualIndices(i32, i32),
    #[error("pivot at pair {pair:?} has constant term {constant}, not a unit")]
    NonUnitPivot { pair: (usize, usize), constant: BigInt },
    #[error("expected {expected} independent relations, found {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("the combinatorial pairs do not form a basis of M_1")]
    CombinatorialBasis,
    #[error(transparent)]
    Wiring(#[from] WiringError),
}

/// Coefficients of truncated series: integers or affine forms in the
/// unknowns of the isomorphism test.
pub trait Coeff: Clone + PartialEq + fmt::Debug + Send + Sync {
    fn zero_coeff() -> Self;
    fn is_zero_coeff(&self) -> bool;
    /// `self += k · other`.
    fn add_scaled(&mut self, other: &Self, k: &BigInt);
    fn negate(&mut self);
}

impl Coeff for BigInt {
    fn zero_coeff() -> Self {
        Zero::zero()
    }

    fn is_zero_coeff(&self) -> bool {
        Zero::is_zero(self)
    }

    fn negate(&mut self) {
        *self = -std::mem::take(self);
    }

    fn add_scaled(&mut self, other: &Self, k: &BigInt) {
        if !Zero::is_zero(k) && !Zero::is_zero(other) {
            *self += other * k;
        }
    }
}

/// Affine form `constant + Σ coefficient · n_index`.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinForm {
    pub constant: BigInt,
    pub terms: BTreeMap<usize, BigInt>,
}

impl LinForm {
    pub fn constant(c: impl Into<BigInt>) -> Self {
        LinForm { constant: c.into(), terms: BTreeMap::new() }
    }

    pub fn unknown(index: usize) -> Self {
        LinForm { constant: BigInt::zero(), terms: BTreeMap::from([(index, BigInt::one())]) }
    }

    pub fn coefficient(&self, index: usize) -> BigInt {
        self.terms.get(&index).cloned().unwrap_or_default()
    }

    /// Value at an integer assignment of the unknowns.
    pub fn evaluate(&self, values: &[BigInt]) -> BigInt {
        self.terms.iter().fold(self.constant.clone(), |acc, (i, c)| acc + c * &values[*i])
    }

    /// Divides by the gcd of all coefficients and the constant, then makes
    /// the leading unknown coefficient (or, failing that, the constant)
    /// positive.
    pub fn canonical(&self) -> LinForm {
        use num_integer::Integer;
        let g = self.terms.values().fold(self.constant.clone(), |g, c| g.gcd(c));
        if Zero::is_zero(&g) {
            return self.clone();
        }
        let lead = self.terms.values().next().unwrap_or(&self.constant);
        let g = if lead.is_negative() { -g } else { g };
        LinForm {
            constant: &self.constant / &g,
            terms: self.terms.iter().map(|(i, c)| (*i, c / &g)).collect(),
        }
    }
}

impl fmt::Debug for LinForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.constant)?;
        for (i, c) in &self.terms {
            write!(f, " + {c}·n{i}")?;
        }
        Ok(())
    }
}

impl Coeff for LinForm {
    fn zero_coeff() -> Self {
        LinForm::default()
    }

    fn is_zero_coeff(&self) -> bool {
        Zero::is_zero(&self.constant) && self.terms.is_empty()
    }

    fn negate(&mut self) {
        self.constant.negate();
        self.terms.values_mut().for_each(Coeff::negate);
    }

    fn add_scaled(&mut self, other: &Self, k: &BigInt) {
        if Zero::is_zero(k) {
            return;
        }
        self.constant += &other.constant * k;
        for (i, c) in &other.terms {
            let e = self.terms.entry(*i).or_default();
            *e += c * k;
            if Zero::is_zero(e) {
                self.terms.remove(i);
            }
        }
    }
}

/// `c0 + Σ linear[k] σ_{k+1}` modulo `𝔪²`.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncSeries<C> {
    pub c0: C,
    pub linear: Vec<C>,
}

impl<C: Coeff> TruncSeries<C> {
    pub fn zero(n: usize) -> Self {
        TruncSeries { c0: C::zero_coeff(), linear: vec![C::zero_coeff(); n] }
    }

    pub fn is_zero(&self) -> bool {
        self.c0.is_zero_coeff() && self.linear.iter().all(Coeff::is_zero_coeff)
    }

    pub fn negated(&self) -> Self {
        let mut out = self.clone();
        out.c0.negate();
        out.linear.iter_mut().for_each(Coeff::negate);
        out
    }

    pub fn add_scaled(&mut self, other: &Self, k: &BigInt) {
        self.c0.add_scaled(&other.c0, k);
        for (a, b) in self.linear.iter_mut().zip(&other.linear) {
            a.add_scaled(b, k);
        }
    }

    /// `self += a · b`.
    pub fn add_product(&mut self, a: &TruncSeries<BigInt>, b: &Self) {
        self.c0.add_scaled(&b.c0, &a.c0);
        for k in 0..self.linear.len() {
            self.linear[k].add_scaled(&b.linear[k], &a.c0);
            self.linear[k].add_scaled(&b.c0, &a.linear[k]);
        }
    }

    pub fn scaled_by(&self, a: &TruncSeries<BigInt>) -> Self {
        let mut out = Self::zero(self.linear.len());
        out.add_product(a, self);
        out
    }
}

impl TruncSeries<BigInt> {
    pub fn constant(c: impl Into<BigInt>, n: usize) -> Self {
        TruncSeries { c0: c.into(), linear: vec![BigInt::zero_coeff(); n] }
    }

    pub fn one(n: usize) -> Self {
        Self::constant(1, n)
    }

    /// `σ_k`.
    pub fn sigma(k: usize, n: usize) -> Self {
        let mut s = Self::zero(n);
        s.linear[k - 1] = BigInt::one();
        s
    }

    /// `t_k` for `k > 0`, `t_{|k|}⁻¹` for `k < 0`.
    pub fn t(k: i32, n: usize) -> Self {
        let mut s = Self::one(n);
        s.linear[k.unsigned_abs() as usize - 1] = BigInt::from(k.signum());
        s
    }

    pub fn mul(&self, other: &Self) -> Self {
        other.scaled_by(self)
    }

    /// Inverse of a series whose constant term is ±1.
    pub fn unit_inverse(&self) -> Option<Self> {
        if !self.c0.abs().is_one() {
            return None;
        }
        // (c + L)⁻¹ = c − L when c = ±1
        Some(TruncSeries { c0: self.c0.clone(), linear: self.linear.iter().map(|x| -x).collect() })
    }
}

pub fn pair_count(n: usize) -> usize {
    n * (n - 1) / 2
}

/// Lexicographic index of `(i, j)`, `1 ≤ i < j ≤ n`.
pub fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(1 <= i && i < j && j <= n);
    (i - 1) * (2 * n - i) / 2 + (j - i - 1)
}

pub fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect()
}

/// Element of `M ⊗ Λ/𝔪²`, one truncated series per pair.
#[derive(Clone, Debug, PartialEq)]
pub struct ModuleVector<C> {
    pub n: usize,
    pub entries: Vec<TruncSeries<C>>,
}

impl<C: Coeff> ModuleVector<C> {
    pub fn zero(n: usize) -> Self {
        ModuleVector { n, entries: vec![TruncSeries::zero(n); pair_count(n)] }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(TruncSeries::is_zero)
    }

    pub fn get(&self, i: usize, j: usize) -> &TruncSeries<C> {
        &self.entries[pair_index(self.n, i, j)]
    }

    pub fn add_scaled(&mut self, other: &Self, k: &BigInt) {
        for (a, b) in self.entries.iter_mut().zip(&other.entries) {
            a.add_scaled(b, k);
        }
    }

    pub fn scaled_by(&self, a: &TruncSeries<BigInt>) -> Self {
        ModuleVector { n: self.n, entries: self.entries.iter().map(|e| e.scaled_by(a)).collect() }
    }
}

impl ModuleVector<BigInt> {
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        let mut v = Self::zero(n);
        v.entries[pair_index(n, i, j)] = TruncSeries::one(n);
        v
    }

    /// Constant terms, one per pair.
    pub fn constant_part(&self) -> Vec<BigInt> {
        self.entries.iter().map(|e| e.c0.clone()).collect()
    }
}

/// `x_{i,j}` for signed indices as `(pair index, coefficient)`:
/// `x_{−i,j} = −t_i⁻¹ x_{i,j}`, `x_{i,−j} = −t_j⁻¹ x_{i,j}`,
/// `x_{−i,−j} = t_i⁻¹ t_j⁻¹ x_{i,j}` and `x_{j,i} = −x_{i,j}`.
fn signed_pair_term(n: usize, i: i32, j: i32) -> Result<(usize, TruncSeries<BigInt>), AlexanderError> {
    let (a, b) = (i.unsigned_abs() as usize, j.unsigned_abs() as usize);
    if a == b {
        return Err(AlexanderError::EqualIndices(i, j));
    }
    let mut c = TruncSeries::one(n);
    if i < 0 {
        c = c.mul(&TruncSeries::t(i, n)).negated();
    }
    if j < 0 {
        c = c.mul(&TruncSeries::t(j, n)).negated();
    }
    if a > b {
        return Ok((pair_index(n, b, a), c.negated()));
    }
    Ok((pair_index(n, a, b), c))
}

pub fn signed_pair(n: usize, i: i32, j: i32) -> Result<ModuleVector<BigInt>, AlexanderError> {
    let (idx, c) = signed_pair_term(n, i, j)?;
    let mut v = ModuleVector::zero(n);
    v.entries[idx] = c;
    Ok(v)
}

/// Class of `[x_a, w]` in `M_2`, from
/// `[x_a, ℓ·rest] = x_{a,ℓ} + t_ℓ·[x_a, rest]` and `x_{a,±a} = 0`.
pub fn comm_expand(n: usize, a: i32, w: &FreeWord) -> ModuleVector<BigInt> {
    let mut out = ModuleVector::zero(n);
    let mut prefix = TruncSeries::one(n);
    for &l in w.letters() {
        if l.abs() != a.abs() {
            let (idx, c) = signed_pair_term(n, a, l).expect("distinct indices");
            out.entries[idx].add_product(&prefix, &c);
        }
        prefix = prefix.mul(&TruncSeries::t(l, n));
    }
    out
}

/// Module relations coming from one point relation: after rotating the
/// minimal label to the front, for each factor `f_j = x_{i_j}^{w_j}`,
/// `j ≥ 2`, the class of `[x_{i_j}, w_j · f_{j+1} ⋯ f_r f_1 ⋯ f_{j−1} · w_j⁻¹]`.
pub fn point_relations(n: usize, rel: &Relation) -> Vec<ModuleVector<BigInt>> {
    let r = rel.lines.len();
    let mn = (0..r).min_by_key(|&k| rel.lines[k]).unwrap_or(0);
    let lines: Vec<usize> = rel.lines[mn..].iter().chain(&rel.lines[..mn]).copied().collect();
    let conj: Vec<FreeWord> = rel.conjugators[mn..].iter().chain(&rel.conjugators[..mn]).cloned().collect();
    let factors: Vec<FreeWord> = lines
        .iter()
        .zip(&conj)
        .map(|(&l, c)| FreeWord::generator(n, l as i32).expect("label in range").conjugate_by(c))
        .collect();
    (1..r)
        .map(|j| {
            let others = factors[j + 1..].iter().chain(&factors[..j]);
            let prod = others.fold(FreeWord::identity(n), |acc, f| acc.mul(f));
            let w = conj[j].mul(&prod).mul(&conj[j].inverse());
            comm_expand(n, lines[j] as i32, &w)
        })
        .collect()
}

pub fn presentation_vectors(p: &Presentation) -> Vec<ModuleVector<BigInt>> {
    p.relations.iter().flat_map(|r| point_relations(p.n_generators, r)).collect()
}

/// Pairs `(i, j)` that are not of the form `(min P, j)`, `j ∈ P`, for a
/// point `P` of the presentation.
pub fn combinatorial_basis(p: &Presentation) -> Vec<(usize, usize)> {
    let n = p.n_generators;
    let mut dependent = vec![false; pair_count(n)];
    for s in p.point_sets() {
        for &j in &s[1..] {
            dependent[pair_index(n, s[0], j)] = true;
        }
    }
    all_pairs(n).into_iter().filter(|&(i, j)| !dependent[pair_index(n, i, j)]).collect()
}

/// Expression of every `x_{i,j}` through the basis pairs, valid in `M_2`.
#[derive(Clone, Debug, Serialize)]
pub struct ReductionMatrix {
    pub n: usize,
    pub pivots: Vec<(usize, usize)>,
    pub basis: Vec<(usize, usize)>,
    #[serde(skip)]
    pub rows: Vec<Vec<TruncSeries<BigInt>>>,
}

impl ReductionMatrix {
    /// Coordinates of `v` in the basis pairs.
    pub fn reduce<C: Coeff>(&self, v: &ModuleVector<C>) -> Vec<TruncSeries<C>> {
        self.rows
            .iter()
            .map(|row| {
                let mut acc = TruncSeries::zero(self.n);
                for (s, e) in row.iter().zip(&v.entries) {
                    if !s.is_zero() && !e.is_zero() {
                        acc.add_product(s, e);
                    }
                }
                acc
            })
            .collect()
    }
}

/// Solves the point relations for the pivot pairs.
///
/// The constant-term matrix is brought to Hermite form by a unimodular
/// transform, which is then applied to the full truncated matrix. Each
/// pivot row is divided by its (unit) pivot series and cleared from the
/// other rows.
pub fn reduction_matrix(n: usize, vectors: &[ModuleVector<BigInt>]) -> Result<ReductionMatrix, AlexanderError> {
    let np = pair_count(n);
    let constants: Vec<Vec<BigInt>> = vectors.iter().map(ModuleVector::constant_part).collect();
    let u0 = IntMatrix::from_rows(np, &constants);
    let ech = hermite_form(&u0);
    let rank = ech.rank();
    if rank != vectors.len() {
        return Err(AlexanderError::RankMismatch { expected: vectors.len(), found: rank });
    }

    let mut u1: Vec<Vec<TruncSeries<BigInt>>> = (0..vectors.len())
        .map(|i| {
            let mut row = vec![TruncSeries::zero(n); np];
            for (k, v) in vectors.iter().enumerate() {
                let b = ech.transform.get(i, k);
                if b.is_zero_coeff() {
                    continue;
                }
                for (acc, e) in row.iter_mut().zip(&v.entries) {
                    acc.add_scaled(e, b);
                }
            }
            row
        })
        .collect();

    for (i, &j) in ech.pivot_cols.iter().enumerate() {
        let inv = u1[i][j].unit_inverse().ok_or_else(|| AlexanderError::NonUnitPivot {
            pair: all_pairs(n)[j],
            constant: u1[i][j].c0.clone(),
        })?;
        u1[i] = u1[i].iter().map(|e| e.scaled_by(&inv)).collect();
        let pivot_row = u1[i].clone();
        for (k, row) in u1.iter_mut().enumerate() {
            if k == i || row[j].is_zero() {
                continue;
            }
            let f = row[j].negated();
            for (acc, p) in row.iter_mut().zip(&pivot_row) {
                acc.add_product(&f, p);
            }
        }
    }

    let pairs = all_pairs(n);
    let is_pivot: Vec<bool> = (0..np).map(|c| ech.pivot_cols.contains(&c)).collect();
    let basis_cols: Vec<usize> = (0..np).filter(|&c| !is_pivot[c]).collect();
    let rows = basis_cols
        .iter()
        .map(|&b| {
            let mut row = vec![TruncSeries::zero(n); np];
            row[b] = TruncSeries::one(n);
            for (i, &p) in ech.pivot_cols.iter().enumerate() {
                row[p] = u1[i][b].negated();
            }
            row
        })
        .collect();
    Ok(ReductionMatrix {
        n,
        pivots: ech.pivot_cols.iter().map(|&c| pairs[c]).collect(),
        basis: basis_cols.iter().map(|&c| pairs[c]).collect(),
        rows,
    })
}

/// Checks that `basis` spans `M_1`: the constant-term relation matrix
/// restricted to the complementary pairs must be unimodular.
pub fn is_m1_basis(n: usize, vectors: &[ModuleVector<BigInt>], basis: &[(usize, usize)]) -> bool {
    let np = pair_count(n);
    let rest: Vec<usize> = (0..np).filter(|&c| !basis.iter().any(|&(i, j)| pair_index(n, i, j) == c)).collect();
    if rest.len() != vectors.len() {
        return false;
    }
    let constants: Vec<Vec<BigInt>> = vectors.iter().map(ModuleVector::constant_part).collect();
    let m = IntMatrix::from_rows(np, &constants).select_columns(&rest);
    m.determinant().abs().is_one()
}

/// Jacobi relations `σ_i x_{j,k} + σ_j x_{k,i} + σ_k x_{i,j}`, `i < j < k`,
/// reduced to the basis; columns are `σ_k x_b` at `b · n + (k − 1)`.
pub fn jacobi_matrix(red: &ReductionMatrix) -> IntMatrix {
    let n = red.n;
    let nb = red.basis.len();
    let mut rows = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            for k in j + 1..=n {
                let mut v: ModuleVector<BigInt> = ModuleVector::zero(n);
                v.entries[pair_index(n, j, k)] = TruncSeries::sigma(i, n);
                v.entries[pair_index(n, i, k)].add_scaled(&TruncSeries::sigma(j, n), &BigInt::from(-1));
                v.entries[pair_index(n, i, j)] = TruncSeries::sigma(k, n);
                rows.push(sigma_coefficients(&red.reduce(&v)));
            }
        }
    }
    IntMatrix::from_rows(nb * n, &rows)
}

/// Flattens basis coordinates into their `σ` coefficients, basis-major.
pub fn sigma_coefficients<C: Coeff>(coords: &[TruncSeries<C>]) -> Vec<C> {
    coords.iter().flat_map(|s| s.linear.iter().cloned()).collect()
}

/// The truncated invariants of one wiring diagram.
#[derive(Clone, Debug)]
pub struct AlexanderInvariant {
    pub presentation: Presentation,
    pub vectors: Vec<ModuleVector<BigInt>>,
    pub reduction: ReductionMatrix,
    pub combinatorial_basis: Vec<(usize, usize)>,
    pub jacobi: IntMatrix,
    pub jacobi_smith: SmithDecomposition,
}

impl AlexanderInvariant {
    pub fn n(&self) -> usize {
        self.presentation.n_generators
    }

    pub fn m1_rank(&self) -> usize {
        self.reduction.basis.len()
    }

    pub fn gr1_rank(&self) -> usize {
        self.jacobi.cols() - self.jacobi_smith.rank
    }
}

pub fn alexander_invariant(w: &WiringDiagram) -> Result<AlexanderInvariant, AlexanderError> {
    let presentation = relations(w)?;
    let n = presentation.n_generators;
    let vectors: Vec<ModuleVector<BigInt>> =
        presentation.relations.par_iter().flat_map_iter(|r| point_relations(n, r)).collect();
    let reduction = reduction_matrix(n, &vectors)?;
    let combinatorial_basis = combinatorial_basis(&presentation);
    if combinatorial_basis.len() != reduction.basis.len() || !is_m1_basis(n, &vectors, &combinatorial_basis) {
        return Err(AlexanderError::CombinatorialBasis);
    }
    let jacobi = jacobi_matrix(&reduction);
    let jacobi_smith = smith_normal_form(&jacobi);
    Ok(AlexanderInvariant { presentation, vectors, reduction, combinatorial_basis, jacobi, jacobi_smith })
}

pub fn m1_rank(w: &WiringDiagram) -> Result<usize, AlexanderError> {
    let p = relations(w)?;
    let n = p.n_generators;
    Ok(reduction_matrix(n, &presentation_vectors(&p))?.basis.len())
}

pub fn gr1_rank(w: &WiringDiagram) -> Result<usize, AlexanderError> {
    Ok(alexander_invariant(w)?.gr1_rank())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wiring::{builtin_wiring, BuiltinWiring};

    fn series(c0: i64, lin: &[i64]) -> TruncSeries<BigInt> {
        TruncSeries { c0: c0.into(), linear: lin.iter().map(|&x| x.into()).collect() }
    }

    #[test]
    fn pair_indexing() {
        let n = 11;
        for (k, (i, j)) in all_pairs(n).into_iter().enumerate() {
            assert_eq!(pair_index(n, i, j), k);
        }
        assert_eq!(all_pairs(n).len(), 55);
    }

    #[test]
    fn signed_pairs() {
        let n = 3;
        assert_eq!(signed_pair(n, 1, 2).unwrap(), ModuleVector::unit(n, 1, 2));
        let v = signed_pair(n, -1, 2).unwrap();
        assert_eq!(v.get(1, 2), &series(-1, &[1, 0, 0]));
        let w = signed_pair(n, 2, 1).unwrap();
        assert_eq!(w.get(1, 2), &series(-1, &[0, 0, 0]));
        let z = signed_pair(n, -1, -2).unwrap();
        assert_eq!(z.get(1, 2), &series(1, &[-1, -1, 0]));
        assert_eq!(signed_pair(n, 2, -2), Err(AlexanderError::EqualIndices(2, -2)));
    }

    #[test]
    fn commutator_expansion() {
        let n = 3;
        let w = |l: &[i32]| FreeWord::new(n, l.iter().copied()).unwrap();
        assert_eq!(comm_expand(n, 1, &w(&[2])), ModuleVector::unit(n, 1, 2));
        let v = comm_expand(n, 1, &w(&[2, 3]));
        assert_eq!(v.get(1, 2), &series(1, &[0, 0, 0]));
        assert_eq!(v.get(1, 3), &series(1, &[0, 1, 0]));
        assert!(comm_expand(n, 1, &w(&[2, -2])).is_zero());
    }

    #[test]
    fn double_point_relation() {
        let rel = Relation { lines: vec![1, 2], conjugators: vec![FreeWord::identity(2), FreeWord::identity(2)] };
        let v = point_relations(2, &rel);
        assert_eq!(v.len(), 1);
        // [x_2, x_1] = −x_{1,2}
        assert_eq!(v[0].get(1, 2), &series(-1, &[0, 0]));
    }

    #[test]
    fn linform_canonical() {
        let mut f = LinForm::constant(-4);
        f.terms.insert(3, BigInt::from(-6));
        f.terms.insert(7, BigInt::from(2));
        let c = f.canonical();
        assert_eq!(c.constant, BigInt::from(2));
        assert_eq!(c.coefficient(3), BigInt::from(3));
        assert_eq!(c.coefficient(7), BigInt::from(-1));
        assert_eq!(c.canonical(), c);
    }

    #[test]
    fn builtin_ranks() {
        for w in [builtin_wiring(BuiltinWiring::Xi1), builtin_wiring(BuiltinWiring::Xi2)] {
            let a = alexander_invariant(&w).unwrap();
            assert_eq!(a.vectors.len(), 32);
            assert_eq!(a.m1_rank(), 23);
            assert_eq!(a.jacobi.rows(), 165);
            assert_eq!(a.jacobi.cols(), 253);
            assert_eq!(a.jacobi_smith.rank, 162);
            assert!(a.jacobi_smith.is_torsion_free());
            assert_eq!(a.gr1_rank(), 91);
            for v in &a.vectors {
                assert!(a.reduction.reduce(v).iter().all(TruncSeries::is_zero));
            }
        }
    }
}
