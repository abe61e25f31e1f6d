//! Exact linear algebra over the integers and the rationals.
//!
//! Everything here works on arbitrary-precision entries. The two workhorses
//! are the fraction-free (Bareiss) echelon form and the Smith normal form;
//! [`solve_integer_system`] combines them into the solvability diagnostics
//! used by the AI-isomorphism test.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExactAlgError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
}

/// Dense integer matrix, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from rows; all rows must have length `cols`.
    pub fn from_rows<T: Into<BigInt> + Clone>(cols: usize, rows: &[Vec<T>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged row");
            data.extend(r.iter().cloned().map(Into::into));
        }
        IntMatrix { rows: rows.len(), cols, data }
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<BigInt>) -> Self {
        assert_eq!(data.len(), rows * cols);
        IntMatrix { rows, cols, data }
    }

    pub fn diagonal<T: Into<BigInt> + Clone>(entries: &[T]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, e) in entries.iter().enumerate() {
            m.data[i * n + i] = e.clone().into();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [BigInt] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "incompatible product");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Appends `b` as an extra column.
    pub fn augment(&self, b: &[BigInt]) -> IntMatrix {
        assert_eq!(self.rows, b.len());
        let mut data = Vec::with_capacity(self.rows * (self.cols + 1));
        for (i, x) in b.iter().enumerate() {
            data.extend_from_slice(self.row(i));
            data.push(x.clone());
        }
        IntMatrix { rows: self.rows, cols: self.cols + 1, data }
    }

    pub fn select_columns(&self, cols: &[usize]) -> IntMatrix {
        let mut data = Vec::with_capacity(self.rows * cols.len());
        for i in 0..self.rows {
            for &j in cols {
                data.push(self.get(i, j).clone());
            }
        }
        IntMatrix { rows: self.rows, cols: cols.len(), data }
    }

    pub fn rank(&self) -> usize {
        echelon_division_free(self).pivot_cols.len()
    }

    /// Determinant of a square matrix, computed fraction-free.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !a.get(i, k).is_zero()) else {
                return BigInt::zero();
            };
            if p != k {
                a.swap_rows(p, k);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (a.get(k, k) * a.get(i, j) - a.get(i, k) * a.get(k, j)) / &prev;
                    a.set(i, j, v);
                }
                a.set(i, k, BigInt::zero());
            }
            prev = a.get(k, k).clone();
        }
        sign * prev
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let c = self.cols;
        let (lo, hi) = (a.min(b), a.max(b));
        let (head, tail) = self.data.split_at_mut(hi * c);
        head[lo * c..(lo + 1) * c].swap_with_slice(&mut tail[..c]);
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[target] += factor * row[source]
    fn add_row_multiple(&mut self, target: usize, source: usize, factor: &BigInt) {
        if factor.is_zero() {
            return;
        }
        let c = self.cols;
        let (t, s) = two_rows(&mut self.data, c, target, source);
        for (x, y) in t.iter_mut().zip(s.iter()) {
            if !y.is_zero() {
                *x += factor * y;
            }
        }
    }

    /// col[target] += factor * col[source]
    fn add_col_multiple(&mut self, target: usize, source: usize, factor: &BigInt) {
        if factor.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let s = &self.data[i * self.cols + source];
            if !s.is_zero() {
                let v = factor * s;
                self.data[i * self.cols + target] += v;
            }
        }
    }

    fn negate_row(&mut self, i: usize) {
        for x in self.row_mut(i) {
            *x = -std::mem::take(x);
        }
    }
}

fn two_rows(data: &mut [BigInt], cols: usize, target: usize, source: usize) -> (&mut [BigInt], &[BigInt]) {
    assert_ne!(target, source);
    if target < source {
        let (head, tail) = data.split_at_mut(source * cols);
        (&mut head[target * cols..(target + 1) * cols], &tail[..cols])
    } else {
        let (head, tail) = data.split_at_mut(target * cols);
        (&mut tail[..cols], &head[source * cols..(source + 1) * cols])
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let r: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", r.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Serialized form: every entry as a decimal string.
impl Serialize for IntMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> =
            (0..self.rows).map(|i| self.row(i).iter().map(ToString::to_string).collect()).collect();
        rows.serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let rows: Vec<Vec<String>> = Vec::deserialize(d)?;
        let cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::new();
        for r in &rows {
            if r.len() != cols {
                return Err(D::Error::custom("ragged matrix"));
            }
            for e in r {
                data.push(e.parse::<BigInt>().map_err(D::Error::custom)?);
            }
        }
        Ok(IntMatrix { rows: rows.len(), cols, data })
    }
}

/// Dense rational matrix, row-major, entries always normalized.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix { rows, cols, data: vec![BigRational::zero(); rows * cols] }
    }

    pub fn from_rows(cols: usize, rows: &[Vec<BigRational>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged row");
            data.extend(r.iter().cloned());
        }
        RatMatrix { rows: rows.len(), cols, data }
    }

    pub fn from_int(m: &IntMatrix) -> Self {
        RatMatrix {
            rows: m.rows,
            cols: m.cols,
            data: m.data.iter().map(|x| BigRational::from_integer(x.clone())).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigRational) {
        self.data[i * self.cols + j] = v;
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (RatMatrix, Vec<usize>) {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..a.cols {
            if r == a.rows {
                break;
            }
            let Some(p) = (r..a.rows).find(|&i| !a.get(i, c).is_zero()) else {
                continue;
            };
            for j in 0..a.cols {
                a.data.swap(p * a.cols + j, r * a.cols + j);
            }
            let inv = a.get(r, c).recip();
            for j in c..a.cols {
                let v = a.get(r, j) * &inv;
                a.set(r, j, v);
            }
            for i in 0..a.rows {
                if i == r || a.get(i, c).is_zero() {
                    continue;
                }
                let f = a.get(i, c).clone();
                for j in c..a.cols {
                    let v = a.get(i, j) - &f * a.get(r, j);
                    a.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (a, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel `{x : self·x = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<BigRational>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![BigRational::zero(); self.cols];
                v[f] = BigRational::one();
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = -r.get(row, f).clone();
                }
                v
            })
            .collect()
    }
}

/// Rank of a family of rational vectors.
pub fn rational_rank(vectors: &[Vec<BigRational>], dim: usize) -> usize {
    RatMatrix::from_rows(dim, vectors).rank()
}

/// Result of a row echelon computation: `transform · input = echelon`.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub echelon: IntMatrix,
    pub transform: IntMatrix,
    pub pivot_cols: Vec<usize>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivot_cols.len()
    }
}

/// Fraction-free (Bareiss) row echelon form.
///
/// Every division performed is exact, so the echelon and the transform stay
/// integral; pivots are the leading principal minors of the row-permuted
/// input restricted to the pivot columns.
pub fn echelon_division_free(m: &IntMatrix) -> Echelon {
    let (rows, cols) = (m.rows, m.cols);
    let width = cols + rows;
    let mut a = IntMatrix::zeros(rows, width);
    for i in 0..rows {
        a.row_mut(i)[..cols].clone_from_slice(m.row(i));
        a.data[i * width + cols + i] = BigInt::one();
    }
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a.get(i, c).is_zero()) else {
            continue;
        };
        a.swap_rows(p, r);
        let piv = a.get(r, c).clone();
        for i in r + 1..rows {
            let lead = a.get(i, c).clone();
            let (ti, tr) = two_rows(&mut a.data, width, i, r);
            for j in c + 1..width {
                let v = &piv * &ti[j] - &lead * &tr[j];
                ti[j] = if prev.is_one() { v } else { v / &prev };
            }
            ti[c] = BigInt::zero();
        }
        prev = piv;
        pivots.push(c);
        r += 1;
    }
    let mut echelon = IntMatrix::zeros(rows, cols);
    let mut transform = IntMatrix::zeros(rows, rows);
    for i in 0..rows {
        echelon.row_mut(i).clone_from_slice(&a.row(i)[..cols]);
        transform.row_mut(i).clone_from_slice(&a.row(i)[cols..]);
    }
    Echelon { echelon, transform, pivot_cols: pivots }
}

/// Row echelon form reached by unimodular row operations only (Hermite
/// normal form: pivots positive, entries above each pivot reduced into
/// `[0, pivot)`), so `transform` has determinant ±1.
pub fn hermite_form(m: &IntMatrix) -> Echelon {
    let (rows, cols) = (m.rows, m.cols);
    let mut a = m.clone();
    let mut t = IntMatrix::identity(rows);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        loop {
            let best = (r..rows)
                .filter(|&i| !a.get(i, c).is_zero())
                .min_by(|&x, &y| a.get(x, c).abs().cmp(&a.get(y, c).abs()).then(x.cmp(&y)));
            let Some(p) = best else { break };
            a.swap_rows(p, r);
            t.swap_rows(p, r);
            let mut clean = true;
            for i in r + 1..rows {
                if a.get(i, c).is_zero() {
                    continue;
                }
                let q = -a.get(i, c).div_floor(a.get(r, c));
                a.add_row_multiple(i, r, &q);
                t.add_row_multiple(i, r, &q);
                if !a.get(i, c).is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if a.get(r, c).is_zero() {
            continue;
        }
        if a.get(r, c).is_negative() {
            a.negate_row(r);
            t.negate_row(r);
        }
        for i in 0..r {
            let q = -a.get(i, c).div_floor(a.get(r, c));
            a.add_row_multiple(i, r, &q);
            t.add_row_multiple(i, r, &q);
        }
        pivots.push(c);
        r += 1;
    }
    Echelon { echelon: a, transform: t, pivot_cols: pivots }
}

/// `u · m · v = d` with `u`, `v` unimodular and `d` diagonal with
/// `d[0] | d[1] | … | d[rank-1]`, all positive.
#[derive(Clone, Debug, Serialize)]
pub struct SmithDecomposition {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
    pub rank: usize,
}

impl SmithDecomposition {
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.rank).map(|i| self.d.get(i, i).clone()).collect()
    }

    pub fn is_torsion_free(&self) -> bool {
        self.invariant_factors().iter().all(One::is_one)
    }
}

/// Smith normal form with both transforms.
pub fn smith_normal_form(m: &IntMatrix) -> SmithDecomposition {
    let mut d = m.clone();
    let mut u = IntMatrix::identity(m.rows);
    let mut v = IntMatrix::identity(m.cols);
    let rank = smith_in_place(&mut d, Some(&mut u), Some(&mut v));
    SmithDecomposition { d, u, v, rank }
}

/// Diagonalizes `a` in place. Row operations are mirrored on `left` (which
/// must have as many rows as `a`), column operations on `right` (which must
/// have as many columns as `a`). Returns the rank.
///
/// Pivot choice: the nonzero entry of least absolute value in the active
/// submatrix, ties broken by lowest (row, col).
pub(crate) fn smith_in_place(
    a: &mut IntMatrix,
    mut left: Option<&mut IntMatrix>,
    mut right: Option<&mut IntMatrix>,
) -> usize {
    let (rows, cols) = (a.rows, a.cols);
    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pr, pc)) = min_abs_entry(a, t, t) else { break };
        swap_rows_tracked(a, left.as_deref_mut(), t, pr);
        swap_cols_tracked(a, right.as_deref_mut(), t, pc);
        loop {
            // Clear column t below and row t to the right of the pivot.
            loop {
                let mut smallest: Option<(bool, usize)> = None;
                for i in t + 1..rows {
                    if a.get(i, t).is_zero() {
                        continue;
                    }
                    let q = -a.get(i, t).div_floor(a.get(t, t));
                    row_op_tracked(a, left.as_deref_mut(), i, t, &q);
                    if !a.get(i, t).is_zero() {
                        smallest = pick_smaller(a, smallest, (true, i), t);
                    }
                }
                for j in t + 1..cols {
                    if a.get(t, j).is_zero() {
                        continue;
                    }
                    let q = -a.get(t, j).div_floor(a.get(t, t));
                    col_op_tracked(a, right.as_deref_mut(), j, t, &q);
                    if !a.get(t, j).is_zero() {
                        smallest = pick_smaller(a, smallest, (false, j), t);
                    }
                }
                match smallest {
                    None => break,
                    Some((true, i)) => swap_rows_tracked(a, left.as_deref_mut(), t, i),
                    Some((false, j)) => swap_cols_tracked(a, right.as_deref_mut(), t, j),
                }
            }
            // Enforce divisibility of the remaining block by the pivot.
            let piv = a.get(t, t).clone();
            if piv.magnitude().is_one() {
                break;
            }
            let offender = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !a.get(i, j).is_multiple_of(&piv)));
            match offender {
                Some(i) => row_op_tracked(a, left.as_deref_mut(), t, i, &BigInt::one()),
                None => break,
            }
        }
        if a.get(t, t).is_negative() {
            a.negate_row(t);
            if let Some(l) = left.as_deref_mut() {
                l.negate_row(t);
            }
        }
        t += 1;
    }
    t
}

fn pick_smaller(a: &IntMatrix, cur: Option<(bool, usize)>, cand: (bool, usize), t: usize) -> Option<(bool, usize)> {
    let val = |(is_row, k): (bool, usize)| if is_row { a.get(k, t).abs() } else { a.get(t, k).abs() };
    match cur {
        None => Some(cand),
        Some(c) if val(cand) < val(c) => Some(cand),
        keep => keep,
    }
}

fn min_abs_entry(a: &IntMatrix, r0: usize, c0: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in r0..a.rows {
        for j in c0..a.cols {
            let x = a.get(i, j);
            if x.is_zero() {
                continue;
            }
            match best {
                Some((bi, bj)) if a.get(bi, bj).magnitude() <= x.magnitude() => {}
                _ => {
                    best = Some((i, j));
                    if x.magnitude().is_one() {
                        return best;
                    }
                }
            }
        }
    }
    best
}

fn swap_rows_tracked(a: &mut IntMatrix, left: Option<&mut IntMatrix>, i: usize, j: usize) {
    a.swap_rows(i, j);
    if let Some(l) = left {
        l.swap_rows(i, j);
    }
}

fn swap_cols_tracked(a: &mut IntMatrix, right: Option<&mut IntMatrix>, i: usize, j: usize) {
    a.swap_cols(i, j);
    if let Some(r) = right {
        r.swap_cols(i, j);
    }
}

fn row_op_tracked(a: &mut IntMatrix, left: Option<&mut IntMatrix>, target: usize, source: usize, f: &BigInt) {
    a.add_row_multiple(target, source, f);
    if let Some(l) = left {
        l.add_row_multiple(target, source, f);
    }
}

fn col_op_tracked(a: &mut IntMatrix, right: Option<&mut IntMatrix>, target: usize, source: usize, f: &BigInt) {
    a.add_col_multiple(target, source, f);
    if let Some(r) = right {
        r.add_col_multiple(target, source, f);
    }
}

/// Diagnostics of `a · x = b`.
#[derive(Clone, Debug, Serialize)]
pub struct SolveReport {
    pub consistent_over_q: bool,
    pub rank: usize,
    pub augmented_rank: usize,
    #[serde(serialize_with = "ser_opt_rat_vec")]
    pub particular_solution: Option<Vec<BigRational>>,
    #[serde(skip)]
    pub nullspace_basis: Vec<Vec<BigRational>>,
    pub nullspace_dim: usize,
    pub integer_solvable: bool,
    #[serde(serialize_with = "ser_big_set")]
    pub denominator_primes: BTreeSet<BigInt>,
    #[serde(serialize_with = "ser_big_vec")]
    pub invariant_factors: Vec<BigInt>,
}

fn ser_opt_rat_vec<S: serde::Serializer>(v: &Option<Vec<BigRational>>, s: S) -> Result<S::Ok, S::Error> {
    v.as_ref().map(|xs| xs.iter().map(ToString::to_string).collect::<Vec<_>>()).serialize(s)
}

pub(crate) fn ser_big_set<S: serde::Serializer>(v: &BTreeSet<BigInt>, s: S) -> Result<S::Ok, S::Error> {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().serialize(s)
}

pub(crate) fn ser_display<T: std::fmt::Display, S: serde::Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

pub(crate) fn ser_display_seq<T: std::fmt::Display, S: serde::Serializer>(v: &[T], s: S) -> Result<S::Ok, S::Error> {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().serialize(s)
}

pub(crate) fn ser_big_vec<S: serde::Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().serialize(s)
}

/// Solves `a · x = b` exactly through the Smith decomposition.
///
/// The particular solution is `V · D⁺ · (U·b)`, which has the smallest
/// possible denominators: it lies in `ℤ[1/p : p ∈ denominator_primes]ⁿ` and
/// no coarser localization of ℤ contains a solution.
pub fn solve_integer_system(a: &IntMatrix, b: &[BigInt]) -> Result<SolveReport, ExactAlgError> {
    if b.len() != a.rows {
        return Err(ExactAlgError::DimensionMismatch { expected: a.rows, found: b.len() });
    }
    let mut d = a.clone();
    let mut ub = IntMatrix::from_vec(b.len(), 1, b.to_vec());
    let mut v = IntMatrix::identity(a.cols);
    let rank = smith_in_place(&mut d, Some(&mut ub), Some(&mut v));
    let c = ub.column(0);

    let invariant_factors: Vec<BigInt> = (0..rank).map(|k| d.get(k, k).clone()).collect();
    let consistent = c[rank..].iter().all(Zero::is_zero);
    let augmented_rank = if consistent { rank } else { rank + 1 };

    let nullspace_basis: Vec<Vec<BigRational>> = (rank..a.cols)
        .map(|j| v.column(j).into_iter().map(BigRational::from_integer).collect())
        .collect();

    let mut particular = None;
    let mut integer_solvable = false;
    let mut denominator_primes = BTreeSet::new();
    if consistent {
        let y: Vec<BigRational> = (0..a.cols)
            .map(|k| {
                if k < rank {
                    BigRational::new(c[k].clone(), invariant_factors[k].clone())
                } else {
                    BigRational::zero()
                }
            })
            .collect();
        for q in &y {
            denominator_primes.extend(prime_factors(q.denom()));
        }
        integer_solvable = denominator_primes.is_empty();
        let x: Vec<BigRational> = (0..a.cols)
            .map(|i| {
                (0..rank).fold(BigRational::zero(), |acc, k| {
                    acc + BigRational::from_integer(v.get(i, k).clone()) * &y[k]
                })
            })
            .collect();
        particular = Some(x);
    }

    Ok(SolveReport {
        consistent_over_q: consistent,
        rank,
        augmented_rank,
        particular_solution: particular,
        nullspace_dim: a.cols - rank,
        nullspace_basis,
        integer_solvable,
        denominator_primes,
        invariant_factors,
    })
}

/// Prime divisors of `n` by trial division (inputs here are small).
pub fn prime_factors(n: &BigInt) -> BTreeSet<BigInt> {
    let mut n = n.abs();
    let mut out = BTreeSet::new();
    let mut p = BigInt::from(2);
    while &p * &p <= n {
        if n.is_multiple_of(&p) {
            out.insert(p.clone());
            while n.is_multiple_of(&p) {
                n /= &p;
            }
        }
        p += 1;
    }
    if n > BigInt::one() {
        out.insert(n);
    }
    out
}

/// Divides an integer vector by the gcd of its entries and makes the first
/// nonzero entry positive. The zero vector is returned unchanged.
pub fn canonicalize_integer_vector(v: &mut [BigInt]) {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() {
        return;
    }
    let neg = v.iter().find(|x| !x.is_zero()).is_some_and(Signed::is_negative);
    for x in v.iter_mut() {
        *x = &*x / &g;
        if neg {
            *x = -std::mem::take(x);
        }
    }
}
