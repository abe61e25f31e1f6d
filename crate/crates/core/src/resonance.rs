//! Resonance components of combinatorial pencils, triangles of components,
//! and the homological rigidity check.
//!
//! Vectors live in the dual lattice with coordinates `y_L`, one per line.
//! The component of a pencil with fibers `F_1, …, F_k` is spanned by
//! `u_{F_j} − u_{F_1}` (`u_F = Σ_{L∈F} y_L`), so it has dimension `k − 1`.

use std::collections::BTreeSet;

use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::combinatorics::LineCombinatorics;
use crate::exactalg::{rational_rank, ser_display, ser_display_seq, RatMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum PencilKind {
    MultiplePoint,
    Ceva,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Pencil {
    pub kind: PencilKind,
    pub fibers: Vec<Vec<usize>>,
}

impl Pencil {
    pub fn multiple_point(lines: &[usize]) -> Self {
        Pencil { kind: PencilKind::MultiplePoint, fibers: lines.iter().map(|&l| vec![l]).collect() }
    }

    /// Lines of the pencil in fiber order.
    pub fn lines(&self) -> Vec<usize> {
        self.fibers.iter().flatten().copied().collect()
    }

    pub fn sorted_lines(&self) -> Vec<usize> {
        let mut l = self.lines();
        l.sort_unstable();
        l
    }

    pub fn dim(&self) -> usize {
        self.fibers.len() - 1
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResonanceComponent {
    pub pencil: Pencil,
    pub basis: Vec<Vec<BigRational>>,
}

impl ResonanceComponent {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

fn fiber_sum(fiber: &[usize], n_lines: usize) -> Vec<BigRational> {
    let mut v = vec![BigRational::zero(); n_lines];
    for &l in fiber {
        v[l - 1] += BigRational::one();
    }
    v
}

/// Basis `u_{F_j} − u_{F_1}`, `j ≥ 2`.
pub fn component_of(p: &Pencil, n_lines: usize) -> ResonanceComponent {
    let first = fiber_sum(&p.fibers[0], n_lines);
    let basis = p.fibers[1..]
        .iter()
        .map(|f| fiber_sum(f, n_lines).into_iter().zip(&first).map(|(a, b)| a - b).collect())
        .collect();
    ResonanceComponent { pencil: p.clone(), basis }
}

/// All six-line subarrangements carrying a Ceva-type 3-net: three 2-line
/// fibers and four base points, each base point meeting every fiber once,
/// with no other point meeting two different fibers.
pub fn ceva_pencils(c: &LineCombinatorics) -> Vec<Pencil> {
    let n = c.n_lines;
    let mut found: BTreeSet<Vec<Vec<usize>>> = BTreeSet::new();
    for subset in combinations(n, 6) {
        for pairing in pairings(&subset) {
            if is_ceva(c, &pairing) {
                found.insert(pairing);
            }
        }
    }
    let mut out: Vec<Pencil> = found.into_iter().map(|fibers| Pencil { kind: PencilKind::Ceva, fibers }).collect();
    out.sort_by_key(|p| p.sorted_lines());
    out
}

fn is_ceva(c: &LineCombinatorics, fibers: &[Vec<usize>]) -> bool {
    let fiber_of = |l: usize| fibers.iter().position(|f| f.contains(&l));
    let mut base_points = 0;
    for p in &c.points {
        let mut hits = [0usize; 3];
        for &l in p {
            if let Some(f) = fiber_of(l) {
                hits[f] += 1;
            }
        }
        let touched = hits.iter().filter(|&&h| h > 0).count();
        if touched < 2 {
            continue;
        }
        if hits == [1, 1, 1] {
            base_points += 1;
        } else {
            return false;
        }
    }
    base_points == 4
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..=n {
            if n - i + 1 < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(1, n, k, &mut cur, &mut out);
    out
}

/// Partitions of a sorted six-element set into three unordered pairs,
/// each pair sorted and the pairs sorted.
fn pairings(set: &[usize]) -> Vec<Vec<Vec<usize>>> {
    if set.is_empty() {
        return vec![Vec::new()];
    }
    let first = set[0];
    let mut out = Vec::new();
    for k in 1..set.len() {
        let rest: Vec<usize> = set[1..].iter().copied().filter(|&x| x != set[k]).collect();
        for mut tail in pairings(&rest) {
            tail.insert(0, vec![first, set[k]]);
            out.push(tail);
        }
    }
    out
}

/// Multiple-point pencils (multiplicity ≥ 3, by multiplicity then line
/// set) followed by the Ceva pencils (sorted).
pub fn all_pencils(c: &LineCombinatorics) -> Vec<Pencil> {
    let mut out: Vec<Pencil> =
        c.points.iter().filter(|p| p.len() >= 3).map(|p| Pencil::multiple_point(p)).collect();
    out.sort_by_key(|p| (p.fibers.len(), p.sorted_lines()));
    out.extend(ceva_pencils(c));
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TriangleRow {
    /// Sorted line set.
    pub lines: Vec<usize>,
    pub fibers: Vec<Vec<usize>>,
    pub kind: PencilKind,
    #[serde(serialize_with = "ser_display")]
    pub dim: usize,
    #[serde(serialize_with = "ser_display")]
    pub triangles: usize,
    #[serde(serialize_with = "ser_display")]
    pub triangles_through_quintuple: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TriangleTable {
    pub rows: Vec<TriangleRow>,
    /// Index of the reference pencil (the unique one with most fibers).
    #[serde(skip)]
    pub reference: Option<usize>,
    /// All triangles as sorted index triples into `rows`.
    #[serde(skip)]
    pub triangles: Vec<[usize; 3]>,
}

/// Three components form a triangle when their sum has dimension one less
/// than the sum of their dimensions.
pub fn is_triangle(a: &ResonanceComponent, b: &ResonanceComponent, c: &ResonanceComponent, n_lines: usize) -> bool {
    let vecs: Vec<Vec<BigRational>> =
        a.basis.iter().chain(&b.basis).chain(&c.basis).cloned().collect();
    rational_rank(&vecs, n_lines) + 1 == a.dim() + b.dim() + c.dim()
}

pub fn triangle_table(c: &LineCombinatorics) -> TriangleTable {
    let pencils = all_pencils(c);
    let comps: Vec<ResonanceComponent> = pencils.iter().map(|p| component_of(p, c.n_lines)).collect();
    let k = comps.len();
    let mut triples = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            for l in j + 1..k {
                triples.push([i, j, l]);
            }
        }
    }
    let triangles: Vec<[usize; 3]> = triples
        .into_par_iter()
        .filter(|t| is_triangle(&comps[t[0]], &comps[t[1]], &comps[t[2]], c.n_lines))
        .collect();

    let max_fibers = pencils.iter().map(|p| p.fibers.len()).max();
    let reference = max_fibers.and_then(|m| {
        let top: Vec<usize> = (0..k).filter(|&i| pencils[i].fibers.len() == m).collect();
        (top.len() == 1).then(|| top[0])
    });

    let rows = pencils
        .iter()
        .enumerate()
        .map(|(i, p)| {
            let mine = triangles.iter().filter(|t| t.contains(&i));
            let through = reference.map_or(0, |r| mine.clone().filter(|t| t.contains(&r)).count());
            TriangleRow {
                lines: p.sorted_lines(),
                fibers: p.fibers.clone(),
                kind: p.kind,
                dim: p.dim(),
                triangles: mine.count(),
                triangles_through_quintuple: through,
            }
        })
        .collect();
    TriangleTable { rows, reference, triangles }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RigidityError {
    #[error("multiple-point pencil {lines:?} shares its fingerprint {fingerprint:?} with {other:?}")]
    FingerprintCollision { lines: Vec<usize>, other: Vec<usize>, fingerprint: (usize, usize, usize) },
    #[error("non-diagonal solution of the incidence constraints: {}", show_matrix(witness))]
    NonDiagonalSolution { witness: Vec<Vec<BigRational>> },
}

fn show_matrix(m: &[Vec<BigRational>]) -> String {
    let rows: Vec<String> = m.iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")).collect();
    format!("[{}]", rows.join("; "))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RigidityVerdict {
    pub rigid: bool,
    /// Scalars `c` with `c · id` admissible.
    #[serde(serialize_with = "ser_display_seq")]
    pub admissible_scalars: Vec<i64>,
    #[serde(serialize_with = "ser_display")]
    pub constraint_count: usize,
    #[serde(serialize_with = "ser_display")]
    pub solution_dim: usize,
}

/// Homological rigidity check.
///
/// Every multiple-point component must be pinned down by its fingerprint
/// `(dim, Δ_S, Δ_{S,P₁})`. Then an admissible automorphism lifts to a matrix
/// `A` whose rows through each multiple point agree outside that point's
/// columns; the check succeeds when every such `A` is diagonal up to adding
/// multiples of `(1, …, 1)` to columns.
pub fn rigidity_check(c: &LineCombinatorics) -> Result<RigidityVerdict, RigidityError> {
    let table = triangle_table(c);
    let fp = |r: &TriangleRow| (r.dim, r.triangles, r.triangles_through_quintuple);
    for (i, r) in table.rows.iter().enumerate() {
        if r.kind != PencilKind::MultiplePoint {
            continue;
        }
        if let Some(o) = table.rows.iter().enumerate().find(|&(j, o)| j != i && fp(o) == fp(r)) {
            return Err(RigidityError::FingerprintCollision {
                lines: r.lines.clone(),
                other: o.1.lines.clone(),
                fingerprint: fp(r),
            });
        }
    }

    let n = c.n_lines;
    let idx = |r: usize, col: usize| (r - 1) * n + (col - 1);
    let mut constraints: Vec<Vec<BigRational>> = Vec::new();
    for p in c.points.iter().filter(|p| p.len() >= 3) {
        for col in (1..=n).filter(|col| !p.contains(col)) {
            for &other in &p[1..] {
                let mut row = vec![BigRational::zero(); n * n];
                row[idx(p[0], col)] = BigRational::one();
                row[idx(other, col)] = -BigRational::one();
                constraints.push(row);
            }
        }
    }
    let solutions = if constraints.is_empty() {
        (0..n * n)
            .map(|k| {
                let mut v = vec![BigRational::zero(); n * n];
                v[k] = BigRational::one();
                v
            })
            .collect()
    } else {
        RatMatrix::from_rows(n * n, &constraints).nullspace()
    };

    // diagonal matrices plus column moves by (1, …, 1)
    let mut trivial: Vec<Vec<BigRational>> = Vec::new();
    for col in 1..=n {
        let mut d = vec![BigRational::zero(); n * n];
        d[idx(col, col)] = BigRational::one();
        trivial.push(d);
        let mut mv = vec![BigRational::zero(); n * n];
        for r in 1..=n {
            mv[idx(r, col)] = BigRational::one();
        }
        trivial.push(mv);
    }
    let base_rank = rational_rank(&trivial, n * n);
    for s in &solutions {
        let mut probe = trivial.clone();
        probe.push(s.clone());
        if rational_rank(&probe, n * n) > base_rank {
            let witness = (0..n).map(|r| s[r * n..(r + 1) * n].to_vec()).collect();
            return Err(RigidityError::NonDiagonalSolution { witness });
        }
    }

    // A diagonal lift has entries ±1, and compatibility with Σ x_L = 0
    // forces all of them to agree.
    Ok(RigidityVerdict {
        rigid: true,
        admissible_scalars: vec![1, -1],
        constraint_count: constraints.len(),
        solution_dim: solutions.len(),
    })
}

/// `(dim, Δ_S, Δ_{S,P₁})` of each quadruple point, in table order.
pub fn quadruple_fingerprints(table: &TriangleTable) -> Vec<(usize, usize)> {
    table
        .rows
        .iter()
        .filter(|r| r.kind == PencilKind::MultiplePoint && r.lines.len() == 4)
        .map(|r| (r.triangles, r.triangles_through_quintuple))
        .collect()
}
