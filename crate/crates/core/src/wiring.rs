//! Braided wiring diagrams and their compilation to presentations of the
//! fundamental group of the complement.
//!
//! A diagram has `n` strands. `initial_order` sends a strand position to the
//! label of the line sitting there at the start. Each crossing carries the
//! braid travelled since the previous crossing and the labels of the lines
//! that meet there.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::combinatorics::LineCombinatorics;
use crate::exactalg::IntMatrix;
use crate::words::{braid_act, braid_permutation, conjugate_normal_form, half_twist, BraidWord, FreeWord, Perm, WordError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WiringError {
    #[error("crossing {crossing}: {reason}")]
    MalformedWiring { crossing: usize, reason: String },
    #[error(transparent)]
    Word(#[from] WordError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Crossing {
    pub braid: BraidWord,
    pub lines: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "WiringJson", into = "WiringJson")]
pub struct WiringDiagram {
    pub n: usize,
    pub initial_order: Perm,
    pub crossings: Vec<Crossing>,
}

#[derive(Serialize, Deserialize)]
struct CrossingJson {
    braid: Vec<i32>,
    lines: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct WiringJson {
    n: usize,
    initial_order: Vec<usize>,
    crossings: Vec<CrossingJson>,
}

impl TryFrom<WiringJson> for WiringDiagram {
    type Error = WiringError;

    fn try_from(j: WiringJson) -> Result<Self, WiringError> {
        let crossings = j
            .crossings
            .into_iter()
            .map(|c| Ok(Crossing { braid: BraidWord::new(j.n, c.braid)?, lines: c.lines }))
            .collect::<Result<Vec<_>, WiringError>>()?;
        WiringDiagram::new(j.n, j.initial_order, crossings)
    }
}

impl From<WiringDiagram> for WiringJson {
    fn from(w: WiringDiagram) -> Self {
        WiringJson {
            n: w.n,
            initial_order: w.initial_order.images().to_vec(),
            crossings: w
                .crossings
                .into_iter()
                .map(|c| CrossingJson { braid: c.braid.letters().to_vec(), lines: c.lines })
                .collect(),
        }
    }
}

impl WiringDiagram {
    pub fn new(n: usize, initial_order: Vec<usize>, crossings: Vec<Crossing>) -> Result<Self, WiringError> {
        let initial_order = Perm::new(initial_order)?;
        if initial_order.size() != n {
            return Err(WiringError::MalformedWiring {
                crossing: 0,
                reason: format!("initial order has {} entries for {} strands", initial_order.size(), n),
            });
        }
        for (k, c) in crossings.iter().enumerate() {
            let bad = |reason: String| WiringError::MalformedWiring { crossing: k, reason };
            if c.braid.strands() != n {
                return Err(bad(format!("braid on {} strands", c.braid.strands())));
            }
            if c.lines.len() < 2 {
                return Err(bad("fewer than two lines".into()));
            }
            let mut seen = vec![false; n + 1];
            for &l in &c.lines {
                if l == 0 || l > n || seen[l] {
                    return Err(bad(format!("bad or repeated line {l}")));
                }
                seen[l] = true;
            }
        }
        Ok(WiringDiagram { n, initial_order, crossings })
    }

    fn from_data(n: usize, order: &[usize], data: &[(&[i32], &[usize])]) -> Self {
        let crossings = data
            .iter()
            .map(|(b, l)| Crossing { braid: BraidWord::new(n, b.iter().copied()).expect("builtin braid"), lines: l.to_vec() })
            .collect();
        WiringDiagram::new(n, order.to_vec(), crossings).expect("builtin wiring")
    }

    /// Flips the sign of every letter of every pre-braid. Orders, line sets
    /// and the local half-twists are unchanged.
    pub fn mirror(&self) -> WiringDiagram {
        WiringDiagram {
            n: self.n,
            initial_order: self.initial_order.clone(),
            crossings: self.crossings.iter().map(|c| Crossing { braid: c.braid.mirror(), lines: c.lines.clone() }).collect(),
        }
    }

    /// Sorted line sets of all crossings, as a sorted list.
    pub fn crossing_combinatorics(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = self
            .crossings
            .iter()
            .map(|c| {
                let mut l = c.lines.clone();
                l.sort_unstable();
                l
            })
            .collect();
        out.sort();
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BuiltinWiring {
    Xi1,
    Xi2,
}

const ORDER_XI1: [usize; 11] = [1, 3, 7, 5, 8, 11, 4, 10, 9, 6, 2];
const ORDER_XI2: [usize; 11] = [1, 7, 5, 3, 4, 10, 11, 8, 2, 6, 9];

const WIRING_XI1: [(&[i32], &[usize]); 22] = [
    (&[], &[10, 9]),
    (&[], &[5, 8]),
    (&[], &[5, 11, 4, 9]),
    (&[], &[5, 10]),
    (&[], &[5, 6]),
    (&[], &[5, 2]),
    (&[-7, -8], &[7, 8]),
    (&[], &[7, 9]),
    (&[], &[7, 4]),
    (&[], &[7, 10, 6]),
    (&[], &[7, 11, 2]),
    (&[-8, -4, 7], &[6, 11]),
    (&[-7, -5, -6, -4, 8], &[3, 8, 11]),
    (&[], &[3, 4]),
    (&[], &[3, 10]),
    (&[], &[3, 9, 2, 6]),
    (&[3], &[8, 10]),
    (&[4, 5, 2, 3, 4, -2], &[1, 8, 4, 6]),
    (&[], &[1, 11, 10]),
    (&[], &[1, 2]),
    (&[], &[1, 9]),
    (&[-3, -4], &[8, 2]),
];

const WIRING_XI2: [(&[i32], &[usize]); 22] = [
    (&[], &[3, 4]),
    (&[], &[3, 10]),
    (&[], &[3, 11, 8]),
    (&[], &[3, 2, 6, 9]),
    (&[-5, -6, -7, -4, -5], &[5, 8]),
    (&[], &[5, 11, 4, 9]),
    (&[], &[5, 10]),
    (&[], &[5, 6]),
    (&[], &[5, 2]),
    (&[-4, 3, 6], &[11, 6]),
    (&[-6, -5], &[9, 10]),
    (&[4, 5, 4, 8, -7, 6], &[2, 8]),
    (&[7], &[7, 4]),
    (&[], &[7, 10, 6]),
    (&[], &[7, 8]),
    (&[], &[7, 9]),
    (&[], &[7, 2, 11]),
    (&[-4, 5, -6, -3], &[1, 4, 8, 6]),
    (&[], &[1, 9]),
    (&[], &[1, 11, 10]),
    (&[], &[1, 2]),
    (&[-2, -4], &[8, 10]),
];

pub fn builtin_wiring(which: BuiltinWiring) -> WiringDiagram {
    match which {
        BuiltinWiring::Xi1 => WiringDiagram::from_data(11, &ORDER_XI1, &WIRING_XI1),
        BuiltinWiring::Xi2 => WiringDiagram::from_data(11, &ORDER_XI2, &WIRING_XI2),
    }
}

/// Meridian label ↦ line of the twelve-line combinatorics. The missing
/// line 5 is the line at infinity.
pub const MERIDIAN_TO_LINE: [(usize, usize); 11] = [
    (1, 1),
    (2, 3),
    (3, 4),
    (4, 2),
    (5, 12),
    (6, 6),
    (7, 9),
    (8, 10),
    (9, 8),
    (10, 7),
    (11, 11),
];

pub const LINE_AT_INFINITY: usize = 5;

pub fn meridian_to_line(m: usize) -> usize {
    MERIDIAN_TO_LINE[m - 1].1
}

pub fn line_to_meridian(l: usize) -> Option<usize> {
    MERIDIAN_TO_LINE.iter().find(|&&(_, line)| line == l).map(|&(m, _)| m)
}

/// Affine crossings pushed to line labels, together with the points of
/// `full` on the line at infinity.
pub fn reconstruct_combinatorics(w: &WiringDiagram, full: &LineCombinatorics) -> LineCombinatorics {
    let mut points: Vec<Vec<usize>> = w
        .crossing_combinatorics()
        .into_iter()
        .map(|p| p.into_iter().map(meridian_to_line).collect())
        .collect();
    points.extend(full.points.iter().filter(|p| p.contains(&LINE_AT_INFINITY)).cloned());
    LineCombinatorics::new(full.n_lines, points)
}

/// One point relation: `x_{i_1}^{w_1} ⋯ x_{i_r}^{w_r}` commutes with each of
/// its factors, where `x^w = w⁻¹ x w`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Relation {
    pub lines: Vec<usize>,
    pub conjugators: Vec<FreeWord>,
}

impl Relation {
    /// The conjugated meridians `w_j⁻¹ x_{i_j} w_j`.
    pub fn factors(&self, rank: usize) -> Vec<FreeWord> {
        self.lines
            .iter()
            .zip(&self.conjugators)
            .map(|(&l, c)| FreeWord::generator(rank, l as i32).expect("label in range").conjugate_by(c))
            .collect()
    }

    /// Commutators `[f_j, f_1 ⋯ f_r]` for `j < r`.
    pub fn relators(&self, rank: usize) -> Vec<FreeWord> {
        let f = self.factors(rank);
        let prod = f.iter().fold(FreeWord::identity(rank), |acc, x| acc.mul(x));
        f[..f.len() - 1]
            .iter()
            .map(|x| x.inverse().mul(&prod.inverse()).mul(x).mul(&prod))
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Presentation {
    #[serde(serialize_with = "crate::exactalg::ser_display")]
    pub n_generators: usize,
    pub relations: Vec<Relation>,
}

impl Presentation {
    pub fn relators(&self) -> Vec<FreeWord> {
        self.relations.iter().flat_map(|r| r.relators(self.n_generators)).collect()
    }

    /// Number of commutation relations, `Σ (r − 1)`.
    pub fn relator_count(&self) -> usize {
        self.relations.iter().map(|r| r.lines.len() - 1).sum()
    }

    /// Rank and torsion of the abelianization, from the exponent-sum matrix.
    pub fn abelianization(&self) -> (usize, Vec<num_bigint::BigInt>) {
        let rows: Vec<Vec<i64>> = self.relators().iter().map(FreeWord::exponent_sums).collect();
        let m = IntMatrix::from_rows(self.n_generators, &rows);
        let snf = crate::exactalg::smith_normal_form(&m);
        let torsion = snf.invariant_factors().into_iter().filter(|d| *d != num_bigint::BigInt::from(1)).collect();
        (self.n_generators - snf.rank, torsion)
    }

    /// Sorted line sets of the relations, as a sorted list.
    pub fn point_sets(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = self
            .relations
            .iter()
            .map(|r| {
                let mut l = r.lines.clone();
                l.sort_unstable();
                l
            })
            .collect();
        out.sort();
        out
    }
}

/// Compiles a wiring diagram into a presentation.
///
/// A running braid `T` and the running order are carried along the
/// diagram. At each crossing the order is moved by the pre-braid, the
/// positions of the crossing lines are read off, and each generator at
/// those positions is acted on by `T⁻¹` and relabeled into line labels.
/// Crossing the point composes `T` with the local half-twist.
pub fn relations(w: &WiringDiagram) -> Result<Presentation, WiringError> {
    let n = w.n;
    let mut order = w.initial_order.clone();
    let mut running = BraidWord::identity(n);
    let mut snapshots: Vec<(BraidWord, Vec<usize>)> = Vec::with_capacity(w.crossings.len());

    for (k, c) in w.crossings.iter().enumerate() {
        order = braid_permutation(&c.braid.inverse()).then(&order);
        running = running.mul(&c.braid);
        let inv = order.inverse();
        let positions: Vec<usize> = c.lines.iter().map(|&l| inv.apply(l)).collect();
        let consecutive = positions.windows(2).all(|p| p[1] == p[0] + 1);
        if !consecutive {
            return Err(WiringError::MalformedWiring {
                crossing: k,
                reason: format!("lines {:?} sit at positions {:?}", c.lines, positions),
            });
        }
        let twist = half_twist(positions[0], *positions.last().unwrap(), n)?;
        snapshots.push((running.clone(), positions));
        running = running.mul(&twist);
        order = braid_permutation(&twist).inverse().then(&order);
    }

    let mut rels = Vec::with_capacity(snapshots.len());
    for (k, (braid, positions)) in snapshots.iter().enumerate() {
        let back = braid.inverse();
        let mut lines = Vec::with_capacity(positions.len());
        let mut conjugators = Vec::with_capacity(positions.len());
        for &p in positions {
            let acted = braid_act(&back, &FreeWord::generator(n, p as i32)?)?;
            let relabeled = acted.relabel(n, |g| w.initial_order.apply(g))?;
            let (gen, conj) = conjugate_normal_form(&relabeled).map_err(|e| WiringError::MalformedWiring {
                crossing: k,
                reason: e.to_string(),
            })?;
            lines.push(gen as usize);
            conjugators.push(conj);
        }
        rels.push(Relation { lines, conjugators });
    }
    Ok(Presentation { n_generators: n, relations: rels })
}

/// Multiplicity profile of the crossings: crossing size ↦ count.
pub fn crossing_profile(w: &WiringDiagram) -> BTreeMap<usize, usize> {
    let mut m = BTreeMap::new();
    for c in &w.crossings {
        *m.entry(c.lines.len()).or_insert(0) += 1;
    }
    m
}
