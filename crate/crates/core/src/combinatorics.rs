//! Line combinatorics: a finite set of lines together with the points where
//! they meet, each point recorded as the set of lines through it.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::words::Perm;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CombinatoricsError {
    #[error("lines {0} and {1} lie in no common point")]
    PairInNoPoint(usize, usize),
    #[error("lines {0} and {1} lie in two points: {2:?} and {3:?}")]
    PairInTwoPoints(usize, usize, Vec<usize>, Vec<usize>),
    #[error("point {0:?} has fewer than two lines")]
    UndersizedPoint(Vec<usize>),
    #[error("line index {0} outside 1..={1}")]
    LineOutOfRange(usize, usize),
}

/// Abstract incidence data of a line arrangement. Lines are `1..=n_lines`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LineCombinatorics {
    pub n_lines: usize,
    pub points: Vec<Vec<usize>>,
}

impl LineCombinatorics {
    pub fn new(n_lines: usize, points: Vec<Vec<usize>>) -> Self {
        LineCombinatorics { n_lines, points }
    }

    /// Checks that every point has at least two lines and every pair of
    /// distinct lines lies in exactly one point.
    pub fn validate(&self) -> Result<(), CombinatoricsError> {
        let mut owner: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for (idx, p) in self.points.iter().enumerate() {
            if let Some(&l) = p.iter().find(|&&l| l == 0 || l > self.n_lines) {
                return Err(CombinatoricsError::LineOutOfRange(l, self.n_lines));
            }
            let set: BTreeSet<usize> = p.iter().copied().collect();
            if set.len() < 2 {
                return Err(CombinatoricsError::UndersizedPoint(p.clone()));
            }
            let v: Vec<usize> = set.into_iter().collect();
            for (a, &i) in v.iter().enumerate() {
                for &j in &v[a + 1..] {
                    if let Some(&prev) = owner.get(&(i, j)) {
                        return Err(CombinatoricsError::PairInTwoPoints(
                            i,
                            j,
                            self.points[prev].clone(),
                            p.clone(),
                        ));
                    }
                    owner.insert((i, j), idx);
                }
            }
        }
        for i in 1..=self.n_lines {
            for j in i + 1..=self.n_lines {
                if !owner.contains_key(&(i, j)) {
                    return Err(CombinatoricsError::PairInNoPoint(i, j));
                }
            }
        }
        Ok(())
    }

    /// Points of multiplicity at least `m_min`, in input order.
    pub fn points_of_multiplicity(&self, m_min: usize) -> Vec<Vec<usize>> {
        self.points.iter().filter(|p| p.len() >= m_min).cloned().collect()
    }

    /// Number of points of each multiplicity.
    pub fn multiplicity_census(&self) -> BTreeMap<usize, usize> {
        let mut census = BTreeMap::new();
        for p in &self.points {
            *census.entry(p.len()).or_insert(0) += 1;
        }
        census
    }

    /// Point sets, each sorted, as a sorted list. Two combinatorics on the
    /// same lines are equal exactly when these agree.
    pub fn canonical_points(&self) -> Vec<Vec<usize>> {
        let mut pts: Vec<Vec<usize>> = self
            .points
            .iter()
            .map(|p| {
                let mut q = p.clone();
                q.sort_unstable();
                q
            })
            .collect();
        pts.sort();
        pts
    }

    pub fn same_points(&self, other: &LineCombinatorics) -> bool {
        self.n_lines == other.n_lines && self.canonical_points() == other.canonical_points()
    }

    /// Image of the point set under a relabeling of the lines.
    pub fn relabel(&self, perm: &Perm) -> LineCombinatorics {
        LineCombinatorics {
            n_lines: self.n_lines,
            points: self.points.iter().map(|p| p.iter().map(|&l| perm.apply(l)).collect()).collect(),
        }
    }

    /// Deletes the highest-numbered line; points left with a single line
    /// disappear.
    pub fn delete_last_line(&self) -> LineCombinatorics {
        let last = self.n_lines;
        let points = self
            .points
            .iter()
            .map(|p| p.iter().copied().filter(|&l| l != last).collect::<Vec<_>>())
            .filter(|p| p.len() >= 2)
            .collect();
        LineCombinatorics { n_lines: last - 1, points }
    }

    /// Fingerprint of a line: sorted multiplicities of the points through it.
    pub fn line_profile(&self, line: usize) -> Vec<usize> {
        let mut v: Vec<usize> = self.points.iter().filter(|p| p.contains(&line)).map(Vec::len).collect();
        v.sort_unstable();
        v
    }

    /// All line permutations preserving the point set, sorted
    /// lexicographically by image list.
    pub fn automorphisms(&self) -> Vec<Perm> {
        let n = self.n_lines;
        let profiles: Vec<Vec<usize>> = (1..=n).map(|l| self.line_profile(l)).collect();
        let target: BTreeSet<Vec<usize>> = self.canonical_points().into_iter().collect();
        // point index of each unordered pair of lines
        let mut pair_point = vec![vec![usize::MAX; n + 1]; n + 1];
        let canon = self.canonical_points();
        for (idx, p) in canon.iter().enumerate() {
            for &a in p {
                for &b in p {
                    if a != b {
                        pair_point[a][b] = idx;
                    }
                }
            }
        }
        let mut out = Vec::new();
        let mut images = vec![0usize; n];
        let mut used = vec![false; n + 1];
        self.extend_automorphism(1, &profiles, &pair_point, &canon, &mut images, &mut used, &mut out);
        out.retain(|p: &Perm| {
            let q: BTreeSet<Vec<usize>> = self.relabel(p).canonical_points().into_iter().collect();
            q == target
        });
        out.sort();
        out
    }

    #[allow(clippy::too_many_arguments)]
    fn extend_automorphism(
        &self,
        line: usize,
        profiles: &[Vec<usize>],
        pair_point: &[Vec<usize>],
        canon: &[Vec<usize>],
        images: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Perm>,
    ) {
        let n = self.n_lines;
        if line > n {
            out.push(Perm::new(images.clone()).expect("bijection by construction"));
            return;
        }
        for cand in 1..=n {
            if used[cand] || profiles[cand - 1] != profiles[line - 1] {
                continue;
            }
            // Lines already mapped must keep meeting at points of the same
            // multiplicity, and collinear triples must stay collinear.
            let consistent = (1..line).all(|prev| {
                let p = pair_point[prev][line];
                let q = pair_point[images[prev - 1]][cand];
                canon[p].len() == canon[q].len()
                    && (1..prev).all(|pp| {
                        let same_src = pair_point[pp][line] == p && pair_point[pp][prev] == p;
                        let same_dst = pair_point[images[pp - 1]][cand] == q
                            && pair_point[images[pp - 1]][images[prev - 1]] == q;
                        same_src == same_dst
                    })
            });
            if !consistent {
                continue;
            }
            images[line - 1] = cand;
            used[cand] = true;
            self.extend_automorphism(line + 1, profiles, pair_point, canon, images, used, out);
            used[cand] = false;
        }
    }
}

/// The twelve-line combinatorics studied here, points listed verbatim.
pub fn builtin_g91() -> LineCombinatorics {
    let points: &[&[usize]] = &[
        &[1, 4, 5, 9, 12],
        &[1, 2, 6, 10],
        &[2, 3, 5, 7],
        &[3, 4, 6, 8],
        &[2, 8, 11, 12],
        &[1, 7, 11],
        &[3, 9, 11],
        &[4, 10, 11],
        &[5, 8, 10],
        &[6, 7, 9],
        &[5, 6],
        &[5, 11],
        &[6, 11],
        &[1, 3],
        &[2, 4],
        &[1, 8],
        &[2, 9],
        &[3, 10],
        &[4, 7],
        &[7, 8],
        &[7, 10],
        &[8, 9],
        &[9, 10],
        &[3, 12],
        &[6, 12],
        &[7, 12],
        &[10, 12],
    ];
    LineCombinatorics::new(12, points.iter().map(|p| p.to_vec()).collect())
}

/// The eleven-line combinatorics obtained by deleting line 12.
pub fn builtin_g91_prime() -> LineCombinatorics {
    builtin_g91().delete_last_line()
}
