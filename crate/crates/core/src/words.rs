//! Free-group words, braid words, and the Artin action of braids on free groups.
//!
//! Words use the Tietze representation: a sequence of nonzero signed
//! generator indices, `k` for `x_k` and `-k` for `x_k⁻¹`.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WordError {
    #[error("letter {letter} out of range for rank {rank}")]
    LetterOutOfRange { letter: i32, rank: usize },
    #[error("invalid strand range {first}..={last} on {strands} strands")]
    RangeError { first: usize, last: usize, strands: usize },
    #[error("rank mismatch: braid on {braid} strands, word of rank {word}")]
    RankMismatch { braid: usize, word: usize },
    #[error("word {0:?} is not conjugate to a generator")]
    NotConjugateToGenerator(Vec<i32>),
    #[error("not a permutation: {0:?}")]
    NotAPermutation(Vec<usize>),
}

/// Element of the free group of rank `rank`, kept freely reduced.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeWord {
    rank: usize,
    letters: Vec<i32>,
}

impl FreeWord {
    pub fn new(rank: usize, letters: impl IntoIterator<Item = i32>) -> Result<Self, WordError> {
        let letters: Vec<i32> = letters.into_iter().collect();
        if let Some(&bad) = letters.iter().find(|&&l| l == 0 || l.unsigned_abs() as usize > rank) {
            return Err(WordError::LetterOutOfRange { letter: bad, rank });
        }
        Ok(FreeWord { rank, letters: free_reduce(letters) })
    }

    pub fn identity(rank: usize) -> Self {
        FreeWord { rank, letters: Vec::new() }
    }

    pub fn generator(rank: usize, k: i32) -> Result<Self, WordError> {
        Self::new(rank, [k])
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Self {
        FreeWord { rank: self.rank, letters: self.letters.iter().rev().map(|l| -l).collect() }
    }

    pub fn mul(&self, other: &FreeWord) -> Self {
        debug_assert_eq!(self.rank, other.rank);
        let mut letters = self.letters.clone();
        for &l in &other.letters {
            if letters.last() == Some(&-l) {
                letters.pop();
            } else {
                letters.push(l);
            }
        }
        FreeWord { rank: self.rank, letters }
    }

    /// `c⁻¹ · self · c`
    pub fn conjugate_by(&self, c: &FreeWord) -> Self {
        c.inverse().mul(self).mul(c)
    }

    /// Replaces every letter `±k` by `±relabel(k)`.
    pub fn relabel(&self, new_rank: usize, relabel: impl Fn(usize) -> usize) -> Result<Self, WordError> {
        Self::new(
            new_rank,
            self.letters.iter().map(|&l| l.signum() * relabel(l.unsigned_abs() as usize) as i32),
        )
    }

    /// Exponent sum of every generator.
    pub fn exponent_sums(&self) -> Vec<i64> {
        let mut out = vec![0; self.rank];
        for &l in &self.letters {
            out[l.unsigned_abs() as usize - 1] += l.signum() as i64;
        }
        out
    }
}

impl fmt::Debug for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FreeWord{:?}", self.letters)
    }
}

impl Serialize for FreeWord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.letters.serialize(s)
    }
}

fn free_reduce(letters: Vec<i32>) -> Vec<i32> {
    let mut out: Vec<i32> = Vec::with_capacity(letters.len());
    for l in letters {
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

/// Word in the Artin generators `σ_1, …, σ_{n-1}` of the braid group on `n` strands.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: impl IntoIterator<Item = i32>) -> Result<Self, WordError> {
        let letters: Vec<i32> = letters.into_iter().collect();
        if let Some(&bad) = letters.iter().find(|&&l| l == 0 || l.unsigned_abs() as usize >= strands) {
            return Err(WordError::LetterOutOfRange { letter: bad, rank: strands });
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn identity(strands: usize) -> Self {
        BraidWord { strands, letters: Vec::new() }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Self {
        BraidWord { strands: self.strands, letters: self.letters.iter().rev().map(|l| -l).collect() }
    }

    pub fn mul(&self, other: &BraidWord) -> Self {
        debug_assert_eq!(self.strands, other.strands);
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BraidWord { strands: self.strands, letters }
    }

    /// Mirror image: every generator replaced by its inverse.
    pub fn mirror(&self) -> Self {
        BraidWord { strands: self.strands, letters: self.letters.iter().map(|l| -l).collect() }
    }
}

impl fmt::Debug for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BraidWord{:?}", self.letters)
    }
}

/// Bijection of `{1, …, n}`; `images[i-1]` is the image of `i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn new(images: Vec<usize>) -> Result<Self, WordError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i == 0 || i > n || seen[i - 1] {
                return Err(WordError::NotAPermutation(images));
            }
            seen[i - 1] = true;
        }
        Ok(Perm { images })
    }

    pub fn identity(n: usize) -> Self {
        Perm { images: (1..=n).collect() }
    }

    /// The transposition `(a b)` on `n` points.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut p = Self::identity(n);
        p.images.swap(a - 1, b - 1);
        p
    }

    /// Product of disjoint or overlapping cycles, applied left to right.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self, WordError> {
        let mut p = Self::identity(n);
        for c in cycles {
            let mut q = Self::identity(n);
            for (k, &a) in c.iter().enumerate() {
                q.images[a - 1] = c[(k + 1) % c.len()];
            }
            Perm::new(q.images.clone())?;
            p = p.then(&q);
        }
        Ok(p)
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j - 1] = i + 1;
        }
        Perm { images: inv }
    }

    /// Apply `self` first, then `other`.
    pub fn then(&self, other: &Perm) -> Self {
        Perm { images: self.images.iter().map(|&i| other.apply(i)).collect() }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i + 1 == j)
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{:?}", self.images)
    }
}

/// Positive half-twist on the strands `first..=last`:
/// `Π_{k = last-1 down to first} (σ_first ⋯ σ_k)`.
pub fn half_twist(first: usize, last: usize, strands: usize) -> Result<BraidWord, WordError> {
    if first == 0 || first > last || last > strands {
        return Err(WordError::RangeError { first, last, strands });
    }
    let mut letters = Vec::new();
    for k in (first..last).rev() {
        letters.extend((first..=k).map(|i| i as i32));
    }
    BraidWord::new(strands, letters)
}

/// Right action of a braid on a free word.
///
/// `σ_k` sends `x_k ↦ x_k x_{k+1} x_k⁻¹`, `x_{k+1} ↦ x_k` and fixes the other
/// generators; a word acts letter by letter from left to right.
pub fn braid_act(b: &BraidWord, w: &FreeWord) -> Result<FreeWord, WordError> {
    if b.strands != w.rank {
        return Err(WordError::RankMismatch { braid: b.strands, word: w.rank });
    }
    let mut cur = w.letters.clone();
    for &s in &b.letters {
        let k = s.abs();
        let mut next = Vec::with_capacity(cur.len() + 4);
        for &l in &cur {
            let (g, sign) = (l.abs(), l.signum());
            let image: &[i32] = match (s > 0, g == k, g == k + 1) {
                (true, true, _) => &[k, k + 1, -k],
                (true, _, true) => &[k],
                (false, true, _) => &[k + 1],
                (false, _, true) => &[-(k + 1), k, k + 1],
                _ => &[g],
            };
            if sign > 0 {
                push_reduced(&mut next, image.iter().copied());
            } else {
                push_reduced(&mut next, image.iter().rev().map(|x| -x));
            }
        }
        cur = next;
    }
    Ok(FreeWord { rank: w.rank, letters: cur })
}

fn push_reduced(out: &mut Vec<i32>, letters: impl Iterator<Item = i32>) {
    for l in letters {
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
}

/// Underlying permutation: `σ_k ↦ (k k+1)`, composed left to right.
pub fn braid_permutation(b: &BraidWord) -> Perm {
    let mut p = Perm::identity(b.strands);
    for &s in &b.letters {
        let k = s.unsigned_abs() as usize;
        p = p.then(&Perm::transposition(b.strands, k, k + 1));
    }
    p
}

/// Writes `w = c⁻¹ · x_gen · c` with `w` reduced of odd length `2m+1`;
/// returns `(gen, c)` where `c` is the suffix of length `m`.
pub fn conjugate_normal_form(w: &FreeWord) -> Result<(i32, FreeWord), WordError> {
    let n = w.letters.len();
    if n.is_multiple_of(2) {
        return Err(WordError::NotConjugateToGenerator(w.letters.clone()));
    }
    let m = (n - 1) / 2;
    let prefix = &w.letters[..m];
    let suffix = &w.letters[m + 1..];
    let inverse_flanks = prefix.iter().zip(suffix.iter().rev()).all(|(a, b)| *a == -*b);
    if !inverse_flanks {
        return Err(WordError::NotConjugateToGenerator(w.letters.clone()));
    }
    Ok((w.letters[m], FreeWord { rank: w.rank, letters: suffix.to_vec() }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fw(n: usize, l: &[i32]) -> FreeWord {
        FreeWord::new(n, l.iter().copied()).unwrap()
    }

    fn bw(n: usize, l: &[i32]) -> BraidWord {
        BraidWord::new(n, l.iter().copied()).unwrap()
    }

    #[test]
    fn free_reduction_on_construction() {
        assert_eq!(fw(3, &[1, 2, -2, -1, 3]).letters(), &[3]);
        assert!(fw(2, &[1, -1]).is_empty());
        assert!(FreeWord::new(2, [3]).is_err());
        assert!(FreeWord::new(2, [0]).is_err());
    }

    #[test]
    fn half_twist_single_strand() {
        assert!(half_twist(3, 3, 5).unwrap().is_empty());
    }

    #[test]
    fn half_twist_three_strands() {
        assert_eq!(half_twist(1, 3, 4).unwrap().letters(), &[1, 2, 1]);
        assert_eq!(half_twist(2, 5, 6).unwrap().letters(), &[2, 3, 4, 2, 3, 2]);
    }

    #[test]
    fn half_twist_bad_range() {
        assert!(matches!(half_twist(3, 2, 5), Err(WordError::RangeError { .. })));
        assert!(matches!(half_twist(0, 2, 5), Err(WordError::RangeError { .. })));
        assert!(matches!(half_twist(1, 6, 5), Err(WordError::RangeError { .. })));
    }

    #[test]
    fn half_twist_reverses_block() {
        assert_eq!(braid_permutation(&half_twist(1, 4, 4).unwrap()).images(), &[4, 3, 2, 1]);
        for n in 2..=6 {
            let rev: Vec<usize> = (1..=n).rev().collect();
            assert_eq!(braid_permutation(&half_twist(1, n, n).unwrap()).images(), rev.as_slice());
        }
    }

    #[test]
    fn action_definition_cases() {
        let s1 = bw(2, &[1]);
        assert_eq!(braid_act(&s1, &fw(2, &[1])).unwrap().letters(), &[1, 2, -1]);
        assert_eq!(braid_act(&s1, &fw(2, &[2])).unwrap().letters(), &[1]);
        let w = fw(2, &[2, 1, -2]);
        assert_eq!(braid_act(&BraidWord::identity(2), &w).unwrap(), w);
    }

    #[test]
    fn action_inverse_generator() {
        let s = bw(3, &[-1]);
        assert_eq!(braid_act(&s, &fw(3, &[1])).unwrap().letters(), &[2]);
        assert_eq!(braid_act(&s, &fw(3, &[2])).unwrap().letters(), &[-2, 1, 2]);
        assert_eq!(braid_act(&s, &fw(3, &[3])).unwrap().letters(), &[3]);
    }

    #[test]
    fn action_rank_mismatch() {
        assert!(matches!(
            braid_act(&bw(3, &[1]), &fw(2, &[1])),
            Err(WordError::RankMismatch { braid: 3, word: 2 })
        ));
    }

    #[test]
    fn permutation_examples() {
        assert!(braid_permutation(&BraidWord::identity(4)).is_identity());
        let p = braid_permutation(&bw(3, &[1, 2]));
        assert_eq!(p.images(), &[3, 1, 2]);
        assert_eq!(p.then(&p).then(&p), Perm::identity(3));
    }

    #[test]
    fn conjugate_normal_form_cases() {
        let (g, c) = conjugate_normal_form(&fw(5, &[3])).unwrap();
        assert_eq!((g, c.letters().to_vec()), (3, vec![]));
        let (g, c) = conjugate_normal_form(&fw(5, &[-2, 5, 2])).unwrap();
        assert_eq!((g, c.letters().to_vec()), (5, vec![2]));
        assert!(matches!(
            conjugate_normal_form(&fw(5, &[1, 2])),
            Err(WordError::NotConjugateToGenerator(_))
        ));
        assert!(matches!(
            conjugate_normal_form(&fw(5, &[1, 2, 1])),
            Err(WordError::NotConjugateToGenerator(_))
        ));
    }

    #[test]
    fn conjugate_normal_form_contract() {
        let c = fw(4, &[2, -3, 1]);
        let w = fw(4, &[4]).conjugate_by(&c);
        let (g, c2) = conjugate_normal_form(&w).unwrap();
        assert_eq!(g, 4);
        assert_eq!(fw(4, &[g]).conjugate_by(&c2), w);
    }

    #[test]
    fn perm_rejects_non_bijection() {
        assert!(Perm::new(vec![1, 1, 3]).is_err());
        assert!(Perm::new(vec![1, 4, 3]).is_err());
    }

    #[test]
    fn perm_from_cycles() {
        let p = Perm::from_cycles(6, &[&[1, 2, 3], &[5, 6]]).unwrap();
        assert_eq!(p.images(), &[2, 3, 1, 4, 6, 5]);
        assert_eq!(p.then(&p.inverse()), Perm::identity(6));
    }
}
