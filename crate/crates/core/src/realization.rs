//! Exact arithmetic in the cyclotomic field ℚ(ζ), ζ a primitive fifth root
//! of unity, and the four conjugate realizations of the twelve-line
//! combinatorics.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::combinatorics::LineCombinatorics;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RealizationError {
    #[error("exponent {0} is not coprime to 5")]
    BadExponent(u32),
    #[error("lines {0} and {1} are proportional")]
    DuplicateLine(usize, usize),
    #[error("all coefficients of a line are zero")]
    ZeroLine,
    #[error("malformed rational {0:?}")]
    BadRational(String),
}

/// `c₀ + c₁ζ + c₂ζ² + c₃ζ³` in ℚ[ζ]/(ζ⁴+ζ³+ζ²+ζ+1).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cyc5 {
    coeffs: [BigRational; 4],
}

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl Cyc5 {
    pub fn new(coeffs: [BigRational; 4]) -> Self {
        Cyc5 { coeffs }
    }

    pub fn from_ints(c: [i64; 4]) -> Self {
        Cyc5 { coeffs: c.map(q) }
    }

    pub fn rational(r: BigRational) -> Self {
        Cyc5 { coeffs: [r, BigRational::zero(), BigRational::zero(), BigRational::zero()] }
    }

    pub fn integer(n: i64) -> Self {
        Self::rational(q(n))
    }

    pub fn zeta() -> Self {
        Self::from_ints([0, 1, 0, 0])
    }

    /// `ζ^k` for any integer `k`.
    pub fn zeta_pow(k: i64) -> Self {
        let mut c = [BigRational::zero(), BigRational::zero(), BigRational::zero(), BigRational::zero()];
        let k = k.rem_euclid(5) as usize;
        if k == 4 {
            c = [q(-1), q(-1), q(-1), q(-1)];
        } else {
            c[k] = BigRational::one();
        }
        Cyc5 { coeffs: c }
    }

    pub fn coeffs(&self) -> &[BigRational; 4] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// Reduces a polynomial in ζ of any degree.
    fn from_poly(poly: &[BigRational]) -> Self {
        let mut folded = vec![BigRational::zero(); 5];
        for (k, c) in poly.iter().enumerate() {
            folded[k % 5] += c;
        }
        let top = folded[4].clone();
        Cyc5 {
            coeffs: [
                &folded[0] - &top,
                &folded[1] - &top,
                &folded[2] - &top,
                &folded[3] - &top,
            ],
        }
    }

    /// The field automorphism `ζ ↦ ζ^i`.
    pub fn galois(&self, i: u32) -> Result<Self, RealizationError> {
        if i.is_multiple_of(5) {
            return Err(RealizationError::BadExponent(i));
        }
        let mut poly = vec![BigRational::zero(); 5];
        for (k, c) in self.coeffs.iter().enumerate() {
            poly[(k * i as usize) % 5] += c;
        }
        Ok(Self::from_poly(&poly))
    }

    /// Complex conjugate, i.e. `ζ ↦ ζ⁴`.
    pub fn conj(&self) -> Self {
        self.galois(4).expect("4 is coprime to 5")
    }

    /// Field norm down to ℚ.
    pub fn norm(&self) -> BigRational {
        let p = self * &self.galois(2).unwrap() * self.galois(3).unwrap() * self.galois(4).unwrap();
        debug_assert!(p.is_rational());
        p.coeffs[0].clone()
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let others = self.galois(2).unwrap() * self.galois(3).unwrap() * self.galois(4).unwrap();
        let n = self.norm();
        Some(others.scale(&n.recip()))
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        Cyc5 { coeffs: self.coeffs.clone().map(|c| c * r) }
    }
}

impl fmt::Debug for Cyc5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({} + {}ζ + {}ζ² + {}ζ³)",
            self.coeffs[0], self.coeffs[1], self.coeffs[2], self.coeffs[3]
        )
    }
}

impl Add for &Cyc5 {
    type Output = Cyc5;
    fn add(self, o: &Cyc5) -> Cyc5 {
        Cyc5 { coeffs: std::array::from_fn(|k| &self.coeffs[k] + &o.coeffs[k]) }
    }
}

impl Sub for &Cyc5 {
    type Output = Cyc5;
    fn sub(self, o: &Cyc5) -> Cyc5 {
        Cyc5 { coeffs: std::array::from_fn(|k| &self.coeffs[k] - &o.coeffs[k]) }
    }
}

impl Neg for &Cyc5 {
    type Output = Cyc5;
    fn neg(self) -> Cyc5 {
        Cyc5 { coeffs: std::array::from_fn(|k| -&self.coeffs[k]) }
    }
}

impl Mul for &Cyc5 {
    type Output = Cyc5;
    fn mul(self, o: &Cyc5) -> Cyc5 {
        let mut poly = vec![BigRational::zero(); 7];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                poly[i + j] += a * b;
            }
        }
        Cyc5::from_poly(&poly)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Cyc5 {
            type Output = Cyc5;
            fn $m(self, o: Cyc5) -> Cyc5 {
                (&self).$m(&o)
            }
        }
        impl $tr<&Cyc5> for Cyc5 {
            type Output = Cyc5;
            fn $m(self, o: &Cyc5) -> Cyc5 {
                (&self).$m(o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Cyc5 {
    type Output = Cyc5;
    fn neg(self) -> Cyc5 {
        -&self
    }
}

/// Line `a·x + b·y + c·z = 0` of the projective plane over ℚ(ζ).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProjLine {
    pub coeffs: [Cyc5; 3],
}

impl ProjLine {
    pub fn new(a: Cyc5, b: Cyc5, c: Cyc5) -> Self {
        ProjLine { coeffs: [a, b, c] }
    }

    /// Representative whose first nonzero coefficient is 1.
    pub fn canonical(&self) -> Result<Self, RealizationError> {
        Ok(ProjLine { coeffs: canonical_triple(&self.coeffs)? })
    }

    pub fn galois(&self, i: u32) -> Result<Self, RealizationError> {
        Ok(ProjLine {
            coeffs: [self.coeffs[0].galois(i)?, self.coeffs[1].galois(i)?, self.coeffs[2].galois(i)?],
        })
    }

    pub fn contains(&self, point: &[Cyc5; 3]) -> bool {
        (&(&self.coeffs[0] * &point[0]) + &(&self.coeffs[1] * &point[1]) + &self.coeffs[2] * &point[2]).is_zero()
    }
}

fn canonical_triple(v: &[Cyc5; 3]) -> Result<[Cyc5; 3], RealizationError> {
    let lead = v.iter().find(|c| !c.is_zero()).ok_or(RealizationError::ZeroLine)?;
    let inv = lead.inverse().expect("nonzero");
    Ok([&v[0] * &inv, &v[1] * &inv, &v[2] * &inv])
}

fn cross(a: &[Cyc5; 3], b: &[Cyc5; 3]) -> [Cyc5; 3] {
    [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

/// Exact 3×3 determinant of three coefficient triples.
pub fn det3(a: &[Cyc5; 3], b: &[Cyc5; 3], c: &[Cyc5; 3]) -> Cyc5 {
    let bc = cross(b, c);
    &(&(&a[0] * &bc[0]) + &(&a[1] * &bc[1])) + &(&a[2] * &bc[2])
}

/// The twelve lines with `ξ = ζ^i`; `ξ̄` is `ξ⁴`.
pub fn builtin_a91(i: u32) -> Result<Vec<ProjLine>, RealizationError> {
    if i.is_multiple_of(5) || i > 4 {
        return Err(RealizationError::BadExponent(i));
    }
    let xi = Cyc5::zeta_pow(i as i64);
    let xib = xi.conj();
    let one = Cyc5::integer(1);
    let zero = Cyc5::integer(0);
    let n = |k: i64| Cyc5::integer(k);

    let xi2 = &xi * &xi;
    let xib2 = &xib * &xib;
    let s = &xi2 + &xi; // ξ² + ξ
    let sb = s.conj();
    let t = &xib2 + &xi; // ξ̄² + ξ
    let u = &xib + &xi2; // ξ̄ + ξ²

    let l11_y = &(&(&one + &(&n(2) * &xi)) + &(&n(3) * &xi2)) - &xib2;
    let l11_z = -&(&(&(&n(2) + &(&n(4) * &xi)) + &xi2) + &(&n(3) * &xib2));

    let lines = vec![
        ProjLine::new(one.clone(), zero.clone(), n(-1)),
        ProjLine::new(one.clone(), one.clone(), zero.clone()),
        ProjLine::new(one.clone(), zero.clone(), one.clone()),
        ProjLine::new(one.clone(), n(-1), zero.clone()),
        ProjLine::new(zero.clone(), one.clone(), n(-1)),
        ProjLine::new(zero.clone(), one.clone(), one.clone()),
        ProjLine::new(one.clone(), -&sb, -&s),
        ProjLine::new(one.clone(), u.clone(), -&t),
        ProjLine::new(one.clone(), s.clone(), sb.clone()),
        ProjLine::new(one.clone(), -&t, u.clone()),
        ProjLine::new(n(5), l11_y, l11_z),
        ProjLine::new(one.clone(), -&(&one + &xib), xib.clone()),
    ];
    Ok(lines)
}

/// Incidence combinatorics of a family of lines: intersects every pair and
/// groups pairs by their (canonicalized) common point.
pub fn incidence_combinatorics(lines: &[ProjLine]) -> Result<LineCombinatorics, RealizationError> {
    let mut by_point: BTreeMap<[Cyc5; 3], Vec<usize>> = BTreeMap::new();
    for i in 0..lines.len() {
        for j in i + 1..lines.len() {
            let p = cross(&lines[i].coeffs, &lines[j].coeffs);
            if p.iter().all(Cyc5::is_zero) {
                return Err(RealizationError::DuplicateLine(i + 1, j + 1));
            }
            let key = canonical_triple(&p)?;
            let entry = by_point.entry(key).or_default();
            for l in [i + 1, j + 1] {
                if !entry.contains(&l) {
                    entry.push(l);
                }
            }
        }
    }
    let mut points: Vec<Vec<usize>> = by_point
        .into_values()
        .map(|mut v| {
            v.sort_unstable();
            v
        })
        .collect();
    points.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    Ok(LineCombinatorics::new(lines.len(), points))
}

fn rat_to_string(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn parse_rat(s: &str) -> Result<BigRational, RealizationError> {
    let bad = || RealizationError::BadRational(s.to_string());
    match s.split_once('/') {
        Some((n, d)) => {
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n.trim().parse().map_err(|_| bad())?, d))
        }
        None => Ok(BigRational::from_integer(s.trim().parse().map_err(|_| bad())?)),
    }
}

/// JSON form of a line: three coefficients, each four `"p/q"` strings in
/// the power basis `1, ζ, ζ², ζ³`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LineJson(pub [[String; 4]; 3]);

impl From<&ProjLine> for LineJson {
    fn from(l: &ProjLine) -> Self {
        LineJson(l.coeffs.clone().map(|c| c.coeffs.clone().map(|r| rat_to_string(&r))))
    }
}

impl TryFrom<&LineJson> for ProjLine {
    type Error = RealizationError;
    fn try_from(j: &LineJson) -> Result<Self, RealizationError> {
        let mut out: Vec<Cyc5> = Vec::with_capacity(3);
        for c in &j.0 {
            out.push(Cyc5::new([parse_rat(&c[0])?, parse_rat(&c[1])?, parse_rat(&c[2])?, parse_rat(&c[3])?]));
        }
        let [a, b, c]: [Cyc5; 3] = out.try_into().expect("three coefficients");
        Ok(ProjLine::new(a, b, c))
    }
}

pub fn lines_to_json(lines: &[ProjLine]) -> Vec<LineJson> {
    lines.iter().map(LineJson::from).collect()
}

pub fn lines_from_json(lines: &[LineJson]) -> Result<Vec<ProjLine>, RealizationError> {
    lines.iter().map(ProjLine::try_from).collect()
}
