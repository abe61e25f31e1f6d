use arrtop::alexander::{Coeff, LinForm, TruncSeries};
use arrtop::exactalg::{smith_normal_form, IntMatrix, RatMatrix};
use arrtop::words::{braid_act, braid_permutation, BraidWord, FreeWord};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

const STRANDS: usize = 5;

fn letters(rank: usize, max_len: usize) -> impl Strategy<Value = Vec<i32>> {
    let r = rank as i32;
    prop::collection::vec((1..=r, any::<bool>()).prop_map(|(k, neg)| if neg { -k } else { k }), 0..max_len)
}

fn free_word(rank: usize, max_len: usize) -> impl Strategy<Value = FreeWord> {
    letters(rank, max_len).prop_map(move |l| FreeWord::new(rank, l).unwrap())
}

fn braid(strands: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    letters(strands - 1, max_len).prop_map(move |l| BraidWord::new(strands, l).unwrap())
}

// cancels adjacent inverse pairs by rescanning until nothing changes
fn naive_reduce(mut w: Vec<i32>) -> Vec<i32> {
    loop {
        let hit = w.windows(2).position(|p| p[0] == -p[1]);
        match hit {
            Some(i) => {
                w.drain(i..i + 2);
            }
            None => return w,
        }
    }
}

fn act_all(b: &BraidWord, n: usize) -> Vec<FreeWord> {
    (1..=n as i32).map(|k| braid_act(b, &FreeWord::generator(n, k).unwrap()).unwrap()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn free_reduction_matches_naive(l in letters(4, 40)) {
        let w = FreeWord::new(4, l.clone()).unwrap();
        prop_assert_eq!(w.letters().to_vec(), naive_reduce(l));
        prop_assert!(w.letters().windows(2).all(|p| p[0] != -p[1]));
    }

    #[test]
    fn free_group_axioms(a in free_word(4, 20), b in free_word(4, 20), c in free_word(4, 20)) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert!(a.mul(&a.inverse()).is_empty());
        prop_assert!(a.inverse().mul(&a).is_empty());
        prop_assert_eq!(a.mul(&FreeWord::identity(4)), a.clone());
        prop_assert_eq!(a.mul(&b).inverse(), b.inverse().mul(&a.inverse()));
        let sums: Vec<i64> = a.exponent_sums().iter().zip(b.exponent_sums()).map(|(x, y)| x + y).collect();
        prop_assert_eq!(a.mul(&b).exponent_sums(), sums);
    }

    #[test]
    fn braid_relations_hold(i in 1..(STRANDS as i32 - 1), j in 1..(STRANDS as i32), w in free_word(STRANDS, 12)) {
        let act = |l: Vec<i32>| braid_act(&BraidWord::new(STRANDS, l).unwrap(), &w).unwrap();
        prop_assert_eq!(act(vec![i, i + 1, i]), act(vec![i + 1, i, i + 1]));
        if (i - j).abs() >= 2 {
            prop_assert_eq!(act(vec![i, j]), act(vec![j, i]));
        }
        prop_assert_eq!(act(vec![j, -j]), w.clone());
        prop_assert_eq!(act(vec![-j, j]), w.clone());
    }

    #[test]
    fn braid_action_is_a_right_action_by_automorphisms(
        b in braid(STRANDS, 8),
        c in braid(STRANDS, 8),
        u in free_word(STRANDS, 10),
        v in free_word(STRANDS, 10),
    ) {
        prop_assert_eq!(braid_act(&b, &u.mul(&v)).unwrap(), braid_act(&b, &u).unwrap().mul(&braid_act(&b, &v).unwrap()));
        prop_assert_eq!(braid_act(&b.mul(&c), &u).unwrap(), braid_act(&c, &braid_act(&b, &u).unwrap()).unwrap());
        prop_assert_eq!(braid_act(&b.inverse(), &braid_act(&b, &u).unwrap()).unwrap(), u.clone());
    }

    #[test]
    fn braid_action_fixes_the_boundary_word(b in braid(STRANDS, 10)) {
        let full = FreeWord::new(STRANDS, 1..=STRANDS as i32).unwrap();
        prop_assert_eq!(braid_act(&b, &full).unwrap(), full);
        // generators go to conjugates of generators following the permutation
        let p = braid_permutation(&b);
        for (k, img) in act_all(&b, STRANDS).iter().enumerate() {
            let sums = img.exponent_sums();
            let target = p.apply(k + 1);
            let expected: Vec<i64> = (1..=STRANDS).map(|g| i64::from(g == target)).collect();
            prop_assert_eq!(sums, expected);
        }
    }
}

const VARS: usize = 4;

fn series() -> impl Strategy<Value = TruncSeries<BigInt>> {
    (-9i64..=9, prop::collection::vec(-9i64..=9, VARS))
        .prop_map(|(c, l)| TruncSeries { c0: BigInt::from(c), linear: l.into_iter().map(BigInt::from).collect() })
}

fn add(a: &TruncSeries<BigInt>, b: &TruncSeries<BigInt>) -> TruncSeries<BigInt> {
    let mut out = a.clone();
    out.add_scaled(b, &BigInt::from(1));
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn truncated_ring_axioms(a in series(), b in series(), c in series()) {
        let one = TruncSeries::one(VARS);
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&add(&b, &c)), add(&a.mul(&b), &a.mul(&c)));
        prop_assert_eq!(a.mul(&one), a.clone());
        prop_assert!(add(&a, &a.negated()).is_zero());
        prop_assert!(a.mul(&TruncSeries::zero(VARS)).is_zero());
    }

    #[test]
    fn truncated_ring_matches_polynomial_product(a in series(), b in series()) {
        // (a0 + A)(b0 + B) = a0 b0 + a0 B + b0 A + A B, and A B lies in the square of the ideal
        let (a0, la) = (&a.c0, &a.linear);
        let (b0, lb) = (&b.c0, &b.linear);
        let p = a.mul(&b);
        prop_assert_eq!(&p.c0, &(a0 * b0));
        for k in 0..VARS {
            prop_assert_eq!(&p.linear[k], &(a0 * &lb[k] + b0 * &la[k]));
        }
    }

    #[test]
    fn units_of_the_truncated_ring(k in 1..=VARS as i32, a in series()) {
        let one = TruncSeries::one(VARS);
        prop_assert_eq!(TruncSeries::t(k, VARS).mul(&TruncSeries::t(-k, VARS)), one.clone());
        let t = TruncSeries::t(k, VARS);
        prop_assert_eq!(add(&one, &TruncSeries::sigma(k as usize, VARS)), t);
        let s = TruncSeries::sigma(k as usize, VARS);
        prop_assert!(s.mul(&s).is_zero());
        match a.unit_inverse() {
            Some(inv) => prop_assert_eq!(a.mul(&inv), one),
            None => prop_assert!(a.c0.abs() != BigInt::from(1)),
        }
    }

    #[test]
    fn linear_forms_specialize_multiplicatively(a in series(), vals in prop::collection::vec(-5i64..=5, 3)) {
        // a series with unknown coefficients, multiplied then evaluated, equals evaluating first
        let vals: Vec<BigInt> = vals.into_iter().map(BigInt::from).collect();
        let mk = |i: usize| {
            let mut f = LinForm::unknown(i);
            f.add_scaled(&LinForm::constant(i as i64 + 1), &BigInt::from(1));
            f
        };
        let symbolic = TruncSeries { c0: mk(0), linear: (0..VARS).map(|k| mk(k % 3)).collect() };
        let concrete = TruncSeries {
            c0: mk(0).evaluate(&vals),
            linear: (0..VARS).map(|k| mk(k % 3).evaluate(&vals)).collect(),
        };
        let prod = symbolic.scaled_by(&a);
        let expect = a.mul(&concrete);
        prop_assert_eq!(prod.c0.evaluate(&vals), expect.c0);
        for k in 0..VARS {
            prop_assert_eq!(prod.linear[k].evaluate(&vals), expect.linear[k].clone());
        }
    }
}

fn small_matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = IntMatrix> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop_oneof![3 => Just(0i64), 7 => -12i64..=12], r * c)
            .prop_map(move |d| IntMatrix::from_vec(r, c, d.into_iter().map(BigInt::from).collect()))
    })
}

fn det_i128(m: &[Vec<i128>]) -> i128 {
    if m.is_empty() {
        return 1;
    }
    (0..m.len())
        .map(|j| {
            let minor: Vec<Vec<i128>> = m[1..].iter().map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect()).collect();
            let sign = if j % 2 == 0 { 1 } else { -1 };
            sign * m[0][j] * det_i128(&minor)
        })
        .sum()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    (0..n).flat_map(|last| subsets(last, k - 1).into_iter().map(move |mut s| { s.push(last); s })).collect()
}

// gcd of all k×k minors
fn determinantal_divisor(m: &IntMatrix, k: usize) -> i128 {
    let rows: Vec<Vec<i128>> = m.to_rows().iter().map(|r| r.iter().map(|x| i128::try_from(x).unwrap()).collect()).collect();
    let mut g = 0i128;
    for rs in subsets(m.rows(), k) {
        for cs in subsets(m.cols(), k) {
            let sub: Vec<Vec<i128>> = rs.iter().map(|&r| cs.iter().map(|&c| rows[r][c]).collect()).collect();
            g = g.gcd(&det_i128(&sub));
        }
    }
    g
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn smith_form_identities(m in small_matrix(6, 6)) {
        let s = smith_normal_form(&m);
        prop_assert_eq!(s.u.mul(&m).mul(&s.v), s.d.clone());
        prop_assert!(s.u.determinant().abs() == BigInt::from(1));
        prop_assert!(s.v.determinant().abs() == BigInt::from(1));
        for i in 0..s.d.rows() {
            for j in 0..s.d.cols() {
                if i != j {
                    prop_assert!(s.d.get(i, j).is_zero());
                }
            }
        }
        let f = s.invariant_factors();
        prop_assert_eq!(f.len(), s.rank);
        prop_assert!(f.iter().all(|x| x.is_positive()));
        for w in f.windows(2) {
            prop_assert!((&w[1] % &w[0]).is_zero());
        }
        prop_assert_eq!(s.rank, RatMatrix::from_int(&m).rank());
        prop_assert_eq!(s.rank, m.rank());
    }

    #[test]
    fn smith_factors_match_minor_gcds(m in small_matrix(4, 4)) {
        let f = smith_normal_form(&m).invariant_factors();
        let mut prod = 1i128;
        for k in 1..=m.rows().min(m.cols()) {
            let dk = determinantal_divisor(&m, k);
            if k <= f.len() {
                prod *= i128::try_from(&f[k - 1]).unwrap();
                prop_assert_eq!(dk, prod);
            } else {
                prop_assert_eq!(dk, 0);
            }
        }
    }
}
