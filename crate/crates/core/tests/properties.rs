use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

use extremal::gleason::{extremal_enumerator, type_params, CodeType};
use extremal::oracle::generic_solve;
use extremal::polyarith::{
    densify, eval_at_ones, macwilliams_transform, poly_mul, poly_pow, sparsify, StepPoly,
};

fn binomial_row(e: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for _ in 0..e {
        let mut next = vec![BigInt::zero(); row.len() + 1];
        for (i, c) in row.iter().enumerate() {
            next[i] += c;
            next[i + 1] += c;
        }
        row = next;
    }
    row
}

/// `P(X + (q-1)Y, X - Y)` by expanding each monomial separately.
fn macwilliams_by_monomials(p: &StepPoly, q: u32) -> Vec<BigInt> {
    let n = p.degree();
    let qm1: BigInt = BigInt::from(q) - 1;
    let mut out = vec![BigInt::zero(); n + 1];
    for (j, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        // (X + (q-1)Y)^(n-j): coefficient of Y^a is C(n-j, a) (q-1)^a
        let left: Vec<BigInt> = binomial_row(n - j)
            .into_iter()
            .enumerate()
            .map(|(a, b)| b * qm1.pow(a as u32))
            .collect();
        // (X - Y)^j: coefficient of Y^b is C(j, b) (-1)^b
        let right: Vec<BigInt> = binomial_row(j)
            .into_iter()
            .enumerate()
            .map(|(b, v)| if b % 2 == 1 { -v } else { v })
            .collect();
        for (a, l) in left.iter().enumerate() {
            for (b, r) in right.iter().enumerate() {
                out[a + b] += c * l * r;
            }
        }
    }
    out
}

#[test]
fn g_iii_squared_matches_binomial_expansion() {
    // Y^6 (X^3 - Y^3)^6
    let p = type_params(CodeType::III);
    let sq = poly_mul(&p.g, &p.g).unwrap();
    let mut expect = vec![BigInt::zero(); 2];
    expect.extend(
        binomial_row(6)
            .into_iter()
            .enumerate()
            .map(|(k, b)| if k % 2 == 1 { -b } else { b }),
    );
    assert_eq!(sq.coeffs(), &expect[..]);
}

#[test]
fn f_iii_cubed_matches_binomial_expansion() {
    // (X^4 + 8XY^3)^3: slot k carries C(3,k) 8^k
    let f3 = poly_pow(&type_params(CodeType::III).f, 3);
    let expect: Vec<BigInt> = binomial_row(3)
        .into_iter()
        .enumerate()
        .map(|(k, b)| b * BigInt::from(8).pow(k as u32))
        .chain(std::iter::once(BigInt::zero()))
        .collect();
    assert_eq!(f3.coeffs(), &expect[..]);
}

#[test]
fn horner_transform_matches_monomial_expansion() {
    for t in CodeType::ALL {
        let q = type_params(t).q;
        for n in (2..=48).filter(|&n| extremal::gleason::admissible(t, n)) {
            let d = densify(&extremal_enumerator(t, n).unwrap().poly);
            let fast = macwilliams_transform(&d, q).unwrap();
            assert_eq!(fast.coeffs(), &macwilliams_by_monomials(&d, q)[..], "{t} {n}");
        }
    }
}

#[test]
fn oracle_agrees_on_small_lengths() {
    for t in CodeType::ALL {
        for n in (1..=64).filter(|&n| extremal::gleason::admissible(t, n)) {
            assert_eq!(extremal_enumerator(t, n).unwrap(), generic_solve(t, n).unwrap(), "{t} {n}");
        }
    }
}

fn arb_poly(step: usize) -> impl Strategy<Value = StepPoly> {
    (0usize..=12).prop_flat_map(move |degree| {
        prop::collection::vec(-20i64..=20, degree / step + 1)
            .prop_map(move |c| StepPoly::from_i64s(degree, step, &c).unwrap())
    })
}

fn arb_triple() -> impl Strategy<Value = (StepPoly, StepPoly, StepPoly)> {
    (1usize..=4).prop_flat_map(|step| (arb_poly(step), arb_poly(step), arb_poly(step)))
}

fn arb_even_dense() -> impl Strategy<Value = StepPoly> {
    (0usize..=5).prop_flat_map(|h| {
        prop::collection::vec(-9i64..=9, 2 * h + 1)
            .prop_map(move |c| StepPoly::from_i64s(2 * h, 1, &c).unwrap())
    })
}

proptest! {
    #[test]
    fn mul_commutes_and_associates((a, b, c) in arb_triple()) {
        prop_assert_eq!(poly_mul(&a, &b).unwrap(), poly_mul(&b, &a).unwrap());
        let left = poly_mul(&poly_mul(&a, &b).unwrap(), &c).unwrap();
        let right = poly_mul(&a, &poly_mul(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn degrees_add((a, b, _) in arb_triple()) {
        let p = poly_mul(&a, &b).unwrap();
        prop_assert_eq!(p.degree(), a.degree() + b.degree());
        prop_assert_eq!(p.coeffs().len(), p.degree() / p.step() + 1);
    }

    #[test]
    fn pow_splits(p in arb_poly(2), x in 0usize..4, y in 0usize..4) {
        prop_assert_eq!(
            poly_pow(&p, x + y),
            poly_mul(&poly_pow(&p, x), &poly_pow(&p, y)).unwrap()
        );
    }

    #[test]
    fn eval_is_multiplicative((a, b, _) in arb_triple()) {
        prop_assert_eq!(
            eval_at_ones(&poly_mul(&a, &b).unwrap()),
            eval_at_ones(&a) * eval_at_ones(&b)
        );
    }

    #[test]
    fn densify_round_trips(p in arb_poly(3)) {
        let d = densify(&p);
        prop_assert_eq!(d.degree(), p.degree());
        prop_assert_eq!(sparsify(&d, 3).unwrap(), p);
    }

    #[test]
    fn macwilliams_twice_scales_by_q_to_the_n(p in arb_even_dense(), q in 2u32..=5) {
        let twice = macwilliams_transform(&macwilliams_transform(&p, q).unwrap(), q).unwrap();
        let scale = BigInt::from(q).pow(p.degree() as u32);
        prop_assert_eq!(twice, p.scale(&scale));
    }

    #[test]
    fn macwilliams_matches_monomial_expansion(p in arb_even_dense(), q in 2u32..=5) {
        let fast = macwilliams_transform(&p, q).unwrap();
        prop_assert_eq!(fast.coeffs(), &macwilliams_by_monomials(&p, q)[..]);
    }
}
