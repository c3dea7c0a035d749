mod common;

use num_traits::{One, Zero};
use power_forge_core::{enumerate_rationals, IntPoly, Integer, Rational};
use rand::Rng;

fn random_poly(rng: &mut impl Rng, max_deg: usize, coeff: i64) -> IntPoly {
    let deg = rng.gen_range(0..=max_deg);
    IntPoly::from_coeffs((0..=deg).map(|_| rng.gen_range(-coeff..=coeff).into()).collect())
}

#[test]
fn mul_distributes_over_linear_combine() {
    let mut rng = common::rng();
    for _ in 0..1_000 {
        let (p, q, r) = (
            random_poly(&mut rng, 6, 1000),
            random_poly(&mut rng, 6, 1000),
            random_poly(&mut rng, 6, 1000),
        );
        let a: Integer = rng.gen_range(-50i64..=50).into();
        let b: Integer = rng.gen_range(-50i64..=50).into();
        let lhs = p.mul(&IntPoly::linear_combine(&a, &q, &b, &r));
        let rhs = IntPoly::linear_combine(&a, &p.mul(&q), &b, &p.mul(&r));
        for _ in 0..5 {
            let x = common::random_rational(&mut rng, 100);
            assert_eq!(lhs.eval_rational(&x), rhs.eval_rational(&x));
        }
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn evaluation_is_multiplicative() {
    let mut rng = common::rng();
    for _ in 0..1_000 {
        let p = random_poly(&mut rng, 8, 10_000);
        let q = random_poly(&mut rng, 8, 10_000);
        let x = common::random_rational(&mut rng, 1_000);
        assert_eq!(p.mul(&q).eval_rational(&x), p.eval_rational(&x) * q.eval_rational(&x));
    }
}

#[test]
fn eval_agrees_with_naive_rational_sum() {
    let mut rng = common::rng();
    for _ in 0..200 {
        let p = random_poly(&mut rng, 10, 1_000);
        let x = common::random_rational(&mut rng, 300);
        let mut naive = Rational::zero();
        let mut xp = Rational::one();
        for c in p.coeffs() {
            naive += Rational::from_integer(c.clone()) * &xp;
            xp *= &x;
        }
        assert_eq!(p.eval_rational(&x), naive);
    }
}

#[test]
fn rational_roots_match_height_scan() {
    let mut rng = common::rng();
    let grid: Vec<Rational> = enumerate_rationals(30).collect();
    for round in 0..60 {
        // half the polynomials get planted linear factors so roots exist
        let mut p = random_poly(&mut rng, 3, 30);
        if p.is_zero() {
            continue;
        }
        if round % 2 == 0 {
            for _ in 0..rng.gen_range(1..=3) {
                let c: Integer = rng.gen_range(1i64..=30).into();
                let a: Integer = rng.gen_range(-30i64..=30).into();
                p = p.mul(&IntPoly::linear(c, -a));
            }
        }
        let roots = p.rational_roots().unwrap();
        for r in &roots {
            assert!(p.eval_rational(r).is_zero());
        }
        for x in &grid {
            if p.eval_rational(x).is_zero() {
                assert!(roots.contains(x), "{x} missed for {p}");
            }
        }
    }
}
