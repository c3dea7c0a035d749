//! Membership in the integer and rational perfect powers, with
//! maximal-exponent witnesses.
//!
//! Conventions: `0 = 0^2`, `1 = 1^2`, `-1 = (-1)^3`. A negative value needs
//! an odd exponent. `u/v` in lowest terms is an `n`-th power exactly when
//! `u` and `v` both are, so witnesses are assembled one prime exponent at a
//! time from simultaneous exact roots of numerator and denominator.

use core::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Signed, Zero};

use crate::factor::is_prime_u64;
use crate::numeric::{exact_root, Integer, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PowerDecomposition {
    pub base: Rational,
    pub exponent: u32,
}

impl PowerDecomposition {
    pub fn value(&self) -> Rational {
        num_traits::pow(self.base.clone(), self.exponent as usize)
    }
}

impl fmt::Display for PowerDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.base.is_integer() && !self.base.is_negative() {
            write!(f, "{}^{}", self.base, self.exponent)
        } else {
            write!(f, "({})^{}", self.base, self.exponent)
        }
    }
}

pub fn decompose_integer_power(n: &Integer) -> Option<PowerDecomposition> {
    decompose_rational_power(&Rational::from_integer(n.clone()))
}

pub fn decompose_rational_power(q: &Rational) -> Option<PowerDecomposition> {
    let num = q.numer();
    let den = q.denom().magnitude();
    if num.is_zero() {
        return Some(unit_witness(Rational::zero(), 2));
    }
    if den.is_one() && num.magnitude().is_one() {
        return Some(if num.is_negative() {
            unit_witness(-Rational::one(), 3)
        } else {
            unit_witness(Rational::one(), 2)
        });
    }

    let negative = num.is_negative();
    let mut top = num.magnitude().clone();
    let mut bottom = den.clone();
    let mut exponent = 1u32;
    // a p-th power of something > 1 has at least p bits
    let bound = top.bits().max(bottom.bits());
    let mut p = 2u32;
    while u64::from(p) <= bound {
        if negative && p == 2 {
            p += 1;
            continue;
        }
        if is_prime_u64(u64::from(p)) {
            while let Some((t, b)) = simultaneous_root(&top, &bottom, p) {
                top = t;
                bottom = b;
                exponent *= p;
            }
        }
        p += 1;
    }
    if exponent < 2 {
        return None;
    }
    let sign = if negative { Sign::Minus } else { Sign::Plus };
    let base = Rational::new(BigInt::from_biguint(sign, top), BigInt::from(bottom));
    Some(PowerDecomposition { base, exponent })
}

fn unit_witness(base: Rational, exponent: u32) -> PowerDecomposition {
    PowerDecomposition { base, exponent }
}

fn simultaneous_root(top: &BigUint, bottom: &BigUint, p: u32) -> Option<(BigUint, BigUint)> {
    // both at 1 would loop forever; ±1 is handled before we get here
    if top.is_one() && bottom.is_one() {
        return None;
    }
    let b = exact_root(bottom, p)?;
    let t = exact_root(top, p)?;
    Some((t, b))
}

/// `true` iff `q` is a rational perfect power.
pub fn is_rational_power(q: &Rational) -> bool {
    decompose_rational_power(q).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::parse_rational;
    use alloc::vec::Vec;

    fn int(n: i64) -> Option<(Rational, u32)> {
        decompose_integer_power(&n.into()).map(|d| (d.base, d.exponent))
    }

    fn rat(s: &str) -> Option<(Rational, u32)> {
        decompose_rational_power(&parse_rational(s).unwrap()).map(|d| (d.base, d.exponent))
    }

    fn r(s: &str) -> Rational {
        parse_rational(s).unwrap()
    }

    #[test]
    fn integer_examples() {
        assert_eq!(int(64), Some((r("2"), 6)));
        assert_eq!(int(-27), Some((r("-3"), 3)));
        assert_eq!(int(-64), Some((r("-4"), 3)));
        assert_eq!(int(0), Some((r("0"), 2)));
        assert_eq!(int(1), Some((r("1"), 2)));
        assert_eq!(int(-1), Some((r("-1"), 3)));
        assert_eq!(int(-4), None);
        assert_eq!(int(2), None);
    }

    #[test]
    fn twelve_is_not_a_power_by_brute_force() {
        let mut powers = Vec::new();
        for base in 0i64..=12 {
            let mut v = base * base;
            while v <= 12 {
                powers.push(v);
                if base <= 1 {
                    break;
                }
                v *= base;
            }
        }
        assert!(!powers.contains(&12));
        assert_eq!(int(12), None);
    }

    #[test]
    fn rational_examples() {
        assert_eq!(rat("64/729"), Some((r("2/3"), 6)));
        assert_eq!(rat("8/9"), None);
        assert_eq!(rat("-1"), Some((r("-1"), 3)));
        assert_eq!(rat("1/729"), Some((r("1/3"), 6)));
        assert_eq!(rat("-1/64"), Some((r("-1/4"), 3)));
        assert_eq!(rat("-1/4"), None);
        assert_eq!(rat("9/25"), Some((r("3/5"), 2)));
    }

    #[test]
    fn brute_force_over_small_bases() {
        // 64/729 against every base of height <= 3
        let target = r("64/729");
        let mut found = Vec::new();
        for u in -3i64..=3 {
            for v in 1i64..=3 {
                let b = Rational::new(u.into(), v.into());
                for e in 2..=12u32 {
                    if num_traits::pow(b.clone(), e as usize) == target {
                        found.push((b.clone(), e));
                    }
                }
            }
        }
        assert!(found.contains(&(r("2/3"), 6)));
        let max_e = found.iter().map(|(_, e)| *e).max();
        assert_eq!(max_e, Some(6));
    }

    #[test]
    fn maximality_for_two_to_the_sixth() {
        let v = Integer::from(64);
        for e in [2u32, 3, 6] {
            assert!(crate::integer_nth_root(&v, e).unwrap().1);
        }
        assert_eq!(decompose_integer_power(&v).unwrap().exponent, 6);
    }

    #[test]
    fn huge_power() {
        let base = r("12345678901234567/98765432101");
        let value = num_traits::pow(base.clone(), 35);
        let d = decompose_rational_power(&value).unwrap();
        assert_eq!((d.base, d.exponent), (base, 35));
    }
}
