//! Exact integer and rational scalars plus the elementary kernels built on
//! them: normalization, integer roots, valuations.
//!
//! Nothing in here touches floating point.

use alloc::format;
use core::cmp::max;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer as _;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::factor::is_prime;
use crate::{Error, Result};

pub type Integer = BigInt;

/// Fraction in lowest terms with positive denominator; zero is `0/1`.
pub type Rational = num_rational::BigRational;

/// Reduce `num/den` to its canonical representative.
pub fn normalize_rational(num: Integer, den: Integer) -> Result<Rational> {
    if den.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    Ok(Rational::new(num, den))
}

/// Parse `"a"` or `"a/b"`, tolerating surrounding whitespace and a
/// negative denominator.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let parse_int = |s: &str| {
        s.trim()
            .parse::<Integer>()
            .map_err(|_| Error::Parse(format!("not an integer: {s:?}")))
    };
    match text.split_once('/') {
        Some((num, den)) => normalize_rational(parse_int(num)?, parse_int(den)?),
        None => Ok(Rational::from_integer(parse_int(text)?)),
    }
}

/// `max(|u|, v)` for `q = u/v` in lowest terms.
pub fn height(q: &Rational) -> Integer {
    max(q.numer().abs(), q.denom().clone())
}

/// Truncated `e`-th root of `n` and whether it is exact.
///
/// For `n >= 0` the root is the `r` with `r^e <= n < (r+1)^e`. Odd `e`
/// accepts negative `n` and returns `-root(|n|)`.
pub fn integer_nth_root(n: &Integer, e: u32) -> Result<(Integer, bool)> {
    if e < 2 {
        return Err(Error::domain(format!("root exponent must be >= 2, got {e}")));
    }
    if n.is_negative() && e.is_multiple_of(2) {
        return Err(Error::domain(format!(
            "even root ({e}) of negative value {n}"
        )));
    }
    let mag = n.magnitude();
    let root = floor_root(mag, e);
    let exact = &pow_u(&root, e) == mag;
    let root = BigInt::from_biguint(if n.is_negative() { Sign::Minus } else { Sign::Plus }, root);
    Ok((root, exact))
}

/// Exact `e`-th root of a non-negative magnitude, if there is one.
///
/// Cheap power-residue tests reject most non-powers before any root is
/// extracted.
pub(crate) fn exact_root(mag: &BigUint, e: u32) -> Option<BigUint> {
    if mag.is_zero() || mag.is_one() {
        return Some(mag.clone());
    }
    if !passes_residue_filter(mag, e) {
        return None;
    }
    let root = floor_root(mag, e);
    (&pow_u(&root, e) == mag).then_some(root)
}

fn pow_u(base: &BigUint, e: u32) -> BigUint {
    num_traits::pow::Pow::pow(base, e)
}

/// Bit-by-bit construction of `floor(mag^(1/e))`, most significant bit first.
fn floor_root(mag: &BigUint, e: u32) -> BigUint {
    if mag.is_zero() {
        return BigUint::zero();
    }
    if let Some(small) = mag.to_u64() {
        return BigUint::from(floor_root_u64(small, e));
    }
    let bits = mag.bits();
    let root_bits = bits.div_ceil(u64::from(e));
    let mut root = BigUint::zero();
    for i in (0..root_bits).rev() {
        root.set_bit(i, true);
        // a candidate with too many bits cannot fit; skip the multiplication
        let cand_bits = root.bits();
        if (cand_bits - 1) * u64::from(e) >= bits || &pow_u(&root, e) > mag {
            root.set_bit(i, false);
        }
    }
    root
}

fn floor_root_u64(n: u64, e: u32) -> u64 {
    let bits = 64 - u64::from(n.leading_zeros());
    let root_bits = bits.div_ceil(u64::from(e));
    let mut root = 0u64;
    for i in (0..root_bits).rev() {
        let cand = root | (1 << i);
        if pow_at_most(cand, e, n) {
            root = cand;
        }
    }
    root
}

fn pow_at_most(base: u64, e: u32, limit: u64) -> bool {
    let mut acc: u128 = 1;
    for _ in 0..e {
        acc *= u128::from(base);
        if acc > u128::from(limit) {
            return false;
        }
    }
    true
}

/// `false` only when `mag` is certainly not an `e`-th power: for primes
/// `q ≡ 1 (mod e)`, every `e`-th power residue `r ≠ 0` has
/// `r^((q-1)/e) ≡ 1 (mod q)`.
fn passes_residue_filter(mag: &BigUint, e: u32) -> bool {
    let wanted = match e {
        2 => 6,
        3 => 4,
        _ => 3,
    };
    let e64 = u64::from(e);
    let mut found = 0;
    let mut q = e64 + 1;
    while found < wanted && q < (1 << 31) {
        if is_prime_u64_small(q) {
            found += 1;
            let r = (mag % q).to_u64().unwrap_or(0);
            if r != 0 && mod_pow(r, (q - 1) / e64, q) != 1 {
                return false;
            }
        }
        q += e64;
    }
    true
}

fn is_prime_u64_small(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn mod_pow(base: u64, mut exp: u64, m: u64) -> u64 {
    let m128 = u128::from(m);
    let mut acc: u128 = 1 % m128;
    let mut b = u128::from(base % m);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m128;
        }
        b = b * b % m128;
        exp >>= 1;
    }
    acc as u64
}

/// `ord_p(num) - ord_p(den)`.
pub fn padic_valuation(q: &Rational, p: &Integer) -> Result<i64> {
    if q.is_zero() {
        return Err(Error::domain("valuation of zero"));
    }
    if !is_prime(p) {
        return Err(Error::domain(format!("{p} is not prime")));
    }
    Ok(int_valuation(q.numer(), p) as i64 - int_valuation(q.denom(), p) as i64)
}

fn int_valuation(n: &Integer, p: &Integer) -> u64 {
    let mut n = n.abs();
    let mut count = 0;
    loop {
        let (quot, rem) = n.div_rem(p);
        if !rem.is_zero() {
            return count;
        }
        n = quot;
        count += 1;
    }
}

/// Smallest `L >= 0` with `2^L >= |q|`, computed from bit lengths.
pub(crate) fn ceil_log2_abs_clamped(q: &Rational) -> u64 {
    let num = q.numer().magnitude();
    let den = q.denom().magnitude();
    if num <= den {
        return 0;
    }
    let guess = (num.bits() - den.bits()).saturating_sub(1);
    (guess..)
        .find(|&l| (den << l) >= *num)
        .expect("some shift always dominates")
}
