//! Primality and complete factorization.
//!
//! Trial division up to 10^6, then Brent's variant of Pollard rho. Primality
//! is Miller–Rabin: the first twelve prime bases are deterministic below
//! 2^64, and larger inputs get twelve further bases.

use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer as _;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::numeric::Integer;
use crate::{Error, Result};

const TRIAL_LIMIT: u64 = 1_000_000;

const MR_BASES: [u64; 24] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89,
];

/// Prime factorization of `|n|`, primes strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Factorization {
    factors: Vec<(Integer, u32)>,
}

impl Factorization {
    pub fn factors(&self) -> &[(Integer, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = &Integer> {
        self.factors.iter().map(|(p, _)| p)
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Product of `p^a`.
    pub fn recompose(&self) -> Integer {
        self.factors
            .iter()
            .map(|(p, a)| num_traits::pow(p.clone(), *a as usize))
            .product()
    }

    /// All positive divisors, ascending.
    pub fn divisors(&self) -> Vec<Integer> {
        let mut divs = alloc::vec![Integer::one()];
        for (p, a) in &self.factors {
            let mut next = Vec::with_capacity(divs.len() * (*a as usize + 1));
            for d in &divs {
                let mut cur = d.clone();
                next.push(cur.clone());
                for _ in 0..*a {
                    cur *= p;
                    next.push(cur.clone());
                }
            }
            divs = next;
        }
        divs.sort();
        divs
    }
}

pub fn is_prime(n: &Integer) -> bool {
    if n.is_negative() {
        return false;
    }
    match n.to_u64() {
        Some(small) => is_prime_u64(small),
        None => is_prime_big(n.magnitude()),
    }
}

pub(crate) fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &MR_BASES[..12] {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    let (d, r) = split_twos(n - 1);
    'witness: for &a in &MR_BASES[..12] {
        let mut x = crate::numeric::mod_pow(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..r {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn split_twos(n: u64) -> (u64, u32) {
    let r = n.trailing_zeros();
    (n >> r, r)
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    (u128::from(a) * u128::from(b) % u128::from(m)) as u64
}

fn is_prime_big(n: &BigUint) -> bool {
    if n.is_even() {
        return false;
    }
    for &p in &MR_BASES {
        if (n % p).is_zero() {
            return false;
        }
    }
    let one = BigUint::one();
    let n_minus_one = n - &one;
    let r = n_minus_one.trailing_zeros().unwrap_or(0);
    let d = &n_minus_one >> r;
    'witness: for &a in &MR_BASES {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x == one || x == n_minus_one {
            continue;
        }
        for _ in 1..r {
            x = &x * &x % n;
            if x == n_minus_one {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Complete factorization of `|n|`.
pub fn factor_integer(n: &Integer) -> Result<Factorization> {
    if n.is_zero() {
        return Err(Error::domain("cannot factor zero"));
    }
    let mut raw: Vec<(BigUint, u32)> = Vec::new();
    factor_magnitude(n.magnitude().clone(), &mut raw);
    raw.sort();
    let mut factors: Vec<(Integer, u32)> = Vec::new();
    for (p, a) in raw {
        let p = BigInt::from(p);
        match factors.last_mut() {
            Some((last, e)) if *last == p => *e += a,
            _ => factors.push((p, a)),
        }
    }
    Ok(Factorization { factors })
}

fn factor_magnitude(mut m: BigUint, out: &mut Vec<(BigUint, u32)>) {
    if m.is_one() {
        return;
    }
    if let Some(small) = m.to_u64() {
        factor_u64(small, out);
        return;
    }
    if is_prime_big(&m) {
        out.push((m, 1));
        return;
    }
    let mut d = 2u64;
    while d <= TRIAL_LIMIT {
        if (&m % d).is_zero() {
            let mut e = 0;
            while (&m % d).is_zero() {
                m /= d;
                e += 1;
            }
            out.push((d.into(), e));
            if let Some(small) = m.to_u64() {
                trial_u64(small, d + 1, out);
                return;
            }
            if is_prime_big(&m) {
                out.push((m, 1));
                return;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    split_big(m, out);
}

fn split_big(m: BigUint, out: &mut Vec<(BigUint, u32)>) {
    if m.is_one() {
        return;
    }
    if let Some(small) = m.to_u64() {
        split_u64(small, out);
        return;
    }
    if is_prime_big(&m) {
        out.push((m, 1));
        return;
    }
    let d = rho_big(&m);
    let rest = &m / &d;
    split_big(d, out);
    split_big(rest, out);
}

fn factor_u64(n: u64, out: &mut Vec<(BigUint, u32)>) {
    trial_u64(n, 2, out);
}

/// Trial division from `start` up to the limit, with early exits once the
/// cofactor is prime or smaller than the next divisor squared.
fn trial_u64(mut m: u64, start: u64, out: &mut Vec<(BigUint, u32)>) {
    if m == 1 {
        return;
    }
    if is_prime_u64(m) {
        out.push((m.into(), 1));
        return;
    }
    let mut d = start.max(2);
    if d > 2 && d.is_multiple_of(2) {
        d += 1;
    }
    while d <= TRIAL_LIMIT {
        if d * d > m {
            out.push((m.into(), 1));
            return;
        }
        if m.is_multiple_of(d) {
            let mut e = 0;
            while m.is_multiple_of(d) {
                m /= d;
                e += 1;
            }
            out.push((d.into(), e));
            if m == 1 {
                return;
            }
            if is_prime_u64(m) {
                out.push((m.into(), 1));
                return;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    split_u64(m, out);
}

fn split_u64(m: u64, out: &mut Vec<(BigUint, u32)>) {
    if m == 1 {
        return;
    }
    if is_prime_u64(m) {
        out.push((m.into(), 1));
        return;
    }
    let d = rho_u64(m);
    split_u64(d, out);
    split_u64(m / d, out);
}

/// Nontrivial factor of an odd composite `n` (Brent's cycle detection,
/// gcds batched over 128 steps).
fn rho_u64(n: u64) -> u64 {
    if n.is_multiple_of(2) {
        return 2;
    }
    for c in 1.. {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut y, mut r, mut q, mut g) = (2u64, 1u64, 1u64, 1u64);
        let mut x = y;
        let mut ys = y;
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..128.min(r - k) {
                    y = f(y);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                g = q.gcd(&n);
                k += 128;
            }
            r *= 2;
        }
        if g == n {
            loop {
                ys = f(ys);
                g = x.abs_diff(ys).gcd(&n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return g;
        }
    }
    unreachable!()
}

fn rho_big(n: &BigUint) -> BigUint {
    if n.is_even() {
        return BigUint::from(2u32);
    }
    let one = BigUint::one();
    for c in 1u32.. {
        let c = BigUint::from(c);
        let f = |x: &BigUint| (x * x + &c) % n;
        let mut y = BigUint::from(2u32);
        let mut x = y.clone();
        let mut ys = y.clone();
        let mut q = one.clone();
        let mut g = one.clone();
        let mut r = 1u64;
        while g.is_one() {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0;
            while k < r && g.is_one() {
                ys = y.clone();
                for _ in 0..128.min(r - k) {
                    y = f(&y);
                    let diff = if x > y { &x - &y } else { &y - &x };
                    q = q * diff % n;
                }
                g = q.gcd(n);
                k += 128;
            }
            r *= 2;
        }
        if &g == n {
            loop {
                ys = f(&ys);
                let diff = if x > ys { &x - &ys } else { &ys - &x };
                g = diff.gcd(n);
                if !g.is_one() {
                    break;
                }
            }
        }
        if &g != n {
            return g;
        }
    }
    unreachable!()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn fac(n: &str) -> Vec<(Integer, u32)> {
        factor_integer(&n.parse().unwrap()).unwrap().factors().to_vec()
    }

    #[test]
    fn examples() {
        assert_eq!(fac("25"), vec![(5.into(), 2)]);
        assert_eq!(fac("1"), vec![]);
        assert_eq!(fac("-12"), vec![(2.into(), 2), (3.into(), 1)]);
        assert!(factor_integer(&0.into()).is_err());
    }

    #[test]
    fn matches_trial_division() {
        // independent check for 1225 and neighbours
        fn trial(mut n: u64) -> Vec<(Integer, u32)> {
            let mut out = vec![];
            let mut d = 2;
            while n > 1 {
                let mut e = 0;
                while n.is_multiple_of(d) {
                    n /= d;
                    e += 1;
                }
                if e > 0 {
                    out.push((d.into(), e));
                }
                d += 1;
            }
            out
        }
        assert_eq!(fac("1225"), vec![(5.into(), 2), (7.into(), 2)]);
        for n in 1..5000u64 {
            assert_eq!(fac(&alloc::format!("{n}")), trial(n), "n = {n}");
        }
    }

    #[test]
    fn beyond_trial_limit() {
        // two primes just above 10^6
        let p: Integer = 1_000_003.into();
        let q: Integer = 1_000_033.into();
        let f = factor_integer(&(&p * &q * &q)).unwrap();
        assert_eq!(f.factors(), &[(p, 1), (q, 2)]);

        // a 34-bit prime times a 65-bit prime: beyond u64, within rho's reach
        let a: Integer = "10000000019".parse().unwrap();
        let b: Integer = "18446744073709551629".parse().unwrap();
        assert!(is_prime(&a) && is_prime(&b));
        let f = factor_integer(&(&a * &b * 6)).unwrap();
        assert_eq!(
            f.factors(),
            &[(2.into(), 1), (3.into(), 1), (a, 1), (b, 1)]
        );
    }

    #[test]
    fn primality_edges() {
        for (n, want) in [(0, false), (1, false), (2, true), (91, false), (97, true)] {
            assert_eq!(is_prime(&Integer::from(n)), want, "{n}");
        }
        assert!(!is_prime(&(-7).into()));
        // strong pseudoprime to bases 2..=37 is beyond u64; 3215031751 fools 2,3,5,7
        assert!(!is_prime(&3_215_031_751u64.into()));
        let mersenne: Integer = (Integer::one() << 127) - 1;
        assert!(is_prime(&mersenne));
        assert!(!is_prime(&((Integer::one() << 128) + 1)));
    }

    #[test]
    fn divisors_sorted() {
        let f = factor_integer(&12.into()).unwrap();
        let want: Vec<Integer> = [1, 2, 3, 4, 6, 12].iter().map(|&d| d.into()).collect();
        assert_eq!(f.divisors(), want);
    }
}
