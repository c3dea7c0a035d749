//! Dense univariate polynomials over `Z`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::factor::factor_integer;
use crate::numeric::{Integer, Rational};
use crate::{Error, Result};

/// Coefficients in ascending degree; never stores a zero leading
/// coefficient, so the zero polynomial is the empty vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<Integer>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: impl Into<Integer>) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    /// `X`.
    pub fn x() -> Self {
        Self::from_coeffs(vec![Integer::zero(), Integer::one()])
    }

    /// `lead·X + constant`.
    pub fn linear(lead: Integer, constant: Integer) -> Self {
        Self::from_coeffs(vec![constant, lead])
    }

    pub fn from_coeffs(mut coeffs: Vec<Integer>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[Integer] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Integer> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coefficient(&self) -> Option<&Integer> {
        self.coeffs.last()
    }

    /// Largest coefficient bit length; 0 for the zero polynomial.
    pub fn max_coeff_bits(&self) -> u64 {
        self.coeffs.iter().map(|c| c.bits()).max().unwrap_or(0)
    }

    /// `a·p + b·q`.
    pub fn linear_combine(a: &Integer, p: &IntPoly, b: &Integer, q: &IntPoly) -> IntPoly {
        let len = p.coeffs.len().max(q.coeffs.len());
        let coeff = |poly: &IntPoly, i: usize| poly.coeffs.get(i).cloned().unwrap_or_default();
        let coeffs = (0..len).map(|i| a * coeff(p, i) + b * coeff(q, i)).collect();
        IntPoly::from_coeffs(coeffs)
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let one = Integer::one();
        Self::linear_combine(&one, self, &one, other)
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        Self::linear_combine(&Integer::one(), self, &-Integer::one(), other)
    }

    /// Schoolbook product.
    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![Integer::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(out)
    }

    pub fn pow(&self, mut exp: u64) -> IntPoly {
        let mut acc = IntPoly::constant(1);
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn eval_integer(&self, x: &Integer) -> Integer {
        self.coeffs
            .iter()
            .rev()
            .fold(Integer::zero(), |acc, c| acc * x + c)
    }

    /// Exact value at a rational point.
    ///
    /// Horner runs on the homogenized form `Σ c_i u^i v^(d-i)`, so the only
    /// reduction happens once at the end.
    pub fn eval_rational(&self, x: &Rational) -> Rational {
        let Some(deg) = self.degree() else {
            return Rational::zero();
        };
        let (u, v) = (x.numer(), x.denom());
        let mut acc = Integer::zero();
        let mut v_pow = Integer::one();
        for c in self.coeffs.iter().rev() {
            acc = acc * u + c * &v_pow;
            v_pow *= v;
        }
        // v_pow = v^(deg+1) now; the numerator carries v^deg
        let den = num_traits::pow(v.clone(), deg);
        Rational::new(acc, den)
    }

    /// Every rational root, ascending, via the rational root theorem.
    pub fn rational_roots(&self) -> Result<Vec<Rational>> {
        if self.is_zero() {
            return Err(Error::domain("roots of the zero polynomial"));
        }
        let shift = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        let reduced = IntPoly::from_coeffs(self.coeffs[shift..].to_vec());
        let mut roots = Vec::new();
        if shift > 0 {
            roots.push(Rational::zero());
        }
        if reduced.degree().unwrap_or(0) > 0 {
            let content = reduced
                .coeffs
                .iter()
                .fold(Integer::zero(), |g, c| g.gcd(c));
            let constant = &reduced.coeffs[0] / &content;
            let lead = reduced.leading_coefficient().expect("nonzero") / &content;
            let nums = factor_integer(&constant)?.divisors();
            let dens = factor_integer(&lead)?.divisors();
            for r in &nums {
                for s in &dens {
                    if !r.gcd(s).is_one() {
                        continue;
                    }
                    for cand in [Rational::new(r.clone(), s.clone()), Rational::new(-r, s.clone())] {
                        if reduced.eval_rational(&cand).is_zero() {
                            roots.push(cand);
                        }
                    }
                }
            }
        }
        roots.sort();
        roots.dedup();
        Ok(roots)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            match (first, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            if i == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => f.write_str("X")?,
                _ => write!(f, "X^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::parse_rational;
    use alloc::string::ToString;

    fn p(cs: &[i64]) -> IntPoly {
        IntPoly::from_coeffs(cs.iter().map(|&c| c.into()).collect())
    }

    fn r(s: &str) -> Rational {
        parse_rational(s).unwrap()
    }

    #[test]
    fn linear_combine_examples() {
        let one = Integer::one();
        let x2 = p(&[0, 0, 1]);
        assert!(IntPoly::linear_combine(&one, &x2, &-one.clone(), &x2).is_zero());
        assert_eq!(
            IntPoly::linear_combine(&2.into(), &p(&[1, 1]), &3.into(), &p(&[1])),
            p(&[5, 2])
        );
        assert_eq!(
            IntPoly::linear_combine(&one, &p(&[-128, 1]), &0.into(), &IntPoly::zero()),
            p(&[-128, 1])
        );
    }

    #[test]
    fn mul_examples() {
        assert_eq!(p(&[-1, 1]).mul(&p(&[1, 1])), p(&[-1, 0, 1]));
        assert!(p(&[3, 4]).mul(&IntPoly::zero()).is_zero());
        assert_eq!(p(&[-10, 25]).mul(&p(&[-8, 25])), p(&[80, -450, 625]));
    }

    #[test]
    fn eval_examples() {
        assert_eq!(p(&[-1, 0, 1]).eval_rational(&r("3/2")), r("5/4"));
        let g = p(&[-4, 1]).pow(4).add(&IntPoly::constant(1));
        assert_eq!(g.eval_rational(&r("4")), r("1"));
        assert_eq!(p(&[1, 0, 1]).eval_rational(&r("0")), r("1"));
        assert_eq!(IntPoly::zero().eval_rational(&r("7/3")), r("0"));
        assert_eq!(IntPoly::constant(5).eval_rational(&r("7/3")), r("5"));
    }

    #[test]
    fn roots_examples() {
        assert_eq!(p(&[-1, 0, 1]).rational_roots().unwrap(), [r("-1"), r("1")]);
        assert_eq!(
            p(&[80, -450, 625]).rational_roots().unwrap(),
            [r("8/25"), r("2/5")]
        );
        assert!(p(&[1, 0, 1]).rational_roots().unwrap().is_empty());
        assert!(IntPoly::zero().rational_roots().is_err());
        assert_eq!(p(&[0, 0, -2, 2]).rational_roots().unwrap(), [r("0"), r("1")]);
        assert!(IntPoly::constant(3).rational_roots().unwrap().is_empty());
        // non-primitive: 6X - 4 has root 2/3
        assert_eq!(p(&[-4, 6]).rational_roots().unwrap(), [r("2/3")]);
    }

    #[test]
    fn display() {
        assert_eq!(p(&[257, -256, 96, -16, 1]).to_string(), "X^4 - 16X^3 + 96X^2 - 256X + 257");
        assert_eq!(p(&[-1, -1]).to_string(), "-X - 1");
        assert_eq!(IntPoly::zero().to_string(), "0");
    }

    #[test]
    fn fifth_power_expansion() {
        let g = p(&[-4, 1]).pow(4).add(&IntPoly::constant(1));
        assert_eq!(g, p(&[257, -256, 96, -16, 1]));
        assert_eq!(p(&[2, 1]).pow(0), IntPoly::constant(1));
    }
}
