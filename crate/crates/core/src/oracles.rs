//! Bounded exhaustive searches for the Diophantine facts the construction
//! relies on: `X² + 1 = Yⁿ`, Catalan's `Xᵐ − Yⁿ = 1`, the quartic equations
//! `A⁴ + B⁴ = Cⁿ`, `A⁴ + B⁴ = 2Cⁿ`, `a² + b⁴ = cⁿ`, and perfect powers in
//! the recurrences `aαᵗ + bβᵗ` and `γ − 2ᵗ`.
//!
//! Every search that extracts a root does so exactly, so the outer box has
//! one less dimension than the equation. The `*_row` kernels cover one value
//! of the outermost variable and are what parallel drivers fan out over.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer as _;
use num_traits::{One, Zero};

use crate::numeric::{exact_root, Integer, Rational};
use crate::power::{decompose_integer_power, decompose_rational_power, PowerDecomposition};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FermatVariant {
    /// `A⁴ + B⁴ = Cⁿ`, `gcd(A, B) = 1`.
    CN,
    /// `A⁴ + B⁴ = 2Cⁿ`, `gcd(A, B) = 1`.
    TwoCN,
    /// `a² + b⁴ = cⁿ`, coprime nonzero `a, b`, `n >= 4`.
    Sig24N,
}

impl FermatVariant {
    pub fn tag(&self) -> &'static str {
        match self {
            FermatVariant::CN => "cn",
            FermatVariant::TwoCN => "2cn",
            FermatVariant::Sig24N => "24n",
        }
    }

    fn min_exponent(&self) -> u32 {
        match self {
            FermatVariant::Sig24N => 4,
            _ => 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Equation {
    Lebesgue,
    Catalan,
    Fermat(FermatVariant),
    Recurrence {
        a: Integer,
        b: Integer,
        alpha: Integer,
        beta: Integer,
    },
    GammaMinusPow2 {
        gamma: Rational,
    },
}

impl Equation {
    pub fn tag(&self) -> &'static str {
        match self {
            Equation::Lebesgue => "lebesgue",
            Equation::Catalan => "catalan",
            Equation::Fermat(_) => "fermat",
            Equation::Recurrence { .. } => "recurrence",
            Equation::GammaMinusPow2 { .. } => "gamma",
        }
    }

    /// Names of the entries of each solution tuple.
    pub fn variables(&self) -> &'static [&'static str] {
        match self {
            Equation::Lebesgue => &["X", "Y", "n"],
            Equation::Catalan => &["X", "m", "Y", "n"],
            Equation::Fermat(FermatVariant::Sig24N) => &["a", "b", "c", "n"],
            Equation::Fermat(_) => &["A", "B", "C", "n"],
            Equation::Recurrence { .. } => &["t", "u_t"],
            Equation::GammaMinusPow2 { .. } => &["t", "num", "den"],
        }
    }
}

impl fmt::Display for Equation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Equation::Lebesgue => f.write_str("X^2 + 1 = Y^n"),
            Equation::Catalan => f.write_str("X^m - Y^n = 1"),
            Equation::Fermat(FermatVariant::CN) => f.write_str("A^4 + B^4 = C^n"),
            Equation::Fermat(FermatVariant::TwoCN) => f.write_str("A^4 + B^4 = 2C^n"),
            Equation::Fermat(FermatVariant::Sig24N) => f.write_str("a^2 + b^4 = c^n"),
            Equation::Recurrence { a, b, alpha, beta } => {
                write!(f, "u_t = {a}*{alpha}^t + {b}*{beta}^t in P_Z")
            }
            Equation::GammaMinusPow2 { gamma } => write!(f, "{gamma} - 2^t in P_Q"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoxBound {
    pub variable: &'static str,
    pub lo: Integer,
    pub hi: Integer,
}

fn bound(variable: &'static str, lo: impl Into<Integer>, hi: impl Into<Integer>) -> BoxBound {
    BoxBound {
        variable,
        lo: lo.into(),
        hi: hi.into(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Solution {
    pub values: Vec<Integer>,
    pub witness: Option<PowerDecomposition>,
}

impl PartialOrd for PowerDecomposition {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PowerDecomposition {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        (&self.base, self.exponent).cmp(&(&other.base, other.exponent))
    }
}

impl Solution {
    fn plain(values: Vec<Integer>) -> Self {
        Solution {
            values,
            witness: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionList {
    pub equation: Equation,
    pub search_box: Vec<BoxBound>,
    pub solutions: Vec<Solution>,
    /// The whole box was scanned.
    pub exhaustive: bool,
}

impl SolutionList {
    pub fn new(equation: Equation, search_box: Vec<BoxBound>, mut solutions: Vec<Solution>) -> Self {
        solutions.sort();
        solutions.dedup();
        SolutionList {
            equation,
            search_box,
            solutions,
            exhaustive: true,
        }
    }

    /// Value tuples only.
    pub fn tuples(&self) -> Vec<Vec<Integer>> {
        self.solutions.iter().map(|s| s.values.clone()).collect()
    }

    /// Re-substitute every solution into its equation.
    pub fn all_satisfy(&self) -> bool {
        self.solutions.iter().all(|s| satisfies(&self.equation, s))
    }

    /// The solution set stated for this box by the classical theorem, when
    /// there is one.
    pub fn stated_solutions(&self) -> Option<Vec<Vec<Integer>>> {
        let hi = |i: usize| self.search_box[i].hi.clone();
        let lo = |i: usize| self.search_box[i].lo.clone();
        let int = |v: i64| Integer::from(v);
        let mut want = Vec::new();
        match &self.equation {
            Equation::Lebesgue => {
                let mut n = lo(1);
                while n <= hi(1) {
                    want.push(vec![int(0), int(1), n.clone()]);
                    if n.is_even() {
                        want.push(vec![int(0), int(-1), n.clone()]);
                    }
                    n += 1;
                }
            }
            Equation::Catalan => {
                if hi(0) >= int(3) && hi(1) >= int(3) {
                    want.push(vec![int(3), int(2), int(2), int(3)]);
                }
            }
            Equation::Fermat(variant) => {
                let pairs: &[(i64, i64)] = match variant {
                    FermatVariant::CN => &[(0, 1), (0, -1), (1, 0), (-1, 0)],
                    FermatVariant::TwoCN => &[(1, 1), (1, -1), (-1, 1), (-1, -1)],
                    FermatVariant::Sig24N => &[],
                };
                let mut n = lo(2);
                while n <= hi(2) {
                    for &(a, b) in pairs {
                        want.push(vec![int(a), int(b), int(1), n.clone()]);
                    }
                    n += 1;
                }
            }
            Equation::Recurrence { .. } | Equation::GammaMinusPow2 { .. } => return None,
        }
        want.sort();
        Some(want)
    }

    /// `Some(true)` when the found set equals the classical one.
    pub fn matches_stated(&self) -> Option<bool> {
        self.stated_solutions().map(|want| want == self.tuples())
    }
}

fn pow(base: &Integer, e: &Integer) -> Option<Integer> {
    let e = usize::try_from(e).ok()?;
    Some(num_traits::pow(base.clone(), e))
}

fn satisfies(eq: &Equation, sol: &Solution) -> bool {
    let v = &sol.values;
    let check = || -> Option<bool> {
        Some(match eq {
            Equation::Lebesgue => &v[0] * &v[0] + 1 == pow(&v[1], &v[2])?,
            Equation::Catalan => pow(&v[0], &v[1])? - pow(&v[2], &v[3])? == Integer::one(),
            Equation::Fermat(variant) => {
                let (a, b, c, n) = (&v[0], &v[1], &v[2], &v[3]);
                let rhs = pow(c, n)?;
                a.gcd(b).is_one()
                    && match variant {
                        FermatVariant::CN => fourth(a) + fourth(b) == rhs,
                        FermatVariant::TwoCN => fourth(a) + fourth(b) == rhs * 2,
                        FermatVariant::Sig24N => {
                            !a.is_zero() && !b.is_zero() && *n >= 4.into() && a * a + fourth(b) == rhs
                        }
                    }
            }
            Equation::Recurrence { a, b, alpha, beta } => {
                let t = &v[0];
                let u = a * pow(alpha, t)? + b * pow(beta, t)?;
                u == v[1] && sol.witness.as_ref()?.value() == Rational::from_integer(u)
            }
            Equation::GammaMinusPow2 { gamma } => {
                let t = usize::try_from(&v[0]).ok()?;
                let value = gamma - Rational::from_integer(Integer::one() << t);
                let stated = Rational::new(v[1].clone(), v[2].clone());
                value == stated && sol.witness.as_ref()?.value() == value
            }
        })
    };
    check().unwrap_or(false)
}

fn fourth(x: &Integer) -> Integer {
    let sq = x * x;
    &sq * &sq
}

/// `(X, Y, n)` for one `X`: every `2 <= n <= n_max` with `X² + 1 = Yⁿ`,
/// both signs of `Y` for even `n`.
pub fn lebesgue_row(x: i64, n_max: u32) -> Vec<Solution> {
    let xi = Integer::from(x);
    let value: Integer = &xi * &xi + 1;
    let mut out = Vec::new();
    for n in 2..=n_max {
        if let Some(y) = exact_root(value.magnitude(), n) {
            let y = Integer::from(y);
            if n % 2 == 0 {
                out.push(Solution::plain(vec![xi.clone(), -y.clone(), n.into()]));
            }
            out.push(Solution::plain(vec![xi.clone(), y, n.into()]));
        }
    }
    out
}

pub fn lebesgue_box(x_bound: u64, n_max: u32) -> Vec<BoxBound> {
    let xb = Integer::from(x_bound);
    vec![bound("X", -xb.clone(), xb), bound("n", 2, n_max)]
}

pub fn search_lebesgue(x_bound: u64, n_max: u32) -> Result<SolutionList> {
    if n_max < 2 {
        return Err(Error::domain("n_max must be >= 2"));
    }
    let xb = i64::try_from(x_bound).map_err(|_| Error::domain("x_bound too large"))?;
    let solutions = (-xb..=xb).flat_map(|x| lebesgue_row(x, n_max)).collect();
    Ok(SolutionList::new(
        Equation::Lebesgue,
        lebesgue_box(x_bound, n_max),
        solutions,
    ))
}

/// Solutions with outer variable `A = a`.
pub fn fermat_row(variant: FermatVariant, a: i64, bound: i64, n_max: u32) -> Vec<Solution> {
    let ai = Integer::from(a);
    let mut out = Vec::new();
    for b in -bound..=bound {
        if a.gcd(&b) != 1 {
            continue;
        }
        let bi = Integer::from(b);
        let value = match variant {
            FermatVariant::CN => fourth(&ai) + fourth(&bi),
            FermatVariant::TwoCN => {
                let sum = fourth(&ai) + fourth(&bi);
                if sum.is_odd() {
                    continue;
                }
                sum / 2
            }
            FermatVariant::Sig24N => {
                if a == 0 || b == 0 {
                    continue;
                }
                &ai * &ai + fourth(&bi)
            }
        };
        for n in variant.min_exponent()..=n_max {
            if let Some(c) = exact_root(value.magnitude(), n) {
                out.push(Solution::plain(vec![
                    ai.clone(),
                    bi.clone(),
                    c.into(),
                    n.into(),
                ]));
            }
        }
    }
    out
}

pub fn fermat_box(variant: FermatVariant, bound: u64, n_max: u32) -> Vec<BoxBound> {
    let b = Integer::from(bound);
    let names = Equation::Fermat(variant).variables();
    vec![
        self::bound(names[0], -b.clone(), b.clone()),
        self::bound(names[1], -b.clone(), b),
        self::bound("n", variant.min_exponent(), n_max),
    ]
}

/// `C` is the principal (positive) root; for even `n` its negative is a
/// solution too and is not listed.
pub fn search_fermat_quartic(bound: u64, n_max: u32, variant: FermatVariant) -> Result<SolutionList> {
    if bound < 1 || n_max < 2 {
        return Err(Error::domain("bound must be >= 1 and n_max >= 2"));
    }
    let b = i64::try_from(bound).map_err(|_| Error::domain("bound too large"))?;
    let solutions = (-b..=b)
        .flat_map(|a| fermat_row(variant, a, b, n_max))
        .collect();
    Ok(SolutionList::new(
        Equation::Fermat(variant),
        fermat_box(variant, bound, n_max),
        solutions,
    ))
}

/// `(X, m, Y, n)` with the given `X`.
pub fn catalan_row(x: u64, base_bound: u64, exp_bound: u32) -> Vec<Solution> {
    let xi = Integer::from(x);
    let mut out = Vec::new();
    let mut lhs = xi.clone();
    for m in 2..=exp_bound {
        lhs *= &xi;
        let target = &lhs - 1u32;
        for n in 2..=exp_bound {
            if let Some(y) = exact_root(target.magnitude(), n) {
                let y = Integer::from(y);
                if y >= 2.into() && y <= base_bound.into() {
                    out.push(Solution::plain(vec![xi.clone(), m.into(), y, n.into()]));
                }
            }
        }
    }
    out
}

pub fn catalan_box(base_bound: u64, exp_bound: u32) -> Vec<BoxBound> {
    vec![bound("base", 2, base_bound), bound("exp", 2, exp_bound)]
}

pub fn search_catalan(base_bound: u64, exp_bound: u32) -> Result<SolutionList> {
    if base_bound < 2 || exp_bound < 2 {
        return Err(Error::domain("base_bound and exp_bound must be >= 2"));
    }
    let solutions = (2..=base_bound)
        .flat_map(|x| catalan_row(x, base_bound, exp_bound))
        .collect();
    Ok(SolutionList::new(
        Equation::Catalan,
        catalan_box(base_bound, exp_bound),
        solutions,
    ))
}

/// Every `t <= t_max` with `aαᵗ + bβᵗ ∈ 𝒫_Z`.
pub fn scan_recurrence_powers(
    a: &Integer,
    b: &Integer,
    alpha: &Integer,
    beta: &Integer,
    t_max: u32,
) -> Result<SolutionList> {
    if a.is_zero() || b.is_zero() || alpha.is_zero() || beta.is_zero() {
        return Err(Error::domain("a, b, alpha, beta must be nonzero"));
    }
    if alpha == beta || *alpha == -beta {
        return Err(Error::domain(format!(
            "degenerate recurrence: alpha = {alpha}, beta = {beta}"
        )));
    }
    let mut solutions = Vec::new();
    let (mut pa, mut pb) = (Integer::one(), Integer::one());
    for t in 0..=t_max {
        let u = a * &pa + b * &pb;
        if let Some(w) = decompose_integer_power(&u) {
            solutions.push(Solution {
                values: vec![t.into(), u],
                witness: Some(w),
            });
        }
        pa *= alpha;
        pb *= beta;
    }
    Ok(SolutionList::new(
        Equation::Recurrence {
            a: a.clone(),
            b: b.clone(),
            alpha: alpha.clone(),
            beta: beta.clone(),
        },
        vec![bound("t", 0, t_max)],
        solutions,
    ))
}

/// Every `t <= t_max` with `γ − 2ᵗ ∈ 𝒫_Q`.
pub fn scan_gamma_minus_pow2(gamma: &Rational, t_max: u32) -> Result<SolutionList> {
    if gamma.is_zero() {
        return Err(Error::domain("gamma must be nonzero"));
    }
    let (u, v) = (gamma.numer(), gamma.denom());
    let mut solutions = Vec::new();
    let mut pow2 = Integer::one();
    for t in 0..=t_max {
        // (u - 2^t v)/v stays in lowest terms
        let num = u - &pow2 * v;
        let value = Rational::new(num, v.clone());
        if let Some(w) = decompose_rational_power(&value) {
            solutions.push(Solution {
                values: vec![t.into(), value.numer().clone(), value.denom().clone()],
                witness: Some(w),
            });
        }
        pow2 <<= 1;
    }
    Ok(SolutionList::new(
        Equation::GammaMinusPow2 {
            gamma: gamma.clone(),
        },
        vec![bound("t", 0, t_max)],
        solutions,
    ))
}
