//! From a finite set `S` of rational perfect powers to `f_S ∈ Z[X]`.
//!
//! Writing `β_i = a_i/c_i` in lowest terms and `P(X) = ∏ (c_i X − a_i)`:
//!
//! * `k = lcm(4, p − 1)` over the primes `p` dividing some `c_i`;
//! * `F = P² − 1`, whose nonzero rational roots are the `δ_j`;
//! * `s = 2^κ − 1`, large enough to dominate the perfect-power threshold of
//!   every `4δ_j − 2^t`;
//! * `g = P^k + 1`, `h = (X − 2^s)·g + 2^s`, `f_S = g·h`.
//!
//! The threshold for `γ − 2^t` has no known explicit value, so
//! [`estimate_d`] substitutes the last hit of a bounded scan. The resulting
//! `s` is heuristic and records that fact in [`SProvenance`].
//!
//! For integer sets the simpler [`construct_integer`] gives
//! `g = ∏ (X − b_i)² + 1`, `h = (X − 1)·g + 1`, `f = g·h`.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;

use num_integer::Integer as _;
use num_traits::{One, ToPrimitive, Zero};

use crate::factor::factor_integer;
use crate::numeric::{ceil_log2_abs_clamped, Integer, Rational};
use crate::oracles::scan_gamma_minus_pow2;
use crate::poly::IntPoly;
use crate::power::{decompose_integer_power, decompose_rational_power};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    Rational,
    Integer,
}

/// A validated set of pairwise distinct perfect powers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSetInput {
    elements: Vec<Rational>,
    variant: Variant,
}

impl PowerSetInput {
    /// Rejects duplicates and non-powers; the integer variant also rejects
    /// non-integers. Input order is kept.
    pub fn new(elements: Vec<Rational>, variant: Variant) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for e in &elements {
            if !seen.insert(e.clone()) {
                return Err(invalid(e, "is a duplicate element"));
            }
            match variant {
                Variant::Rational => {
                    if decompose_rational_power(e).is_none() {
                        return Err(invalid(e, "∉ P_Q (not a rational perfect power)"));
                    }
                }
                Variant::Integer => {
                    if !e.is_integer() {
                        return Err(invalid(e, "is not an integer"));
                    }
                    if decompose_integer_power(e.numer()).is_none() {
                        return Err(invalid(e, "∉ P_Z (not an integer perfect power)"));
                    }
                }
            }
        }
        Ok(PowerSetInput { elements, variant })
    }

    pub fn rational(elements: Vec<Rational>) -> Result<Self> {
        Self::new(elements, Variant::Rational)
    }

    pub fn integer(elements: Vec<Rational>) -> Result<Self> {
        Self::new(elements, Variant::Integer)
    }

    pub fn elements(&self) -> &[Rational] {
        &self.elements
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, q: &Rational) -> bool {
        self.elements.contains(q)
    }

    /// `(a_i, c_i)` with `β_i = a_i / c_i`, `c_i >= 1`.
    pub fn pairs(&self) -> Vec<(Integer, Integer)> {
        self.elements
            .iter()
            .map(|b| (b.numer().clone(), b.denom().clone()))
            .collect()
    }
}

fn invalid(e: &Rational, reason: &str) -> Error {
    Error::Validation {
        element: e.to_string(),
        reason: reason.to_string(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SelectionPolicy {
    /// Largest `t` scanned when estimating the threshold for `γ − 2^t`.
    pub t_max: u32,
    /// Largest admissible `κ`; `2^s` appears in the coefficients.
    pub kappa_cap: u32,
    /// Largest admissible `deg f_S`.
    pub max_degree: usize,
}

impl Default for SelectionPolicy {
    fn default() -> Self {
        SelectionPolicy {
            t_max: 64,
            kappa_cap: 20,
            max_degree: 10_000,
        }
    }
}

impl SelectionPolicy {
    pub fn validate(&self) -> Result<()> {
        if self.t_max == 0 || self.kappa_cap == 0 || self.max_degree == 0 {
            return Err(Error::domain("policy bounds must be positive"));
        }
        // 2^s must stay addressable as a shift
        if self.kappa_cap > 40 {
            return Err(Error::domain("kappa_cap above 40 is not supported"));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SProvenance {
    /// `S = ∅`; no `s` was needed.
    EmptySet,
    /// `s` dominates the last observed hit of a scan up to `t_max`. This is
    /// a heuristic stand-in for the true threshold; correctness of `f_S`
    /// then rests on the empirical verifier.
    EmpiricalScan { t_max: u32 },
}

impl SProvenance {
    pub fn caveat(&self) -> &'static str {
        match self {
            SProvenance::EmptySet => "empty set: constant 2 is not a perfect power",
            SProvenance::EmpiricalScan { .. } => {
                "s is chosen from a bounded scan of gamma - 2^t, not from a proven bound; \
                 f_S is heuristically correct and must be checked by the verifier"
            }
        }
    }
}

/// Intermediate values of the pipeline for nonempty `S`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PipelineRecord {
    pub pairs: Vec<(Integer, Integer)>,
    pub k: u64,
    /// `F = P² − 1`.
    pub big_f: IntPoly,
    pub deltas: Vec<Rational>,
    /// `(4δ_j, D̂(4δ_j))`.
    pub d_estimates: Vec<(Rational, u64)>,
    pub kappa: u32,
    pub s: u64,
    pub g: IntPoly,
    pub h: IntPoly,
    pub provenance: SProvenance,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionArtifacts {
    pub elements: Vec<Rational>,
    pub policy: SelectionPolicy,
    pub f_s: IntPoly,
    /// `None` exactly when `S` is empty.
    pub pipeline: Option<PipelineRecord>,
}

impl ConstructionArtifacts {
    pub fn provenance(&self) -> SProvenance {
        self.pipeline
            .as_ref()
            .map_or(SProvenance::EmptySet, |p| p.provenance)
    }
}

/// `lcm(4, p − 1)` over the distinct primes `p` dividing `∏ c_i`.
pub fn compute_k(set: &PowerSetInput) -> Result<Integer> {
    let mut primes = BTreeSet::new();
    for (_, c) in set.pairs() {
        for p in factor_integer(&c)?.primes() {
            primes.insert(p.clone());
        }
    }
    Ok(primes
        .into_iter()
        .fold(Integer::from(4), |k, p| k.lcm(&(p - 1u32))))
}

/// `P(X) = ∏ (c_i X − a_i)`.
pub fn product_poly(set: &PowerSetInput) -> IntPoly {
    set.pairs()
        .into_iter()
        .fold(IntPoly::constant(1), |acc, (a, c)| {
            acc.mul(&IntPoly::linear(c, -a))
        })
}

#[allow(non_snake_case)]
pub fn build_F(set: &PowerSetInput) -> IntPoly {
    let p = product_poly(set);
    p.mul(&p).sub(&IntPoly::constant(1))
}

/// Nonzero rational roots of `F`, found as the roots of `P − 1` and `P + 1`.
pub fn find_deltas(set: &PowerSetInput) -> Result<Vec<Rational>> {
    let p = product_poly(set);
    let big_f = p.mul(&p).sub(&IntPoly::constant(1));
    let one = IntPoly::constant(1);
    let mut deltas = Vec::new();
    for factor in [p.sub(&one), p.add(&one)] {
        if factor.degree().unwrap_or(0) == 0 {
            continue;
        }
        for root in factor.rational_roots()? {
            if !root.is_zero() {
                debug_assert!(big_f.eval_rational(&root).is_zero());
                if !big_f.eval_rational(&root).is_zero() {
                    return Err(Error::domain(format!("{root} is not a root of F")));
                }
                deltas.push(root);
            }
        }
    }
    deltas.sort();
    deltas.dedup();
    Ok(deltas)
}

/// Surrogate threshold for `γ − 2^t ∉ 𝒫_Q`:
/// `max(0, ⌈log₂|γ|⌉, last t <= t_max with γ − 2^t ∈ 𝒫_Q)`.
pub fn estimate_d(gamma: &Rational, policy: &SelectionPolicy) -> Result<u64> {
    let scan = scan_gamma_minus_pow2(gamma, policy.t_max)?;
    let last_hit = scan
        .solutions
        .iter()
        .filter_map(|sol| sol.values[0].to_u64())
        .max()
        .unwrap_or(0);
    Ok(ceil_log2_abs_clamped(gamma).max(last_hit))
}

/// `(4δ_j, D̂(4δ_j))` for each delta.
pub fn d_estimates(deltas: &[Rational], policy: &SelectionPolicy) -> Result<Vec<(Rational, u64)>> {
    deltas
        .iter()
        .map(|d| {
            let gamma = d * Rational::from_integer(4.into());
            estimate_d(&gamma, policy).map(|est| (gamma, est))
        })
        .collect()
}

/// Smallest `s = 2^κ − 1`, `κ >= 1`, with `s >= D̂(4δ_j)` for every `j`.
pub fn select_s(deltas: &[Rational], policy: &SelectionPolicy) -> Result<(u64, u32)> {
    let estimates = d_estimates(deltas, policy)?;
    s_from_estimates(deltas, &estimates, policy)
}

fn s_from_estimates(
    deltas: &[Rational],
    estimates: &[(Rational, u64)],
    policy: &SelectionPolicy,
) -> Result<(u64, u32)> {
    let worst = estimates
        .iter()
        .enumerate()
        .max_by_key(|(_, (_, d))| *d)
        .map(|(j, (_, d))| (j, *d));
    let required = worst.map_or(0, |(_, d)| d);
    let mut kappa = 1u32;
    while (1u64 << kappa) - 1 < required {
        kappa += 1;
        if kappa > policy.kappa_cap {
            let (j, _) = worst.expect("nonzero requirement has a source");
            return Err(Error::KappaCap {
                delta: deltas[j].clone(),
                required_d: required,
                kappa_cap: policy.kappa_cap,
            });
        }
    }
    Ok(((1u64 << kappa) - 1, kappa))
}

/// `g = P^k + 1`, `h = (X − 2^s)·g + 2^s`, `f_S = g·h`.
pub fn build_g_h_f(set: &PowerSetInput, k: u64, s: u64) -> (IntPoly, IntPoly, IntPoly) {
    let g = set
        .pairs()
        .into_iter()
        .fold(IntPoly::constant(1), |acc, (a, c)| {
            acc.mul(&IntPoly::linear(c, -a).pow(k))
        })
        .add(&IntPoly::constant(1));
    let two_s = Integer::one() << s;
    let h = IntPoly::linear(Integer::one(), -two_s.clone())
        .mul(&g)
        .add(&IntPoly::constant(two_s));
    let f = g.mul(&h);
    (g, h, f)
}

pub fn construct(set: &PowerSetInput, policy: SelectionPolicy) -> Result<ConstructionArtifacts> {
    policy.validate()?;
    if set.is_empty() {
        return Ok(ConstructionArtifacts {
            elements: Vec::new(),
            policy,
            f_s: IntPoly::constant(2),
            pipeline: None,
        });
    }
    let k_big = compute_k(set)?;
    let r = set.len() as u128;
    let degree = k_big
        .to_u128()
        .and_then(|k| k.checked_mul(2 * r))
        .map(|d| d + 1);
    let k = match degree {
        Some(d) if d <= policy.max_degree as u128 => k_big.to_u64().expect("bounded by degree"),
        _ => {
            return Err(Error::DegreeCap {
                degree: degree.unwrap_or(u128::MAX),
                max_degree: policy.max_degree,
            })
        }
    };

    let big_f = build_F(set);
    let deltas = find_deltas(set)?;
    let estimates = d_estimates(&deltas, &policy)?;
    let (s, kappa) = s_from_estimates(&deltas, &estimates, &policy)?;
    let (g, h, f_s) = build_g_h_f(set, k, s);

    Ok(ConstructionArtifacts {
        elements: set.elements().to_vec(),
        policy,
        f_s,
        pipeline: Some(PipelineRecord {
            pairs: set.pairs(),
            k,
            big_f,
            deltas,
            d_estimates: estimates,
            kappa,
            s,
            g,
            h,
            provenance: SProvenance::EmpiricalScan {
                t_max: policy.t_max,
            },
        }),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerConstruction {
    pub elements: Vec<Rational>,
    pub g: IntPoly,
    pub h: IntPoly,
    pub f: IntPoly,
}

/// `g = ∏ (X − b_i)² + 1`, `h = (X − 1)·g + 1`, `f = g·h`.
pub fn construct_integer(set: &PowerSetInput) -> Result<IntegerConstruction> {
    if set.variant() != Variant::Integer {
        return Err(Error::Validation {
            element: "<set>".to_string(),
            reason: "needs the integer variant for the integer construction".to_string(),
        });
    }
    let g = set
        .elements()
        .iter()
        .fold(IntPoly::constant(1), |acc, b| {
            let lin = IntPoly::linear(Integer::one(), -b.numer().clone());
            acc.mul(&lin.mul(&lin))
        })
        .add(&IntPoly::constant(1));
    let h = IntPoly::linear(Integer::one(), -Integer::one())
        .mul(&g)
        .add(&IntPoly::constant(1));
    let f = g.mul(&h);
    Ok(IntegerConstruction {
        elements: set.elements().to_vec(),
        g,
        h,
        f,
    })
}
