//! Bounded-height search for perfect-power values of `f_S`, and the
//! proof-trace quantities `u, v, A, B, w` as executable identities.
//!
//! The scan space is split by denominator. Each block is independent, so a
//! driver may run blocks in any order or in parallel and hand the results
//! to [`finish_rational_report`], which normalizes the order.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_integer::Integer as _;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::construct::{ConstructionArtifacts, PowerSetInput};
use crate::numeric::{height, Integer, Rational};
use crate::poly::IntPoly;
use crate::power::{decompose_integer_power, decompose_rational_power, PowerDecomposition};
use crate::{Error, Result};

/// Every `u/v` in lowest terms with `|u| <= bound`, `1 <= v <= bound`;
/// denominator-major, numerators ascending.
pub fn enumerate_rationals(bound: u64) -> impl Iterator<Item = Rational> {
    (1..=bound).flat_map(move |v| denominator_block(bound, v))
}

/// The numerators for one denominator `v`.
pub fn denominator_block(bound: u64, v: u64) -> impl Iterator<Item = Rational> {
    let b = bound as i64;
    (-b..=b)
        .filter(move |u| u.unsigned_abs().gcd(&v) == 1)
        .map(move |u| Rational::new(u.into(), v.into()))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hit {
    pub x: Rational,
    pub value: Rational,
    pub witness: PowerDecomposition,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HitViolation {
    pub x: Rational,
    pub reason: String,
}

/// Partial result for one unit of scan work.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BlockResult {
    pub points: u64,
    pub hits: Vec<Hit>,
}

impl BlockResult {
    pub fn merge(mut self, other: BlockResult) -> BlockResult {
        self.points += other.points;
        self.hits.extend(other.hits);
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub bound: u64,
    pub points_scanned: u64,
    /// Sorted by `x`.
    pub hits: Vec<Hit>,
    pub verdict: Verdict,
    /// Elements of `S` never hit, including ones beyond the bound.
    pub missing: Vec<Rational>,
    /// Hits whose argument or value is outside `S`.
    pub extras: Vec<Hit>,
    pub invariant_violations: Vec<HitViolation>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn hit_values(&self) -> Vec<Rational> {
        let mut v: Vec<_> = self.hits.iter().map(|h| h.value.clone()).collect();
        v.sort();
        v.dedup();
        v
    }
}

pub fn scan_rational_block(f: &IntPoly, bound: u64, v: u64) -> BlockResult {
    let mut out = BlockResult::default();
    for x in denominator_block(bound, v) {
        out.points += 1;
        let value = f.eval_rational(&x);
        if let Some(witness) = decompose_rational_power(&value) {
            out.hits.push(Hit { x, value, witness });
        }
    }
    out
}

pub fn scan_integer_range(f: &IntPoly, lo: i64, hi: i64) -> BlockResult {
    let mut out = BlockResult::default();
    for x in lo..=hi {
        out.points += 1;
        let xi = Integer::from(x);
        let value = f.eval_integer(&xi);
        if let Some(witness) = decompose_integer_power(&value) {
            out.hits.push(Hit {
                x: Rational::from_integer(xi),
                value: Rational::from_integer(value),
                witness,
            });
        }
    }
    out
}

pub fn verify_construction(
    art: &ConstructionArtifacts,
    set: &PowerSetInput,
    bound: u64,
) -> VerificationReport {
    let scanned = (1..=bound)
        .map(|v| scan_rational_block(&art.f_s, bound, v))
        .fold(BlockResult::default(), BlockResult::merge);
    finish_rational_report(art, set, bound, scanned)
}

/// Verdict and invariant checks for a completed rational scan.
pub fn finish_rational_report(
    art: &ConstructionArtifacts,
    set: &PowerSetInput,
    bound: u64,
    scanned: BlockResult,
) -> VerificationReport {
    let mut invariant_violations = Vec::new();
    let tracer = art
        .pipeline
        .as_ref()
        .and_then(|p| Tracer::new(set, p.k).ok());
    if let Some(tracer) = &tracer {
        for hit in &scanned.hits {
            invariant_violations.extend(check_hit(tracer, hit));
        }
    }
    let bound_int = Integer::from(bound);
    finish(set, bound, scanned, invariant_violations, |b| height(b) <= bound_int)
}

/// Checks that only apply when `f_S(x)` is a perfect power.
fn check_hit(tracer: &Tracer, hit: &Hit) -> Option<HitViolation> {
    let violation = |reason: String| {
        Some(HitViolation {
            x: hit.x.clone(),
            reason,
        })
    };
    let rec = match tracer.trace(&hit.x) {
        Ok(rec) => rec,
        Err(e) => return violation(format!("{e}")),
    };
    if rec.power_sum == Integer::from(2) {
        return violation(String::from("B^k + w^k = 2 at a perfect-power value"));
    }
    if hit.value.is_zero() && !rec.b.is_zero() {
        return violation(format!("f_S(x) = 0 but B = {}", rec.b));
    }
    None
}

/// Scans `x ∈ [−bound, bound] ∩ Z` for values in `𝒫_Z`.
pub fn verify_integer_construction(f: &IntPoly, set: &PowerSetInput, bound: u64) -> VerificationReport {
    let b = bound as i64;
    finish_integer_report(set, bound, scan_integer_range(f, -b, b))
}

pub fn finish_integer_report(set: &PowerSetInput, bound: u64, scanned: BlockResult) -> VerificationReport {
    let bound_int = Integer::from(bound);
    finish(set, bound, scanned, Vec::new(), |b| b.numer().abs() <= bound_int)
}

fn finish(
    set: &PowerSetInput,
    bound: u64,
    mut scanned: BlockResult,
    invariant_violations: Vec<HitViolation>,
    in_range: impl Fn(&Rational) -> bool,
) -> VerificationReport {
    scanned.hits.sort_by(|a, b| a.x.cmp(&b.x));
    let extras: Vec<Hit> = scanned
        .hits
        .iter()
        .filter(|h| !set.contains(&h.x) || !set.contains(&h.value))
        .cloned()
        .collect();
    let missing: Vec<Rational> = set
        .elements()
        .iter()
        .filter(|b| !scanned.hits.iter().any(|h| &h.value == *b))
        .cloned()
        .collect();
    let pass = extras.is_empty()
        && invariant_violations.is_empty()
        && missing.iter().all(|b| !in_range(b));
    VerificationReport {
        bound,
        points_scanned: scanned.points,
        hits: scanned.hits,
        verdict: if pass { Verdict::Pass } else { Verdict::Fail },
        missing,
        extras,
        invariant_violations,
    }
}

/// Proof-trace quantities at one rational point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceRecord {
    pub x: Rational,
    pub u: Integer,
    pub v: Integer,
    /// `A = ∏ (c_i u − a_i v)`.
    pub a: Integer,
    /// `B = A / gcd(A, v^r)`.
    pub b: Integer,
    /// `w = v^r / gcd(A, v^r)`.
    pub w: Integer,
    /// `B^k + w^k`.
    pub power_sum: Integer,
    pub lemma_2pow_ok: bool,
    pub lemma_not2_ok: bool,
    pub gcd_bw_ok: bool,
    pub identity_g_ok: bool,
    pub mod4_ok: bool,
    pub membership_ok: bool,
}

impl TraceRecord {
    pub fn all_ok(&self) -> bool {
        self.lemma_2pow_ok
            && self.lemma_not2_ok
            && self.gcd_bw_ok
            && self.identity_g_ok
            && self.mod4_ok
            && self.membership_ok
    }
}

/// Caches `g = ∏ (c_i X − a_i)^k + 1` so points can be traced cheaply.
#[derive(Debug, Clone)]
pub struct Tracer {
    set: PowerSetInput,
    pairs: Vec<(Integer, Integer)>,
    k: u64,
    g: IntPoly,
}

impl Tracer {
    pub fn new(set: &PowerSetInput, k: u64) -> Result<Self> {
        if set.is_empty() {
            return Err(Error::domain("trace needs a nonempty set"));
        }
        if k == 0 || !k.is_multiple_of(4) {
            return Err(Error::domain(format!("k = {k} is not a positive multiple of 4")));
        }
        let pairs = set.pairs();
        let g = pairs
            .iter()
            .fold(IntPoly::constant(1), |acc, (a, c)| {
                acc.mul(&IntPoly::linear(c.clone(), -a.clone()).pow(k))
            })
            .add(&IntPoly::constant(1));
        Ok(Tracer {
            set: set.clone(),
            pairs,
            k,
            g,
        })
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    /// Computes the record and fails with [`Error::InvariantViolation`] if
    /// any identity does not hold.
    pub fn trace(&self, x: &Rational) -> Result<TraceRecord> {
        let rec = self.record(x);
        if rec.all_ok() {
            Ok(rec)
        } else {
            Err(Error::InvariantViolation(alloc::boxed::Box::new(rec)))
        }
    }

    /// Same as [`Tracer::trace`] without the final check.
    pub fn record(&self, x: &Rational) -> TraceRecord {
        let (u, v) = (x.numer().clone(), x.denom().clone());
        let r = self.pairs.len();
        let a: Integer = self
            .pairs
            .iter()
            .map(|(ai, ci)| ci * &u - ai * &v)
            .product();
        let v_r = num_traits::pow(v.clone(), r);
        let common = a.gcd(&v_r);
        let b = &a / &common;
        let w = &v_r / &common;
        let k = self.k as usize;
        let w_k = num_traits::pow(w.clone(), k);
        let power_sum = num_traits::pow(b.clone(), k) + &w_k;

        let gcd_bw_ok = b.gcd(&w).is_one() && w >= Integer::one();
        let sum_v = power_sum.gcd(&v);
        let lemma_2pow_ok = sum_v.is_positive() && (&sum_v & (&sum_v - 1u32)).is_zero();
        let lemma_not2_ok = power_sum > Integer::from(2) || (b.abs() <= Integer::one() && w.is_one());
        let identity_g_ok = self.g.eval_rational(x) == Rational::new(power_sum.clone(), w_k);
        let mod4 = (&power_sum % 4u32).to_u32().unwrap_or(0);
        let mod4_ok = mod4 == 1 || mod4 == 2;
        let membership_ok = a.is_zero() == self.set.contains(x);

        TraceRecord {
            x: x.clone(),
            u,
            v,
            a,
            b,
            w,
            power_sum,
            lemma_2pow_ok,
            lemma_not2_ok,
            gcd_bw_ok,
            identity_g_ok,
            mod4_ok,
            membership_ok,
        }
    }
}

pub fn trace_quantities(set: &PowerSetInput, k: u64, x: &Rational) -> Result<TraceRecord> {
    Tracer::new(set, k)?.trace(x)
}
