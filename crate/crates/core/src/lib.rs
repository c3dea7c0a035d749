//! Integer polynomials whose rational perfect-power values are exactly a
//! prescribed finite set, together with the machinery to check that claim
//! empirically.
//!
//! Given a finite set `S` of rational perfect powers, [`construct::construct`]
//! produces `f_S ∈ Z[X]` with `f_S(β) = β` for every `β ∈ S`; no other
//! rational argument is supposed to land on a perfect power.
//! [`verify`] scans every rational of bounded height to test this, and
//! re-derives the auxiliary quantities `u, v, A, B, w` of the argument as
//! runtime assertions. [`oracles`] contain bounded exhaustive searches for
//! the classical Diophantine results the construction leans on.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, parallel
//! scans and the command line live in the `power-forge` crate.

#![no_std]

extern crate alloc;

pub mod construct;
mod error;
pub mod factor;
pub mod numeric;
pub mod oracles;
pub mod poly;
pub mod power;
pub mod verify;

pub use construct::{
    construct, construct_integer, ConstructionArtifacts, IntegerConstruction, PipelineRecord,
    PowerSetInput, SProvenance, SelectionPolicy, Variant,
};
pub use error::Error;
pub use factor::{factor_integer, is_prime, Factorization};
pub use numeric::{
    height, integer_nth_root, normalize_rational, padic_valuation, parse_rational, Integer,
    Rational,
};
pub use poly::IntPoly;
pub use power::{decompose_integer_power, decompose_rational_power, PowerDecomposition};
pub use verify::{
    enumerate_rationals, trace_quantities, verify_construction, verify_integer_construction,
    TraceRecord, Tracer, VerificationReport, Verdict,
};

pub type Result<T, E = Error> = core::result::Result<T, E>;
