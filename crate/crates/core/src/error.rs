use alloc::boxed::Box;
use alloc::string::String;
use core::fmt;

use crate::numeric::Rational;
use crate::verify::TraceRecord;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A fraction was given a zero denominator.
    ZeroDenominator,
    /// An argument outside the operation's domain.
    Domain(String),
    /// Malformed textual input.
    Parse(String),
    /// An element of the input set violates the input contract.
    Validation { element: String, reason: String },
    /// The selected `s` would need `κ` beyond the policy cap.
    KappaCap {
        delta: Rational,
        required_d: u64,
        kappa_cap: u32,
    },
    /// The construction would exceed the policy's degree limit.
    DegreeCap { degree: u128, max_degree: usize },
    /// One of the traced identities failed. This means the implementation
    /// is wrong, never the mathematics.
    InvariantViolation(Box<TraceRecord>),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroDenominator => f.write_str("zero denominator"),
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::Validation { element, reason } => write!(f, "{element} {reason}"),
            Error::KappaCap {
                delta,
                required_d,
                kappa_cap,
            } => write!(
                f,
                "delta {delta} needs s >= {required_d}, which exceeds kappa_cap = {kappa_cap}"
            ),
            Error::DegreeCap { degree, max_degree } => {
                write!(f, "degree {degree} exceeds max_degree = {max_degree}")
            }
            Error::InvariantViolation(rec) => {
                write!(f, "trace invariant violated at x = {}", rec.x)
            }
        }
    }
}

impl core::error::Error for Error {}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    /// Short machine-readable tag.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::ZeroDenominator => "zero_denominator",
            Error::Domain(_) => "domain",
            Error::Parse(_) => "parse",
            Error::Validation { .. } => "validation",
            Error::KappaCap { .. } => "kappa_cap",
            Error::DegreeCap { .. } => "degree_cap",
            Error::InvariantViolation(_) => "invariant_violation",
        }
    }
}
