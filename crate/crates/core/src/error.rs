//! Error type shared by every module of the crate.

use std::fmt;

/// Errors raised by precondition and consistency checks.
///
/// Arithmetic overflow is not represented here: all statistics use checked
/// 64-bit arithmetic and abort with a diagnostic, since a silently wrapped
/// value would poison exact verification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Two partitions compared in dominance order have different sizes.
    SizeMismatch { left: i64, right: i64 },
    /// Mirror exponent smaller than the polynomial degree.
    MirrorRange { degree: i64, pivot: i64 },
    /// A letter fell outside the expected alphabet interval.
    Alphabet { letter: i64, lo: i64, hi: i64 },
    /// A filling violated row or column conditions.
    NotColumnStrict(String),
    /// Input failed an operation's precondition.
    Precondition(String),
    /// An identity the implementation relies on failed; carries a witness.
    InternalConsistency(String),
    /// Statistic expected to be an integer was not.
    NonIntegral { numer: i64, denom: i64 },
    /// A rigged configuration was handed to a statistic in the wrong
    /// labelling convention.
    Convention { expected: &'static str, got: &'static str },
    /// A parameter fell outside its legal range.
    Range(String),
    /// Enumeration aborted because the configured work cap was exceeded.
    CapExceeded { cap: u64, needed: u64 },
    /// A serialized object could not be reconstructed.
    Format(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::SizeMismatch { left, right } => {
                write!(f, "size mismatch: |left| = {left}, |right| = {right}")
            }
            Error::MirrorRange { degree, pivot } => {
                write!(f, "mirror pivot {pivot} is smaller than degree {degree}")
            }
            Error::Alphabet { letter, lo, hi } => {
                write!(f, "letter {letter} outside alphabet [{lo},{hi}]")
            }
            Error::NotColumnStrict(what) => write!(f, "not column strict: {what}"),
            Error::Precondition(what) => write!(f, "precondition failed: {what}"),
            Error::InternalConsistency(what) => {
                write!(f, "internal consistency failure (counterexample): {what}")
            }
            Error::NonIntegral { numer, denom } => {
                write!(f, "expected integer, got {numer}/{denom}")
            }
            Error::Convention { expected, got } => {
                write!(f, "labelling convention mismatch: expected {expected}, got {got}")
            }
            Error::Range(what) => write!(f, "parameter out of range: {what}"),
            Error::CapExceeded { cap, needed } => {
                write!(f, "skipped-cap: work estimate {needed} exceeds cap {cap}")
            }
            Error::Format(what) => write!(f, "format error: {what}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;

/// Checked addition that aborts on overflow instead of wrapping.
#[inline]
pub fn add(a: i64, b: i64) -> i64 {
    a.checked_add(b).unwrap_or_else(|| panic!("integer overflow in {a} + {b}"))
}

/// Checked multiplication that aborts on overflow instead of wrapping.
#[inline]
pub fn mul(a: i64, b: i64) -> i64 {
    a.checked_mul(b).unwrap_or_else(|| panic!("integer overflow in {a} * {b}"))
}

/// Binomial coefficient C(x, 2) for any integer x, exact.
#[inline]
pub fn choose2(x: i64) -> i64 {
    // x(x-1)/2 is integral for every integer x.
    mul(x, x - 1) / 2
}
