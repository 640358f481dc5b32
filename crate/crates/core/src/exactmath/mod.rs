//! Exact rational arithmetic plus certified comparisons of a rational weight
//! ratio against the two irrational thresholds where the symmetric-game
//! worst-case structure changes.
//!
//! All magnitudes in this crate (weights, cost coefficients, costs, ratios)
//! are [`Rational`] values. `num_rational::BigRational` keeps every value in
//! canonical form: positive denominator, `gcd(|numerator|, denominator) = 1`.

mod interval;
mod thresholds;

pub use interval::RationalInterval;
pub use thresholds::{
    compare_ratio_to_sigma, compare_ratio_to_tau, ratio_below_sigma, ratio_below_tau,
    sigma_poly_value, tau_enclosure, ThresholdSide,
};

use alloc::string::{String, ToString};
use core::fmt;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact fraction with arbitrary-precision numerator and denominator.
pub type Rational = BigRational;

/// Errors from exact arithmetic and threshold comparisons.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExactError {
    /// Division by an exactly-zero rational.
    DivisionByZero,
    /// Input string is not of the form `p` or `p/q` with decimal integers.
    Parse(String),
    /// A threshold comparison hit the threshold exactly. Impossible for
    /// rational inputs against an irrational threshold, so this flags a bug.
    ExactThresholdHit,
    /// Interval refinement reached its iteration cap without separating the
    /// query from the threshold. Flags a bug or a pathological input.
    RefinementCapExhausted { steps: u32 },
}

impl fmt::Display for ExactError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactError::DivisionByZero => write!(f, "division by zero"),
            ExactError::Parse(s) => write!(f, "cannot parse {s:?} as a rational (want p or p/q)"),
            ExactError::ExactThresholdHit => {
                write!(f, "rational input compared equal to an irrational threshold (bug)")
            }
            ExactError::RefinementCapExhausted { steps } => {
                write!(f, "threshold comparison unresolved after {steps} refinement steps (bug)")
            }
        }
    }
}

impl core::error::Error for ExactError {}

/// `n/d` from machine integers; panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Integer as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Exact division, with division by zero as an error instead of a panic.
pub fn checked_div(a: &Rational, b: &Rational) -> Result<Rational, ExactError> {
    if b.is_zero() {
        return Err(ExactError::DivisionByZero);
    }
    Ok(a / b)
}

/// Parses `p` or `p/q` (decimal integers, optional leading minus).
pub fn parse_rational(s: &str) -> Result<Rational, ExactError> {
    let s = s.trim();
    let err = || ExactError::Parse(s.to_string());
    let parse_int = |t: &str| -> Result<BigInt, ExactError> {
        if t.is_empty() {
            return Err(err());
        }
        let digits = t.strip_prefix('-').unwrap_or(t);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err());
        }
        t.parse::<BigInt>().map_err(|_| err())
    };
    match s.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(s)?)),
        Some((p, q)) => {
            let num = parse_int(p)?;
            let den = parse_int(q)?;
            if den.is_zero() {
                return Err(err());
            }
            Ok(Rational::new(num, den))
        }
    }
}

/// Renders as `p/q`, or plain `p` for integers. No locale formatting.
pub fn format_rational(x: &Rational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        alloc::format!("{}/{}", x.numer(), x.denom())
    }
}

/// Sign of a rational as -1, 0, or 1.
pub fn sign(x: &Rational) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}
