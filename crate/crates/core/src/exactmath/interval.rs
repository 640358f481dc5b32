//! Closed intervals with exact rational endpoints.
//!
//! Because the endpoints are exact rationals, the arithmetic here never
//! rounds: every operation returns the exact hull of the result set, which in
//! particular contains the exact real result (outward enclosure).

use super::Rational;
use core::fmt;
use num_traits::Zero;

/// Closed interval `[lo, hi]` with `lo <= hi`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalInterval {
    lo: Rational,
    hi: Rational,
}

impl RationalInterval {
    /// Panics if `lo > hi`.
    pub fn new(lo: Rational, hi: Rational) -> Self {
        assert!(lo <= hi, "interval endpoints out of order");
        RationalInterval { lo, hi }
    }

    pub fn point(x: Rational) -> Self {
        RationalInterval { lo: x.clone(), hi: x }
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_interval(&self, other: &RationalInterval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / super::int(2)
    }

    pub fn add(&self, other: &RationalInterval) -> RationalInterval {
        RationalInterval { lo: &self.lo + &other.lo, hi: &self.hi + &other.hi }
    }

    pub fn add_scalar(&self, x: &Rational) -> RationalInterval {
        RationalInterval { lo: &self.lo + x, hi: &self.hi + x }
    }

    pub fn neg(&self) -> RationalInterval {
        RationalInterval { lo: -self.hi.clone(), hi: -self.lo.clone() }
    }

    pub fn sub(&self, other: &RationalInterval) -> RationalInterval {
        self.add(&other.neg())
    }

    pub fn scale(&self, x: &Rational) -> RationalInterval {
        if x >= &Rational::zero() {
            RationalInterval { lo: &self.lo * x, hi: &self.hi * x }
        } else {
            RationalInterval { lo: &self.hi * x, hi: &self.lo * x }
        }
    }

    pub fn mul(&self, other: &RationalInterval) -> RationalInterval {
        let candidates = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = candidates.iter().min().unwrap().clone();
        let hi = candidates.iter().max().unwrap().clone();
        RationalInterval { lo, hi }
    }

    /// Hull of `{a/b : a in self, b in other}`; `other` must not contain zero.
    pub fn div(&self, other: &RationalInterval) -> RationalInterval {
        assert!(
            !other.contains(&Rational::zero()),
            "interval division by an interval containing zero"
        );
        let candidates = [
            &self.lo / &other.lo,
            &self.lo / &other.hi,
            &self.hi / &other.lo,
            &self.hi / &other.hi,
        ];
        let lo = candidates.iter().min().unwrap().clone();
        let hi = candidates.iter().max().unwrap().clone();
        RationalInterval { lo, hi }
    }
}

impl fmt::Display for RationalInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", super::format_rational(&self.lo), super::format_rational(&self.hi))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{int, rat};

    #[test]
    fn interval_ops_enclose_exact_results() {
        let a = RationalInterval::new(rat(1, 2), rat(3, 4));
        let b = RationalInterval::new(rat(-1, 3), rat(1, 3));
        let sum = a.add(&b);
        assert_eq!(sum, RationalInterval::new(rat(1, 6), rat(13, 12)));
        let prod = a.mul(&b);
        assert_eq!(prod, RationalInterval::new(rat(-1, 4), rat(1, 4)));
        assert!(prod.contains(&(rat(1, 2) * rat(1, 3))));
    }

    #[test]
    fn scale_flips_on_negative() {
        let a = RationalInterval::new(int(1), int(2));
        assert_eq!(a.scale(&int(-3)), RationalInterval::new(int(-6), int(-3)));
    }

    #[test]
    fn division_requires_nonzero_divisor() {
        let a = RationalInterval::new(int(1), int(2));
        let b = RationalInterval::new(int(3), int(4));
        assert_eq!(a.div(&b), RationalInterval::new(rat(1, 4), rat(2, 3)));
    }
}
