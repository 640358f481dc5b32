//! Certified comparisons of a rational weight ratio `w1/w2` against the two
//! irrational thresholds used by the symmetric-game regime boundaries.
//!
//! The proportional-cost threshold `sigma ~ 2.14790` is the positive real root
//! of `x^4 - 3x^2 - 3x - 1`, so comparisons reduce to an exact polynomial sign
//! evaluation. The uniform-cost threshold `tau ~ 3.15276` is only available in
//! radical form, `tau = (2 + cbrt(62 - 3*sqrt(183)) + cbrt(62 + 3*sqrt(183))) / 3`,
//! so comparisons go through a certified interval enclosure that is refined by
//! bisection until the query ratio falls strictly outside it.

use super::{ExactError, Rational, RationalInterval};
use num_traits::{Signed, Zero};

/// Which side of a threshold a ratio lies on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ThresholdSide {
    /// `w1/w2` is strictly below the threshold.
    Below,
    /// `w1/w2` is strictly above the threshold.
    Above,
}

/// Homogenized defining polynomial of `sigma` at `(w1, w2)`:
/// `w1^4 - 3 w1^2 w2^2 - 3 w1 w2^3 - w2^4`. Negative iff `w1 < sigma * w2`.
pub fn sigma_poly_value(w1: &Rational, w2: &Rational) -> Rational {
    let w1_2 = w1 * w1;
    let w2_2 = w2 * w2;
    let w2_3 = &w2_2 * w2;
    &w1_2 * &w1_2
        - super::int(3) * &w1_2 * &w2_2
        - super::int(3) * w1 * &w2_3
        - &w2_2 * &w2_2
}

/// Decides `w1/w2` versus `sigma` by the sign of the defining polynomial.
///
/// Requires `w1 >= 0` and `w2 > 0`. A zero sign is impossible for rational
/// inputs (`sigma` is irrational) and reported as [`ExactError::ExactThresholdHit`].
pub fn compare_ratio_to_sigma(w1: &Rational, w2: &Rational) -> Result<ThresholdSide, ExactError> {
    debug_assert!(!w1.is_negative() && w2.is_positive());
    let value = sigma_poly_value(w1, w2);
    if value.is_zero() {
        Err(ExactError::ExactThresholdHit)
    } else if value.is_negative() {
        Ok(ThresholdSide::Below)
    } else {
        Ok(ThresholdSide::Above)
    }
}

/// Encloses the k-th root of `[t_lo, t_hi]` by bisection inside `bracket`.
///
/// Both bisections start from the same bracket, so deeper `steps` always
/// yields an interval contained in a shallower one. The returned lower
/// endpoint `l` satisfies `l^k <= t_lo` and the upper `h` satisfies
/// `h^k >= t_hi` (outward enclosure).
fn root_enclosure(
    t_lo: &Rational,
    t_hi: &Rational,
    k: u32,
    bracket: (i64, i64),
    steps: u32,
) -> RationalInterval {
    let pow = |x: &Rational| -> Rational {
        let mut acc = x.clone();
        for _ in 1..k {
            acc *= x;
        }
        acc
    };
    let (a, b) = (super::int(bracket.0), super::int(bracket.1));
    debug_assert!(pow(&a) <= *t_lo && *t_hi <= pow(&b), "bracket does not cover the root");

    let mut lo = a.clone();
    let mut hi = b.clone();
    for _ in 0..steps {
        let mid = (&lo + &hi) / super::int(2);
        if pow(&mid) <= *t_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let lower = lo;

    let mut lo = a;
    let mut hi = b;
    for _ in 0..steps {
        let mid = (&lo + &hi) / super::int(2);
        if pow(&mid) >= *t_hi {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    RationalInterval::new(lower, hi)
}

/// Certified enclosure of `tau`, refined with `depth` bisection steps per root.
///
/// sqrt(183) is enclosed by bisection of `y^2 = 183` on `[13, 14]`, the two
/// cube roots by bisection of `y^3 = c` with the endpoints of the enclosed
/// radicand, and the results are combined with exact interval arithmetic.
/// Enclosures are nested: a deeper enclosure is contained in a shallower one.
pub fn tau_enclosure(depth: u32) -> RationalInterval {
    let sqrt183 = root_enclosure(&super::int(183), &super::int(183), 2, (13, 14), depth);
    let three = super::int(3);
    let sixty_two = RationalInterval::point(super::int(62));
    let inner = sqrt183.scale(&three);
    let c_minus = sixty_two.sub(&inner); // around 21.417
    let c_plus = sixty_two.add(&inner); // around 102.583
    let cbrt_minus = root_enclosure(c_minus.lo(), c_minus.hi(), 3, (2, 3), depth);
    let cbrt_plus = root_enclosure(c_plus.lo(), c_plus.hi(), 3, (4, 5), depth);
    cbrt_minus
        .add(&cbrt_plus)
        .add_scalar(&super::int(2))
        .scale(&super::rat(1, 3))
}

/// Refinement schedule for [`compare_ratio_to_tau`]. The cap is far beyond
/// anything a denominator of practical size can require.
const TAU_DEPTHS: [u32; 6] = [16, 32, 64, 128, 256, 512];

/// Decides `w1/w2` versus `tau` by refining the enclosure until it excludes
/// the ratio. Requires `w1 >= 0` and `w2 > 0`.
pub fn compare_ratio_to_tau(w1: &Rational, w2: &Rational) -> Result<ThresholdSide, ExactError> {
    debug_assert!(!w1.is_negative() && w2.is_positive());
    let ratio = w1 / w2;
    for depth in TAU_DEPTHS {
        let enclosure = tau_enclosure(depth);
        if ratio < *enclosure.lo() {
            return Ok(ThresholdSide::Below);
        }
        if ratio > *enclosure.hi() {
            return Ok(ThresholdSide::Above);
        }
    }
    Err(ExactError::RefinementCapExhausted { steps: *TAU_DEPTHS.last().unwrap() })
}

/// Convenience used by regime predicates: `w1/w2 < tau` (panics on the
/// impossible unresolved case).
pub fn ratio_below_tau(w1: &Rational, w2: &Rational) -> bool {
    matches!(compare_ratio_to_tau(w1, w2), Ok(ThresholdSide::Below))
}

/// `w1/w2 < sigma`.
pub fn ratio_below_sigma(w1: &Rational, w2: &Rational) -> bool {
    matches!(compare_ratio_to_sigma(w1, w2), Ok(ThresholdSide::Below))
}
