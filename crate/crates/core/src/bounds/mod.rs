//! Entropy machinery for the exponential upper bounds.
//!
//! Everything here is generic over the scalar through [`Real`], so the same
//! code runs in `f32` and `f64`; the test suite pins `f64` values. Branch
//! inverses of the binary entropy are computed by bisection with a fixed
//! iteration budget, which converges to the working precision of the
//! scalar and never loops.
//!
//! Quantities named `u`, `t`, `c`, `m_s` are the per-element statistics of
//! a pair: mode union size, solution density, member size and symmetric
//! intersection size. The first bound controls dense unions, the second
//! bound controls sparse ones, and [`staircase`] combines the two over a
//! rectangle of `(u, t)` values.

pub mod staircase;

use std::fmt;

use thiserror::Error;

use crate::real::Real;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoundsError {
    #[error("value {value} is outside the unit interval")]
    UnitInterval { value: String },
    #[error("entropy inverse target {value} is outside [0, 1]")]
    EntropyTarget { value: String },
    #[error("{0}")]
    Precondition(&'static str),
    #[error("staircase point {index} lies outside the rectangle")]
    PointOutsideRectangle { index: usize },
    #[error("staircase point {index} uses the first bound left of its peak")]
    PeakPrecondition { index: usize },
}

/// A scalar known to lie in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct UnitReal<R: Real>(R);

impl<R: Real> UnitReal<R> {
    pub fn new(value: R) -> Result<Self, BoundsError> {
        if value >= R::zero() && value <= R::one() {
            Ok(UnitReal(value))
        } else {
            Err(BoundsError::UnitInterval {
                value: value.to_string(),
            })
        }
    }

    pub fn value(self) -> R {
        self.0
    }
}

impl<R: Real> fmt::Display for UnitReal<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

/// `h(x) = -x log2 x - (1-x) log2 (1-x)`, with `h(0) = h(1) = 0`.
pub fn binary_entropy<R: Real>(x: UnitReal<R>) -> R {
    let x = x.value();
    if x == R::zero() || x == R::one() {
        return R::zero();
    }
    let y = R::one() - x;
    -x * x.log2() - y * y.log2()
}

fn entropy_at<R: Real>(x: R) -> R {
    binary_entropy(UnitReal(x))
}

const BISECTION_STEPS: usize = 200;

/// Inverse of the increasing branch of `h` on `[0, 1/2]`.
pub fn entropy_inv_increasing<R: Real>(y: R) -> Result<UnitReal<R>, BoundsError> {
    if !(y >= R::zero() && y <= R::one()) {
        return Err(BoundsError::EntropyTarget {
            value: y.to_string(),
        });
    }
    let mut lo = R::zero();
    let mut hi = R::of(0.5);
    for _ in 0..BISECTION_STEPS {
        let mid = (lo + hi) / R::of(2.0);
        if entropy_at(mid) < y {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    UnitReal::new((lo + hi) / R::of(2.0))
}

/// Inverse of the decreasing branch of `h` on `[1/2, 1]`.
pub fn entropy_inv_decreasing<R: Real>(y: R) -> Result<UnitReal<R>, BoundsError> {
    let inc = entropy_inv_increasing(y)?;
    UnitReal::new(R::one() - inc.value())
}

/// The exponent governing the number of full-union solutions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FExponent<R: Real> {
    /// Root of `1 - 2s - h^{-1}(s)` on `[0, 1/2]`.
    pub s: R,
    /// `2^s`, the per-element growth rate.
    pub base: R,
}

/// Solves `1 - 2s - h^{-1}(s) = 0` by bisection; the left side is strictly
/// decreasing, positive at `0` and negative at `1/2`.
pub fn solve_f_exponent<R: Real>() -> FExponent<R> {
    let g = |s: R| {
        let inv = entropy_inv_increasing(s).expect("s stays within [0, 1/2]");
        R::one() - R::of(2.0) * s - inv.value()
    };
    let mut lo = R::zero();
    let mut hi = R::of(0.5);
    for _ in 0..BISECTION_STEPS {
        let mid = (lo + hi) / R::of(2.0);
        if g(mid) > R::zero() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let s = (lo + hi) / R::of(2.0);
    FExponent { s, base: s.exp2() }
}

/// `h(u) + t u`, the exponent of the count of pairs concentrated on unions
/// of relative size `u` at solution density `t`.
pub fn first_bound<R: Real>(u: UnitReal<R>, t: R) -> R {
    binary_entropy(u) + t * u.value()
}

/// Argmax of [`first_bound`] in `u` for fixed `t`: the sigmoid
/// `1 / (1 + 2^{-t})`, where the bound attains `log2(1 + 2^t)`.
pub fn first_bound_peak<R: Real>(t: R) -> UnitReal<R> {
    UnitReal::new(R::one() / (R::one() + (-t).exp2())).expect("sigmoid lies in (0, 1)")
}

/// Lower bound `h^{-1}(t) u` on the symmetric intersection size `m_s`.
pub fn m_s_lower<R: Real>(u: UnitReal<R>, t: R) -> Result<R, BoundsError> {
    Ok(entropy_inv_increasing(t)?.value() * u.value())
}

/// Lower bound `c - h^{-1}(tu / (u - c)) (u - c)` on the typical
/// intersection size `m_a`, using the decreasing entropy branch.
pub fn m_a_lower<R: Real>(u: UnitReal<R>, t: R, c: UnitReal<R>) -> Result<R, BoundsError> {
    let (u, c) = (u.value(), c.value());
    if !(c < u && u <= R::of(2.0) * c) {
        return Err(BoundsError::Precondition(
            "typical intersection bound needs c < u <= 2c",
        ));
    }
    let inv = entropy_inv_decreasing(t * u / (u - c))?;
    Ok(c - inv.value() * (u - c))
}

/// `h^{-1}(2tu / (u - m_s)) (u - m_s) / 2` on the decreasing branch: the
/// relative size of the overlap blocks in the second bound.
pub fn a_value<R: Real>(u: UnitReal<R>, t: R, m_s: R) -> Result<R, BoundsError> {
    let u = u.value();
    if !(m_s >= R::zero() && m_s < u) {
        return Err(BoundsError::Precondition(
            "intersection size must lie in [0, u)",
        ));
    }
    let inv = entropy_inv_decreasing(R::of(2.0) * t * u / (u - m_s))?;
    Ok(inv.value() * (u - m_s) / R::of(2.0))
}

/// The sparse-union exponent. With `x = h^{-1}(t)` on the increasing
/// branch and `A = h^{-1}(2t / (1-x)) (u/2)(1-x)` on the decreasing one,
/// the value is `h(A) - A + (u/2)(1 - x - 2t)`. Requires `2t <= 1 - x`.
pub fn second_bound<R: Real>(u: UnitReal<R>, t: R) -> Result<R, BoundsError> {
    let x = entropy_inv_increasing(t)?.value();
    let rest = R::one() - x;
    let two_t = R::of(2.0) * t;
    if two_t > rest {
        return Err(BoundsError::Precondition(
            "second bound needs 2t <= 1 - h_inv(t)",
        ));
    }
    let half = u.value() / R::of(2.0) * rest;
    let a = entropy_inv_decreasing(two_t / rest)?.value() * half;
    Ok(entropy_at(a) - a + u.value() / R::of(2.0) * (rest - two_t))
}

/// Numeric tolerances pinned by the acceptance checks.
pub mod tolerances {
    /// Exponent threshold every staircase point must stay under.
    pub const STAIRCASE_THRESHOLD: f64 = 1.1922;
    /// Minimal slack required between a point value and the threshold.
    pub const STAIRCASE_MARGIN: f64 = 1e-6;
    /// Growth base the certified staircase bound must not exceed.
    pub const STAIRCASE_TARGET_BASE: f64 = 2.284;
    /// Admissible window for the f-exponent root.
    pub const F_EXPONENT_WINDOW: (f64, f64) = (0.4515, 0.4535);
    /// Cap on `2^s` for the f-exponent.
    pub const F_BASE_CAP: f64 = 1.3685 + 1e-4;
    /// Allowed distance between the narrow rectangle's top edge and the
    /// f-exponent root.
    pub const NARROW_TOP_SLACK: f64 = 5e-4;
}
