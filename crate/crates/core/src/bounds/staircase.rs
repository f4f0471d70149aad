//! Staircase certification over a rectangle of `(u, t)` values.
//!
//! A staircase point carries exact rational coordinates and the bound it is
//! evaluated under. A second-bound point at `(u_i, t_i)` dominates the
//! quadrant `u <= u_i, t >= t_i` because twice the second bound grows with
//! `u` and shrinks with `t` there; a first-bound point dominates
//! `u >= u_i, t <= t_i` because the first bound grows with `t` and, to the
//! right of its peak, shrinks with `u`. Certification checks every point
//! against a threshold and then proves, by an exact rational sweep of the
//! cells induced by the point coordinates, that the quadrants tile the
//! whole rectangle.

use num_rational::Rational64;

use crate::bounds::{
    binary_entropy, first_bound, first_bound_peak, second_bound, solve_f_exponent, BoundsError,
    UnitReal,
};
use crate::real::Real;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    First,
    Second,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StaircasePoint {
    pub u: Rational64,
    pub t: Rational64,
    pub kind: BoundKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Rectangle {
    pub u_lo: Rational64,
    pub u_hi: Rational64,
    pub t_lo: Rational64,
    pub t_hi: Rational64,
}

impl Rectangle {
    pub fn new(
        u_lo: Rational64,
        u_hi: Rational64,
        t_lo: Rational64,
        t_hi: Rational64,
    ) -> Result<Self, BoundsError> {
        if u_lo < u_hi && t_lo < t_hi {
            Ok(Rectangle {
                u_lo,
                u_hi,
                t_lo,
                t_hi,
            })
        } else {
            Err(BoundsError::Precondition(
                "rectangle edges must be strictly ordered",
            ))
        }
    }

    pub fn contains(&self, u: Rational64, t: Rational64) -> bool {
        self.u_lo <= u && u <= self.u_hi && self.t_lo <= t && t <= self.t_hi
    }
}

fn r(numer: i64, denom: i64) -> Rational64 {
    Rational64::new(numer, denom)
}

/// The rectangle `[0.44, 0.71] x [0.36, 0.4525]` on which the staircase
/// runs; outside it the narrowing checks apply.
pub fn reference_rectangle() -> Rectangle {
    Rectangle::new(r(44, 100), r(71, 100), r(36, 100), r(4525, 10000)).expect("static rectangle")
}

/// The sixteen-step staircase: second- and first-bound points alternate
/// while `u` and `t` ratchet up from `(0.5893, 0.36)` to `(0.71, 0.4525)`.
pub fn staircase_16() -> Vec<StaircasePoint> {
    let coords: [(i64, i64, i64, i64); 16] = [
        (5893, 10000, 36, 100),
        (5893, 10000, 364, 1000),
        (599, 1000, 364, 1000),
        (599, 1000, 367, 1000),
        (607, 1000, 367, 1000),
        (607, 1000, 37, 100),
        (615, 1000, 37, 100),
        (615, 1000, 374, 1000),
        (627, 1000, 374, 1000),
        (627, 1000, 38, 100),
        (645, 1000, 38, 100),
        (645, 1000, 392, 1000),
        (688, 1000, 392, 1000),
        (688, 1000, 43, 100),
        (71, 100, 43, 100),
        (71, 100, 4525, 10000),
    ];
    coords
        .iter()
        .enumerate()
        .map(|(i, &(un, ud, tn, td))| StaircasePoint {
            u: r(un, ud),
            t: r(tn, td),
            kind: if i % 2 == 0 {
                BoundKind::Second
            } else {
                BoundKind::First
            },
        })
        .collect()
}

fn to_real<R: Real>(x: Rational64) -> R {
    R::of(*x.numer() as f64) / R::of(*x.denom() as f64)
}

#[derive(Debug, Clone, PartialEq)]
pub struct PointEvaluation<R: Real> {
    pub point: StaircasePoint,
    /// The doubled second bound or the first bound at the point.
    pub value: R,
    /// `threshold - value`.
    pub margin: R,
}

/// An uncovered cell of the rational sweep, `(u, t)` intervals.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoverageGap {
    pub u: (Rational64, Rational64),
    pub t: (Rational64, Rational64),
}

#[derive(Debug, Clone, PartialEq)]
pub struct CertificationReport<R: Real> {
    pub threshold: R,
    pub required_margin: R,
    pub rectangle: Rectangle,
    pub points: Vec<PointEvaluation<R>>,
    pub coverage_complete: bool,
    pub gaps: Vec<CoverageGap>,
    /// Largest point value; the exponent the staircase actually proves.
    pub achieved: R,
    /// `2^achieved`: the certified growth base.
    pub derived_bound: R,
    /// `2^threshold`, for reference against the requested threshold.
    pub threshold_bound: R,
    pub verdict: bool,
}

impl<R: Real> CertificationReport<R> {
    pub fn min_margin(&self) -> Option<R> {
        self.points
            .iter()
            .map(|p| p.margin)
            .fold(None, |acc, m| match acc {
                Some(a) if a <= m => Some(a),
                _ => Some(m),
            })
    }

    /// Re-derives the verdict from the stored evidence and checks that the
    /// derived fields are consistent with it.
    pub fn revalidate(&self) -> bool {
        let consistent = self
            .points
            .iter()
            .all(|p| p.margin == self.threshold - p.value && p.value <= self.achieved)
            && self.coverage_complete == self.gaps.is_empty()
            && self.derived_bound == self.achieved.exp2();
        let margins_ok = self
            .points
            .iter()
            .all(|p| p.margin >= self.required_margin);
        consistent && self.verdict == (margins_ok && self.coverage_complete)
    }
}

/// Certifies that the staircase keeps every point at least
/// `required_margin` under `threshold` and that the point quadrants cover
/// the rectangle exactly. Preconditions: every point lies in the
/// rectangle, and every first-bound point sits at or beyond the peak
/// abscissa for the rectangle's top density, so that its bound really
/// decreases across its quadrant.
pub fn certify_staircase<R: Real>(
    points: &[StaircasePoint],
    rect: &Rectangle,
    threshold: R,
    required_margin: R,
) -> Result<CertificationReport<R>, BoundsError> {
    for (index, p) in points.iter().enumerate() {
        if !rect.contains(p.u, p.t) {
            return Err(BoundsError::PointOutsideRectangle { index });
        }
    }
    let peak = first_bound_peak::<R>(to_real(rect.t_hi)).value();
    for (index, p) in points.iter().enumerate() {
        if p.kind == BoundKind::First && to_real::<R>(p.u) < peak {
            return Err(BoundsError::PeakPrecondition { index });
        }
    }

    let mut evaluations = Vec::with_capacity(points.len());
    let mut clear = true;
    let mut achieved = R::neg_infinity();
    for p in points {
        let u = UnitReal::new(to_real::<R>(p.u))?;
        let t = to_real::<R>(p.t);
        let value = match p.kind {
            BoundKind::Second => R::of(2.0) * second_bound(u, t)?,
            BoundKind::First => first_bound(u, t),
        };
        let margin = threshold - value;
        if margin < required_margin {
            clear = false;
        }
        if value > achieved {
            achieved = value;
        }
        evaluations.push(PointEvaluation {
            point: *p,
            value,
            margin,
        });
    }

    let gaps = coverage_gaps(points, rect);
    let coverage_complete = gaps.is_empty();
    Ok(CertificationReport {
        threshold,
        required_margin,
        rectangle: *rect,
        points: evaluations,
        coverage_complete,
        gaps,
        achieved,
        derived_bound: achieved.exp2(),
        threshold_bound: threshold.exp2(),
        verdict: clear && coverage_complete,
    })
}

/// Exact coverage sweep. The grid is induced by the point coordinates, so
/// every quadrant boundary lies on a grid line; a cell therefore either
/// sits wholly inside a quadrant or misses its interior, and per-cell
/// containment by a single quadrant decides coverage exactly.
fn coverage_gaps(points: &[StaircasePoint], rect: &Rectangle) -> Vec<CoverageGap> {
    let mut us = vec![rect.u_lo, rect.u_hi];
    let mut ts = vec![rect.t_lo, rect.t_hi];
    us.extend(points.iter().map(|p| p.u));
    ts.extend(points.iter().map(|p| p.t));
    us.sort();
    us.dedup();
    ts.sort();
    ts.dedup();

    let mut gaps = Vec::new();
    for w in us.windows(2) {
        for v in ts.windows(2) {
            let covered = points.iter().any(|p| match p.kind {
                BoundKind::Second => w[1] <= p.u && v[0] >= p.t,
                BoundKind::First => w[0] >= p.u && v[1] <= p.t,
            });
            if !covered {
                gaps.push(CoverageGap {
                    u: (w[0], w[1]),
                    t: (v[0], v[1]),
                });
            }
        }
    }
    gaps
}

/// Why the rectangle suffices. Below the bottom edge the first bound is
/// at most its peak value at `t_lo`; left and right of the vertical edges
/// it is at most its value on the edge at the top density, the peak lying
/// between the edges; and densities above the top edge are ruled out by
/// the solution-count exponent, provided the top edge sits within
/// `top_slack` of that root.
#[derive(Debug, Clone, PartialEq)]
pub struct NarrowingReport<R: Real> {
    pub bottom_value: R,
    pub bottom_clear: bool,
    pub left_value: R,
    pub right_value: R,
    pub sides_clear: bool,
    pub top_gap: R,
    pub top_clear: bool,
    pub verdict: bool,
}

pub fn narrow_rectangle<R: Real>(
    rect: &Rectangle,
    threshold: R,
    top_slack: R,
) -> Result<NarrowingReport<R>, BoundsError> {
    let u_lo = UnitReal::new(to_real::<R>(rect.u_lo))?;
    let u_hi = UnitReal::new(to_real::<R>(rect.u_hi))?;
    let t_lo = to_real::<R>(rect.t_lo);
    let t_hi = to_real::<R>(rect.t_hi);

    let bottom_value = first_bound(first_bound_peak(t_lo), t_lo);
    let bottom_clear = bottom_value <= threshold;

    // The side bands inherit the edge values only while the peak stays
    // between the edges for every density in the band.
    let peaks_between = u_lo.value() <= first_bound_peak::<R>(t_lo).value()
        && first_bound_peak::<R>(t_hi).value() <= u_hi.value();
    let left_value = first_bound(u_lo, t_hi);
    let right_value = first_bound(u_hi, t_hi);
    let sides_clear = peaks_between && left_value <= threshold && right_value <= threshold;

    let top_gap = (t_hi - solve_f_exponent::<R>().s).abs();
    let top_clear = top_gap <= top_slack;

    Ok(NarrowingReport {
        bottom_value,
        bottom_clear,
        left_value,
        right_value,
        sides_clear,
        top_gap,
        top_clear,
        verdict: bottom_clear && sides_clear && top_clear,
    })
}

/// Entropy sandwich for a binomial tail: with `m = floor(k n)` and
/// `q = m / n`, checks `2^{h(q) n} / (n + 1) <= sum_{i<=m} C(n, i)
/// <= 2^{h(q) n}`, comparing in the log domain against the exact sum.
#[derive(Debug, Clone, PartialEq)]
pub struct BinomialSandwich {
    pub n: usize,
    pub cutoff: usize,
    pub rounded_ratio: f64,
    /// `h(cutoff / n) * n`.
    pub entropy_exponent: f64,
    /// `entropy_exponent - log2(n + 1)`.
    pub lower_log2: f64,
    /// Base-2 logarithm of the exact partial sum.
    pub sum_log2: f64,
    pub holds: bool,
}

pub fn binomial_tail_check(n: usize, k: f64) -> Result<BinomialSandwich, BoundsError> {
    if n == 0 || !k.is_finite() || k <= 0.0 || k > 0.5 {
        return Err(BoundsError::Precondition(
            "tail ratio must lie in (0, 1/2] over a nonempty ground set",
        ));
    }
    let cutoff = (k * n as f64).floor() as usize;
    if cutoff == 0 {
        return Err(BoundsError::Precondition(
            "tail must contain at least the singletons",
        ));
    }
    let rounded_ratio = cutoff as f64 / n as f64;
    let entropy_exponent = binary_entropy(UnitReal::new(rounded_ratio)?) * n as f64;
    let lower_log2 = entropy_exponent - ((n + 1) as f64).log2();

    let mut sum = num_bigint::BigUint::from(0u8);
    for i in 0..=cutoff {
        sum += num_integer::binomial(num_bigint::BigUint::from(n), num_bigint::BigUint::from(i));
    }
    let sum_log2 = crate::stats::log2_biguint(&sum);

    Ok(BinomialSandwich {
        n,
        cutoff,
        rounded_ratio,
        entropy_exponent,
        lower_log2,
        sum_log2,
        holds: lower_log2 <= sum_log2 && sum_log2 <= entropy_exponent,
    })
}
