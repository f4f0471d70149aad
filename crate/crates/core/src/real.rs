//! Scalar abstraction for the numeric bound machinery.

use std::fmt::{Debug, Display};

use num_traits::{Float, FromPrimitive};

/// Floating-point scalar the bound functions are generic over.
///
/// Implemented for `f32` and `f64`. The staircase certification needs `f64`
/// to meet its pinned tolerances; `f32` is fine for coarse evaluation.
pub trait Real: Float + FromPrimitive + Debug + Display + Send + Sync + 'static {
    /// Lossless-enough conversion from an `f64` constant.
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("finite f64 constant")
    }
}

impl Real for f32 {}
impl Real for f64 {}
