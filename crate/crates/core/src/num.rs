//! Scalar abstraction for the numeric kernels.
//!
//! Formula evaluation, rank correlation, and the regression solver are
//! generic over [`Real`] so they can run in `f32` or `f64`. The crate root
//! exports `f64` aliases, which is what the CLI and benchmark harness use.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FromPrimitive, NumAssignOps};

/// Floating-point scalar: `f32` or `f64`.
pub trait Real:
    Float + FromPrimitive + NumAssignOps + Sum + Debug + Display + Send + Sync + 'static
{
    /// Conversion from a count.
    fn from_count(n: usize) -> Self {
        Self::from_usize(n).expect("count representable as float")
    }

    /// Widening conversion to `f64` for reporting.
    fn to_f64_lossy(self) -> f64 {
        self.to_f64().expect("finite float widens to f64")
    }
}

impl Real for f32 {}
impl Real for f64 {}
