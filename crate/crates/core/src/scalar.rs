//! Scalar abstraction: every numeric kernel in this crate is generic over the
//! real floating-point type through [`Real`]. Concrete aliases for the `f64`
//! instantiation live at the crate root.

use std::fmt::{Debug, Display, LowerExp};
use std::iter::Sum;

use num_complex::Complex;
use num_traits::{Float, FromPrimitive, NumAssign};

/// Real scalar: f32 or f64.
pub trait Real:
    Float + FromPrimitive + NumAssign + Sum + Debug + Display + LowerExp + Send + Sync + 'static
{
    /// Lossy conversion from `f64` literals (tolerances, gate angles, ...).
    fn of(v: f64) -> Self {
        Self::from_f64(v).expect("f64 literal must convert to the scalar type")
    }

    fn to_f64_lossy(self) -> f64;
}

impl Real for f64 {
    fn to_f64_lossy(self) -> f64 {
        self
    }
}

impl Real for f32 {
    fn to_f64_lossy(self) -> f64 {
        self as f64
    }
}

/// Complex number over the crate scalar.
pub type C<T> = Complex<T>;

pub fn c_zero<T: Real>() -> C<T> {
    Complex::new(T::zero(), T::zero())
}

pub fn c_one<T: Real>() -> C<T> {
    Complex::new(T::one(), T::zero())
}

pub fn c_i<T: Real>() -> C<T> {
    Complex::new(T::zero(), T::one())
}

/// Coefficients with magnitude below this are dropped when Pauli sums are
/// assembled; removes encoding round-off without touching physical terms.
pub fn default_drop_tolerance<T: Real>() -> T {
    T::of(1e-12)
}
