//! Scalar abstraction shared by every numeric routine in the crate.

use std::fmt::{Debug, Display};

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive};

/// Real floating point type the matrix code is generic over: `f32` or `f64`.
///
/// The associated tolerances scale with the precision of the type; the `f64`
/// values are the ones the file formats and CLI use.
pub trait Real:
    Float + FloatConst + FromPrimitive + Debug + Display + Default + Send + Sync + 'static
{
    /// Allowed deviation of `‖z̃‖` from one for a block module.
    const UNIT_NORM_TOL: Self;
    /// Maximum `unitary_error` accepted as input to decomposition.
    const UNITARY_INPUT_TOL: Self;
    /// Distance of `|U_nn|` from 0 or 1 below which a peel is degenerate.
    const DEGENERACY_TOL: Self;
    /// Threshold on `verify_recipe` errors.
    const RECIPE_TOL: Self;

    /// Lossy conversion from an `f64` literal.
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable in scalar type")
    }

    fn count(k: usize) -> Self {
        <Self as FromPrimitive>::from_usize(k).expect("index representable in scalar type")
    }
}

impl Real for f64 {
    const UNIT_NORM_TOL: Self = 1e-12;
    const UNITARY_INPUT_TOL: Self = 1e-10;
    const DEGENERACY_TOL: Self = 1e-12;
    const RECIPE_TOL: Self = 1e-11;
}

impl Real for f32 {
    const UNIT_NORM_TOL: Self = 1e-5;
    const UNITARY_INPUT_TOL: Self = 1e-4;
    const DEGENERACY_TOL: Self = 1e-6;
    const RECIPE_TOL: Self = 1e-4;
}

/// `e^{iθ}`.
#[inline]
pub fn cis<T: Real>(theta: T) -> Complex<T> {
    Complex::new(theta.cos(), theta.sin())
}

/// Principal argument reported in `(−π, π]`; `arg(0) = 0`.
pub fn arg<T: Real>(z: Complex<T>) -> T {
    if z.re == T::zero() && z.im == T::zero() {
        return T::zero();
    }
    let a = z.im.atan2(z.re);
    if a <= -T::PI() {
        T::PI()
    } else {
        a
    }
}
