//! Scalar abstractions.
//!
//! Everything numeric in this crate is written against [`Real`] (f32 / f64)
//! or [`Scalar`] (a real or a [`Complex`] over a `Real`).

use std::fmt::{Debug, Display};
use std::iter::Sum;
use std::ops::Neg;

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive, NumAssign, One, ToPrimitive, Zero};

/// Floating-point field used for every real-valued computation.
pub trait Real:
    Scalar<Real = Self>
    + Float
    + FloatConst
    + FromPrimitive
    + ToPrimitive
    + NumAssign
    + Sum
    + Debug
    + Display
    + Default
    + Send
    + Sync
    + 'static
{
    /// Lossy conversion of an `f64` literal.
    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable")
    }

    /// Conversion of an integer.
    #[inline]
    fn of(n: i64) -> Self {
        Self::from_i64(n).expect("integer representable")
    }

    #[inline]
    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// Matrix entry type: a real or a complex number over some [`Real`].
pub trait Scalar:
    Copy + NumAssign + Neg<Output = Self> + Zero + One + Sum + Debug + Send + Sync + 'static
{
    type Real: Real;

    fn from_real(r: Self::Real) -> Self;
    fn conj(self) -> Self;
    fn re(self) -> Self::Real;
    fn im(self) -> Self::Real;
    fn abs_sqr(self) -> Self::Real;

    #[inline]
    fn modulus(self) -> Self::Real {
        self.abs_sqr().sqrt()
    }

    #[inline]
    fn scale(self, r: Self::Real) -> Self {
        self * Self::from_real(r)
    }

    #[inline]
    fn all_finite(self) -> bool {
        self.re().is_finite() && self.im().is_finite()
    }

    /// `true` when the type carries an imaginary part.
    const COMPLEX: bool;
}

macro_rules! real_scalar {
    ($($t:ty)*) => ($(
        impl Scalar for $t {
            type Real = $t;
            const COMPLEX: bool = false;
            #[inline] fn from_real(r: $t) -> $t { r }
            #[inline] fn conj(self) -> $t { self }
            #[inline] fn re(self) -> $t { self }
            #[inline] fn im(self) -> $t { 0.0 }
            #[inline] fn abs_sqr(self) -> $t { self * self }
            #[inline] fn modulus(self) -> $t { self.abs() }
        }
    )*)
}

real_scalar!(f32 f64);

impl<R: Real> Scalar for Complex<R> {
    type Real = R;
    const COMPLEX: bool = true;
    #[inline]
    fn from_real(r: R) -> Self {
        Complex::new(r, R::zero())
    }
    #[inline]
    fn conj(self) -> Self {
        Complex::conj(&self)
    }
    #[inline]
    fn re(self) -> R {
        self.re
    }
    #[inline]
    fn im(self) -> R {
        self.im
    }
    #[inline]
    fn abs_sqr(self) -> R {
        self.norm_sqr()
    }
    #[inline]
    fn modulus(self) -> R {
        self.norm()
    }
}
