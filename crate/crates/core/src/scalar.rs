//! Scalar abstraction: the whole library works over `f32` or `f64`.

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive, NumAssign};

/// Floating-point scalar the library is generic over.
pub trait Scalar:
    Float
    + FloatConst
    + FromPrimitive
    + NumAssign
    + std::iter::Sum
    + std::iter::Product
    + std::fmt::Debug
    + std::fmt::Display
    + std::fmt::LowerExp
    + Send
    + Sync
    + 'static
{
    /// Shorthand for converting an `f64` literal into the scalar type.
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("literal not representable in scalar type")
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}

/// Complex number over the library scalar.
pub type Cx<R> = Complex<R>;

pub fn cx<R: Scalar>(re: f64, im: f64) -> Cx<R> {
    Complex::new(R::of(re), R::of(im))
}
