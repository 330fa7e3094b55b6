//! The scalar abstraction shared by polynomials, expressions and octonions.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::{BigRational, Ratio};
use num_traits::{Num, One, Zero};

/// A commutative ring element that can also represent small rationals.
///
/// Exact types (`BigRational`, `Complex<BigRational>`, polynomials over them)
/// compare structurally. The float impls exist for quick numerical
/// experiments and are never used by the verifiers.
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// The value `num / den`. `den` must be nonzero.
    fn from_ratio(num: i64, den: i64) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_ratio(n, 1)
    }
}

macro_rules! float_scalar {
    ($($t:ty),*) => {$(
        impl Scalar for $t {
            fn from_ratio(num: i64, den: i64) -> Self {
                num as $t / den as $t
            }
        }
    )*};
}

float_scalar!(f32, f64);

impl Scalar for BigRational {
    fn from_ratio(num: i64, den: i64) -> Self {
        Ratio::new(BigInt::from(num), BigInt::from(den))
    }
}

impl Scalar for Ratio<i64> {
    fn from_ratio(num: i64, den: i64) -> Self {
        Ratio::new(num, den)
    }
}

impl<T> Scalar for Complex<T>
where
    T: Scalar + Num,
{
    fn from_ratio(num: i64, den: i64) -> Self {
        Complex::new(T::from_ratio(num, den), T::zero())
    }
}

/// Gaussian rational `re + im·i` built from small integer parts.
pub fn gaussian(re: i64, im: i64) -> crate::GaussianRational {
    Complex::new(BigRational::from_int(re), BigRational::from_int(im))
}

/// The imaginary unit.
pub fn imag_unit() -> crate::GaussianRational {
    gaussian(0, 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn imaginary_unit_squares_to_minus_one() {
        let i = imag_unit();
        assert_eq!(i.clone() * i, gaussian(-1, 0));
    }

    #[test]
    fn ratios_are_reduced() {
        assert_eq!(BigRational::from_ratio(2, 4), BigRational::from_ratio(-1, -2));
        assert_eq!(<Complex<BigRational>>::from_ratio(3, 6), Complex::new(BigRational::from_ratio(1, 2), BigRational::zero()));
    }

    #[test]
    fn conjugate_pair_sums_to_two() {
        assert_eq!(gaussian(1, 1) + gaussian(1, -1), gaussian(2, 0));
        assert_eq!(gaussian(1, 1) * gaussian(1, -1), gaussian(2, 0));
    }
}
