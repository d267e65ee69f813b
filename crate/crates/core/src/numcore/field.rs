use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::{One, Zero};

use super::rational::Rational;

/// Commutative ring with identity, used as the coefficient type of [`super::Poly`].
pub trait Ring:
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
}

impl<T> Ring for T where
    T: Clone
        + Debug
        + PartialEq
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Neg<Output = T>
{
}

/// Scalars that every exact-or-floating routine can run on: [`Rational`],
/// `f64` and `Complex64`.
pub trait Field: Ring + Div<Output = Self> {
    fn from_rational(r: &Rational) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_rational(&Rational::from_integer(n))
    }

    /// Magnitude as a double, used only for error bounds and reporting.
    fn magnitude(&self) -> f64;

    /// `true` when every component is finite (always for exact scalars).
    fn is_finite_value(&self) -> bool {
        true
    }
}

impl Field for Rational {
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }

    fn from_i64(n: i64) -> Self {
        Rational::from_integer(n)
    }

    fn magnitude(&self) -> f64 {
        self.abs().to_f64()
    }
}

impl Field for f64 {
    fn from_rational(r: &Rational) -> Self {
        r.to_f64()
    }

    fn from_i64(n: i64) -> Self {
        n as f64
    }

    fn magnitude(&self) -> f64 {
        self.abs()
    }

    fn is_finite_value(&self) -> bool {
        self.is_finite()
    }
}

impl Field for Complex64 {
    fn from_rational(r: &Rational) -> Self {
        Complex64::new(r.to_f64(), 0.0)
    }

    fn from_i64(n: i64) -> Self {
        Complex64::new(n as f64, 0.0)
    }

    fn magnitude(&self) -> f64 {
        self.norm()
    }

    fn is_finite_value(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }
}
