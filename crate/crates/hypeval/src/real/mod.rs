//! Floating-point abstraction for the numeric engine.
//!
//! Everything numeric is generic over [`Real`], instantiated with `f64`
//! (53-bit mantissa, the default) or [`DoubleDouble`] (106-bit) when the
//! tighter acceptance tolerances ask for more headroom.

pub mod dd;
pub mod gamma;

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;

pub use dd::DoubleDouble;

pub trait Real:
    Clone
    + Debug
    + PartialOrd
    + PartialEq
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    /// Mantissa bits, used to pick summation cutoffs.
    const MANTISSA_BITS: u32;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn from_f64(x: f64) -> Self;
    fn to_f64(&self) -> f64;
    fn abs(&self) -> Self;
    fn sqrt(&self) -> Self;
    fn exp(&self) -> Self;
    fn ln(&self) -> Self;
    fn pi() -> Self;
    /// 2^(1 - MANTISSA_BITS)
    fn epsilon() -> Self;
    fn is_finite(&self) -> bool;

    /// Exact-as-possible conversion from a big integer.
    fn from_bigint(n: &BigInt) -> Self {
        let (sign, digits) = n.to_u32_digits();
        let base = Self::from_f64(4294967296.0);
        let mut acc = Self::zero();
        for d in digits.iter().rev() {
            acc = acc * base.clone() + Self::from_f64(*d as f64);
        }
        if sign == Sign::Minus {
            -acc
        } else {
            acc
        }
    }

    /// Conversion from an exact rational (one rounding at the division).
    fn from_rational(r: &BigRational) -> Self {
        Self::from_bigint(r.numer()) / Self::from_bigint(r.denom())
    }

    /// Integer power by repeated squaring.
    fn powi(&self, e: i64) -> Self {
        let mut base = if e < 0 {
            Self::one() / self.clone()
        } else {
            self.clone()
        };
        let mut k = e.unsigned_abs();
        let mut acc = Self::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc * base.clone();
            }
            base = base.clone() * base;
            k >>= 1;
        }
        acc
    }

    fn max_val(a: Self, b: Self) -> Self {
        if a >= b {
            a
        } else {
            b
        }
    }
}

impl Real for f64 {
    const MANTISSA_BITS: u32 = 53;

    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_i64(n: i64) -> Self {
        n as f64
    }
    fn from_f64(x: f64) -> Self {
        x
    }
    fn to_f64(&self) -> f64 {
        *self
    }
    fn abs(&self) -> Self {
        f64::abs(*self)
    }
    fn sqrt(&self) -> Self {
        f64::sqrt(*self)
    }
    fn exp(&self) -> Self {
        f64::exp(*self)
    }
    fn ln(&self) -> Self {
        f64::ln(*self)
    }
    fn pi() -> Self {
        std::f64::consts::PI
    }
    fn epsilon() -> Self {
        f64::EPSILON
    }
    fn is_finite(&self) -> bool {
        f64::is_finite(*self)
    }
}

/// Runtime selection of the working mantissa.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FloatMode {
    F64,
    Dd,
}

impl FloatMode {
    /// Map a requested mantissa width in bits onto an available backend.
    pub fn from_bits(bits: u32) -> FloatMode {
        if bits <= 53 {
            FloatMode::F64
        } else {
            FloatMode::Dd
        }
    }

    pub fn bits(&self) -> u32 {
        match self {
            FloatMode::F64 => 53,
            FloatMode::Dd => 106,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;
    use num_traits::One;

    #[test]
    fn rational_conversion_is_accurate() {
        let r = rat(1, 3);
        assert!((f64::from_rational(&r) - 1.0 / 3.0).abs() < 1e-16);
        let big = BigRational::new(
            BigInt::from(123456789012345678i64),
            BigInt::one(),
        );
        assert_eq!(f64::from_bigint(big.numer()), 123456789012345678.0_f64);
    }

    #[test]
    fn powi_matches_std() {
        assert_eq!(2.0f64.powi(10), Real::powi(&2.0f64, 10));
        assert!((Real::powi(&2.0f64, -3) - 0.125).abs() < 1e-18);
    }
}
