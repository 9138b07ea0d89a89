//! Double-double arithmetic: an unevaluated sum of two f64 giving a
//! 106-bit mantissa. Classic error-free transformations (two-sum,
//! two-product with FMA) plus exp/ln built from argument reduction,
//! Taylor series and Newton refinement.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::Real;

#[derive(Clone, Copy, PartialEq)]
pub struct DoubleDouble {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, f64::mul_add(a, b, -p))
}

impl DoubleDouble {
    pub const ZERO: DoubleDouble = DoubleDouble { hi: 0.0, lo: 0.0 };
    pub const ONE: DoubleDouble = DoubleDouble { hi: 1.0, lo: 0.0 };
    pub const PI: DoubleDouble = DoubleDouble {
        hi: 3.141592653589793,
        lo: 1.2246467991473532e-16,
    };
    pub const LN2: DoubleDouble = DoubleDouble {
        hi: 0.6931471805599453,
        lo: 2.3190468138462996e-17,
    };

    pub fn new(hi: f64, lo: f64) -> Self {
        let (s, e) = quick_two_sum(hi, lo);
        DoubleDouble { hi: s, lo: e }
    }

    pub fn from_f64(x: f64) -> Self {
        DoubleDouble { hi: x, lo: 0.0 }
    }

    fn mul_f64(self, f: f64) -> Self {
        let (p, e) = two_prod(self.hi, f);
        let (s, e2) = quick_two_sum(p, e + self.lo * f);
        DoubleDouble { hi: s, lo: e2 }
    }

    /// Multiply by 2^k exactly.
    fn ldexp(self, k: i32) -> Self {
        let f = libm_exp2(k);
        DoubleDouble {
            hi: self.hi * f,
            lo: self.lo * f,
        }
    }
}

/// Exact power of two as f64 (|k| <= 1023).
fn libm_exp2(k: i32) -> f64 {
    f64::from_bits(((1023 + k) as u64) << 52)
}

impl Add for DoubleDouble {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let (s1, s2) = two_sum(self.hi, rhs.hi);
        let (t1, t2) = two_sum(self.lo, rhs.lo);
        let (s1b, s2b) = quick_two_sum(s1, s2 + t1);
        let (hi, lo) = quick_two_sum(s1b, s2b + t2);
        DoubleDouble { hi, lo }
    }
}

impl Sub for DoubleDouble {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for DoubleDouble {
    type Output = Self;
    fn neg(self) -> Self {
        DoubleDouble {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}

impl Mul for DoubleDouble {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let (p, e) = two_prod(self.hi, rhs.hi);
        let e = e + (self.hi * rhs.lo + self.lo * rhs.hi);
        let (hi, lo) = quick_two_sum(p, e);
        DoubleDouble { hi, lo }
    }
}

impl Div for DoubleDouble {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        let q1 = self.hi / rhs.hi;
        if !q1.is_finite() {
            return DoubleDouble::from_f64(q1);
        }
        let r = self - rhs.mul_f64(q1);
        let q2 = r.hi / rhs.hi;
        let r2 = r - rhs.mul_f64(q2);
        let q3 = r2.hi / rhs.hi;
        let (s, e) = quick_two_sum(q1, q2);
        let (hi, lo) = quick_two_sum(s, e + q3);
        DoubleDouble { hi, lo }
    }
}

impl PartialOrd for DoubleDouble {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        match self.hi.partial_cmp(&other.hi) {
            Some(std::cmp::Ordering::Equal) => self.lo.partial_cmp(&other.lo),
            ord => ord,
        }
    }
}

impl fmt::Debug for DoubleDouble {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "dd({:e} + {:e})", self.hi, self.lo)
    }
}

impl fmt::Display for DoubleDouble {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.hi)
    }
}

impl Real for DoubleDouble {
    const MANTISSA_BITS: u32 = 106;

    fn zero() -> Self {
        Self::ZERO
    }
    fn one() -> Self {
        Self::ONE
    }

    fn from_i64(n: i64) -> Self {
        let hi = n as f64;
        let lo = (n - hi as i64) as f64;
        DoubleDouble::new(hi, lo)
    }

    fn from_f64(x: f64) -> Self {
        DoubleDouble::from_f64(x)
    }

    fn to_f64(&self) -> f64 {
        self.hi + self.lo
    }

    fn abs(&self) -> Self {
        if self.hi < 0.0 || (self.hi == 0.0 && self.lo < 0.0) {
            -*self
        } else {
            *self
        }
    }

    fn sqrt(&self) -> Self {
        if self.hi < 0.0 {
            return DoubleDouble::from_f64(f64::NAN);
        }
        if self.hi == 0.0 {
            return Self::ZERO;
        }
        // one Newton step on a f64 seed doubles the accurate bits
        let y = DoubleDouble::from_f64(self.hi.sqrt());
        let half = DoubleDouble::from_f64(0.5);
        let y = (y + *self / y) * half;
        (y + *self / y) * half
    }

    fn exp(&self) -> Self {
        if self.hi > 709.0 {
            return DoubleDouble::from_f64(f64::INFINITY);
        }
        if self.hi < -709.0 {
            return Self::ZERO;
        }
        // x = k ln2 + r, |r| <= ln2/2; e^x = 2^k e^r
        let k = (self.hi / Self::LN2.hi).round();
        let r = *self - Self::LN2.mul_f64(k);
        let mut term = r;
        let mut sum = Self::ONE + r;
        let mut i = 2i64;
        loop {
            term = term * r / Self::from_i64(i);
            sum = sum + term;
            if term.hi.abs() < 1e-35 * sum.hi.abs() || i > 40 {
                break;
            }
            i += 1;
        }
        sum.ldexp(k as i32)
    }

    fn ln(&self) -> Self {
        if self.hi <= 0.0 {
            return DoubleDouble::from_f64(f64::NAN);
        }
        // Newton on exp(y) = x from a f64 seed: y += x e^{-y} - 1
        let mut y = DoubleDouble::from_f64(self.hi.ln());
        for _ in 0..2 {
            let corr = *self * (-y).exp() - Self::ONE;
            y = y + corr;
        }
        y
    }

    fn pi() -> Self {
        Self::PI
    }

    fn epsilon() -> Self {
        DoubleDouble::from_f64(2.0f64.powi(-105))
    }

    fn is_finite(&self) -> bool {
        self.hi.is_finite()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // reference splits of well-known constants
    const E_HI: f64 = 2.718281828459045;
    const E_LO: f64 = 1.4456468917292502e-16;
    const LN2_LO: f64 = 2.3190468138462996e-17;

    fn close(x: DoubleDouble, hi: f64, lo: f64, tol: f64) {
        let d = x - DoubleDouble::new(hi, lo);
        assert!(
            d.hi.abs() < tol,
            "got {:?}, want {:e}+{:e}, diff {:e}",
            x,
            hi,
            lo,
            d.hi
        );
    }

    #[test]
    fn exp_one_is_e() {
        close(DoubleDouble::ONE.exp(), E_HI, E_LO, 1e-30);
    }

    #[test]
    fn ln_two() {
        close(
            DoubleDouble::from_f64(2.0).ln(),
            DoubleDouble::LN2.hi,
            LN2_LO,
            1e-31,
        );
    }

    #[test]
    fn exp_ln_roundtrip() {
        for &x in &[0.1, 0.75, 3.5, 17.0, 123.456] {
            let v = DoubleDouble::from_f64(x);
            let d = v.ln().exp() - v;
            assert!(d.hi.abs() < 1e-30 * x, "x={x}, diff={:e}", d.hi);
        }
    }

    #[test]
    fn sqrt_two_squared() {
        let s = DoubleDouble::from_f64(2.0).sqrt();
        let d = s * s - DoubleDouble::from_f64(2.0);
        assert!(d.hi.abs() < 1e-31);
    }

    #[test]
    fn division_accuracy() {
        let one_third = DoubleDouble::ONE / DoubleDouble::from_f64(3.0);
        let back = one_third * DoubleDouble::from_f64(3.0) - DoubleDouble::ONE;
        assert!(back.hi.abs() < 1e-32);
    }

    #[test]
    fn from_i64_exact() {
        let n = 123456789012345678i64;
        let v = <DoubleDouble as Real>::from_i64(n);
        assert_eq!(v.hi as i64 + v.lo as i64, n);
    }
}
