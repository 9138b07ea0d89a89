//! Log-Gamma over exact rational arguments with explicit sign tracking.
//!
//! For x >= 1/2 a Stirling series with exact Bernoulli coefficients is
//! used after shifting the argument up; below 1/2 the reflection formula
//! applies, with the sign of sin(pi x) decided exactly on the rational.

use std::sync::LazyLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::Real;
use crate::algebra::rational::{as_nonpos_integer, rat_int};
use crate::error::{Error, Result};

/// B_0, B_1, B_2, ... (B_1 = -1/2 convention), computed exactly from the
/// defining recurrence so no table can be mistyped.
static BERNOULLI: LazyLock<Vec<BigRational>> = LazyLock::new(|| {
    let n_max = 64usize;
    let mut b: Vec<BigRational> = Vec::with_capacity(n_max + 1);
    b.push(BigRational::one());
    for n in 1..=n_max {
        // sum_{k=0}^{n-1} C(n+1, k) B_k, then B_n = -sum / (n+1)
        let mut sum = BigRational::zero();
        let mut binom = BigInt::one(); // C(n+1, 0)
        for (k, bk) in b.iter().enumerate() {
            sum += BigRational::from_integer(binom.clone()) * bk;
            binom = binom * (n + 1 - k) / (k + 1);
        }
        b.push(-sum / rat_int(n as i64 + 1));
    }
    b
});

pub fn bernoulli(n: usize) -> &'static BigRational {
    &BERNOULLI[n]
}

/// ln Gamma(x) for x > 0 (real argument already converted).
pub fn ln_gamma_pos<R: Real>(x: R) -> R {
    let threshold = if R::MANTISSA_BITS <= 53 { 16.0 } else { 44.0 };
    let mut t = x;
    let mut shift_prod = R::one();
    let mut shifted = false;
    while t.to_f64() < threshold {
        shift_prod = shift_prod * t.clone();
        t = t + R::one();
        shifted = true;
    }
    // (t - 1/2) ln t - t + ln(2 pi)/2 + sum B_2j / (2j(2j-1) t^(2j-1))
    let ln_t = t.ln();
    let half = R::from_f64(0.5);
    let ln_two_pi = (R::pi() + R::pi()).ln();
    let mut acc = (t.clone() - half.clone()) * ln_t - t.clone() + half * ln_two_pi;
    let inv_t2 = R::one() / (t.clone() * t.clone());
    let mut tpow = R::one() / t; // t^-(2j-1)
    let eps = R::epsilon();
    for j in 1..=24usize {
        let coeff = R::from_rational(bernoulli(2 * j))
            / R::from_i64((2 * j * (2 * j - 1)) as i64);
        let term = coeff * tpow.clone();
        acc = acc.clone() + term.clone();
        if term.abs() < eps.clone() * acc.abs() {
            break;
        }
        tpow = tpow * inv_t2.clone();
    }
    if shifted {
        acc = acc - shift_prod.ln();
    }
    acc
}

/// |sin(pi r)| for an exact rational r in (0, 1/2], by Taylor series.
fn sinpi_unit<R: Real>(r: &BigRational) -> R {
    let x = R::from_rational(r) * R::pi();
    let x2 = -(x.clone() * x.clone());
    let mut term = x.clone();
    let mut sum = x;
    let mut k = 1i64;
    let eps = R::epsilon();
    loop {
        term = term * x2.clone() / R::from_i64((2 * k) * (2 * k + 1));
        sum = sum.clone() + term.clone();
        if term.abs() < eps.clone() * sum.abs() || k > 40 {
            break;
        }
        k += 1;
    }
    sum
}

/// Magnitude and sign of Gamma at an exact rational argument.
#[derive(Debug, Clone)]
pub struct SignedLnGamma<R> {
    pub ln_abs: R,
    pub sign: i8,
}

/// ln |Gamma(x)| with sign, for rational x; errors at non-positive integers.
pub fn ln_gamma_rational<R: Real>(x: &BigRational) -> Result<SignedLnGamma<R>> {
    if as_nonpos_integer(x).is_some() {
        return Err(Error::PoleAtPoint(format!(
            "Gamma({}) pole",
            crate::algebra::rational::format_rational(x)
        )));
    }
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    if *x >= half {
        return Ok(SignedLnGamma {
            ln_abs: ln_gamma_pos(R::from_rational(x)),
            sign: 1,
        });
    }
    // reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x), with 1-x >= 1/2
    let one_minus = BigRational::one() - x;
    let lg = ln_gamma_pos(R::from_rational(&one_minus));

    // reduce x mod 2 exactly to read off the sign of sin(pi x)
    let two = rat_int(2);
    let mut u = x % &two;
    if u.is_negative() {
        u += &two;
    }
    let sign = if u < BigRational::one() { 1i8 } else { -1i8 };
    // fold into (0, 1/2] for the series
    let mut v = if u >= BigRational::one() { u - BigRational::one() } else { u };
    if v > half {
        v = BigRational::one() - v;
    }
    let ln_sin = sinpi_unit::<R>(&v).ln();
    Ok(SignedLnGamma {
        ln_abs: R::pi().ln() - ln_sin - lg,
        sign,
    })
}

/// Gamma(x) as a signed value (convenience for tests and prefactors).
pub fn gamma_rational<R: Real>(x: &BigRational) -> Result<R> {
    let g = ln_gamma_rational::<R>(x)?;
    let v = g.ln_abs.exp();
    Ok(if g.sign < 0 { -v } else { v })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;
    use crate::real::DoubleDouble;

    #[test]
    fn bernoulli_small_values() {
        assert_eq!(*bernoulli(2), rat(1, 6));
        assert_eq!(*bernoulli(4), rat(-1, 30));
        assert_eq!(*bernoulli(12), rat(-691, 2730));
        assert_eq!(*bernoulli(3), rat(0, 1));
    }

    #[test]
    fn gamma_classical_values() {
        // Gamma(1/2) = sqrt(pi)
        let g: f64 = gamma_rational(&rat(1, 2)).unwrap();
        assert!((g - std::f64::consts::PI.sqrt()).abs() < 1e-14);
        // Gamma(5) = 24
        let g: f64 = gamma_rational(&rat_int(5)).unwrap();
        assert!((g - 24.0).abs() < 1e-12);
        // Gamma(1) = Gamma(2) = 1
        let g: f64 = gamma_rational(&rat_int(1)).unwrap();
        assert!((g - 1.0).abs() < 1e-14);
    }

    #[test]
    fn gamma_negative_arguments() {
        // Gamma(-1/2) = -2 sqrt(pi)
        let g: f64 = gamma_rational(&rat(-1, 2)).unwrap();
        assert!((g + 2.0 * std::f64::consts::PI.sqrt()).abs() < 1e-13);
        // Gamma(-3/2) = 4 sqrt(pi) / 3
        let g: f64 = gamma_rational(&rat(-3, 2)).unwrap();
        assert!((g - 4.0 * std::f64::consts::PI.sqrt() / 3.0).abs() < 1e-13);
    }

    #[test]
    fn gamma_pole_detected() {
        assert!(gamma_rational::<f64>(&rat_int(0)).is_err());
        assert!(gamma_rational::<f64>(&rat_int(-3)).is_err());
    }

    #[test]
    fn recurrence_holds_at_double_double() {
        // Gamma(x+1) = x Gamma(x) across positive and negative x,
        // including the sign through reflection
        for (p, q) in [(1i64, 3i64), (7, 2), (-5, 4), (-13, 3), (9, 8)] {
            let x = rat(p, q);
            let x1 = &x + rat_int(1);
            let g: DoubleDouble = gamma_rational(&x).unwrap();
            let g1: DoubleDouble = gamma_rational(&x1).unwrap();
            let rhs = DoubleDouble::from_rational(&x) * g;
            let diff = ((g1 - rhs) / g1).abs().to_f64();
            assert!(diff < 1e-28, "x={p}/{q}, rel diff={diff:e}");
        }
    }

    #[test]
    fn double_double_matches_f64() {
        for (p, q) in [(1i64, 2i64), (5, 3), (22, 7), (-7, 5)] {
            let x = rat(p, q);
            let a = ln_gamma_rational::<f64>(&x).unwrap();
            let b = ln_gamma_rational::<DoubleDouble>(&x).unwrap();
            assert_eq!(a.sign, b.sign);
            assert!((a.ln_abs - b.ln_abs.to_f64()).abs() < 1e-12 * (1.0 + a.ln_abs.abs()));
        }
    }
}
