//! Arbitrary-precision rationals: construction helpers, literal parsing
//! and a few integer-valued predicates used throughout the crate.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// `p/q` as an exact rational.
pub fn rat(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// Integer as an exact rational.
pub fn rat_int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Exact factorial, `n >= 0`.
pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= k;
    }
    acc
}

/// `1/m!` with the reciprocal-factorial convention: zero for negative `m`.
pub fn inv_factorial(m: i64) -> BigRational {
    if m < 0 {
        BigRational::zero()
    } else {
        BigRational::new(BigInt::one(), factorial(m as u64))
    }
}

/// Exact integer power with negative exponents allowed (`base != 0` then).
pub fn rat_pow(base: &BigRational, exp: i64) -> BigRational {
    if exp >= 0 {
        num_traits::pow::pow(base.clone(), exp as usize)
    } else {
        num_traits::pow::pow(base.clone(), (-exp) as usize).recip()
    }
}

/// If `v` is an integer, return it (when it fits in i64).
pub fn as_integer(v: &BigRational) -> Option<i64> {
    if v.is_integer() {
        v.numer().to_i64()
    } else {
        None
    }
}

/// If `v` is a non-positive integer `-m`, return `m >= 0`.
pub fn as_nonpos_integer(v: &BigRational) -> Option<u64> {
    match as_integer(v) {
        Some(n) if n <= 0 => Some((-n) as u64),
        _ => None,
    }
}

/// Distance from `v` to the nearest non-positive integer (as f64).
pub fn dist_to_nonpos_integer(v: &BigRational) -> f64 {
    let x = v.to_f64().unwrap_or(f64::NAN);
    if x >= 0.0 {
        x.min((x - x.round()).abs().min(x))
    } else {
        (x - x.round()).abs()
    }
}

/// Parse a rational literal: `p/q` with optional sign, an integer, or a
/// decimal string converted exactly (`0.25` -> 1/4).
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let t = s.trim();
    if t.is_empty() {
        return Err(Error::Parse("empty rational literal".into()));
    }
    if let Some((num, den)) = t.split_once('/') {
        let n: BigInt = num
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad numerator in `{t}`")))?;
        let d: BigInt = den
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad denominator in `{t}`")))?;
        if d.is_zero() {
            return Err(Error::Parse(format!("zero denominator in `{t}`")));
        }
        return Ok(BigRational::new(n, d));
    }
    if let Some((int_part, frac_part)) = t.split_once('.') {
        let (sign, int_digits) = match int_part.trim() {
            s if s.starts_with('-') => (-1, &s[1..]),
            s if s.starts_with('+') => (1, &s[1..]),
            s => (1, s),
        };
        let int_digits = if int_digits.is_empty() { "0" } else { int_digits };
        let ip: BigInt = int_digits
            .parse()
            .map_err(|_| Error::Parse(format!("bad integer part in `{t}`")))?;
        let fp: BigInt = if frac_part.is_empty() {
            BigInt::zero()
        } else {
            frac_part
                .parse()
                .map_err(|_| Error::Parse(format!("bad fractional part in `{t}`")))?
        };
        if fp.is_negative() {
            return Err(Error::Parse(format!("bad fractional part in `{t}`")));
        }
        let scale = num_traits::pow::pow(BigInt::from(10), frac_part.len());
        let v = BigRational::new(ip * &scale + fp, scale);
        return Ok(if sign < 0 { -v } else { v });
    }
    let n: BigInt = t
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational literal `{t}`")))?;
    Ok(BigRational::from_integer(n))
}

/// Format as `p/q`, or `p` when the denominator is one.
pub fn format_rational(v: &BigRational) -> String {
    if v.denom().is_one() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fraction_and_decimal() {
        assert_eq!(parse_rational("3/4").unwrap(), rat(3, 4));
        assert_eq!(parse_rational("-3/4").unwrap(), rat(-3, 4));
        assert_eq!(parse_rational("0.25").unwrap(), rat(1, 4));
        assert_eq!(parse_rational("-1.5").unwrap(), rat(-3, 2));
        assert_eq!(parse_rational("7").unwrap(), rat_int(7));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn nonpos_integer_detection() {
        assert_eq!(as_nonpos_integer(&rat_int(0)), Some(0));
        assert_eq!(as_nonpos_integer(&rat_int(-4)), Some(4));
        assert_eq!(as_nonpos_integer(&rat_int(2)), None);
        assert_eq!(as_nonpos_integer(&rat(-1, 2)), None);
    }

    #[test]
    fn inv_factorial_convention() {
        assert_eq!(inv_factorial(-1), BigRational::zero());
        assert_eq!(inv_factorial(0), rat_int(1));
        assert_eq!(inv_factorial(4), rat(1, 24));
    }
}
