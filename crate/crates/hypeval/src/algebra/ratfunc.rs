//! Rational functions in {a, b, c}: quotients of sparse polynomials.
//!
//! Normalization divides out common monomial content and makes the
//! denominator monic under the fixed monomial order. Full multivariate
//! gcd reduction is deliberately not performed; equality is decided by
//! cross-multiplication.

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::linform::LinearForm;
use super::poly::{MultiPoly, Point, Sym};
use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct RatFunc {
    num: MultiPoly,
    den: MultiPoly,
}

impl RatFunc {
    /// Build `num/den`, normalizing; rejects a zero denominator.
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RatFunc {
                num: MultiPoly::zero(),
                den: MultiPoly::one(),
            });
        }
        // strip the monomial content shared by numerator and denominator
        let en = num.min_exponents();
        let ed = den.min_exponents();
        let common = [en[0].min(ed[0]), en[1].min(ed[1]), en[2].min(ed[2])];
        let (mut num, mut den) = if common != [0, 0, 0] {
            (num.shift_down(common), den.shift_down(common))
        } else {
            (num, den)
        };
        // monic denominator
        let lc = den.leading().expect("nonzero").1.clone();
        if !lc.is_one() {
            let inv = lc.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        Ok(RatFunc { num, den })
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        RatFunc::new(p, MultiPoly::one()).expect("unit denominator")
    }

    pub fn from_rational(c: BigRational) -> Self {
        RatFunc::from_poly(MultiPoly::constant(c))
    }

    pub fn from_int(n: i64) -> Self {
        RatFunc::from_rational(super::rational::rat_int(n))
    }

    pub fn from_linear(f: &LinearForm) -> Self {
        RatFunc::from_poly(f.to_poly())
    }

    pub fn symbol(s: Sym) -> Self {
        RatFunc::from_poly(MultiPoly::symbol(s))
    }

    pub fn zero() -> Self {
        RatFunc::from_poly(MultiPoly::zero())
    }

    pub fn one() -> Self {
        RatFunc::from_poly(MultiPoly::one())
    }

    pub fn numerator(&self) -> &MultiPoly {
        &self.num
    }

    pub fn denominator(&self) -> &MultiPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Constant value if both numerator and denominator are constants.
    pub fn as_constant(&self) -> Option<BigRational> {
        match (self.num.is_constant(), self.den.is_constant()) {
            (Some(n), Some(d)) => Some(n / d),
            _ => None,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let num = self
            .num
            .mul(&other.den)
            .add(&other.num.mul(&self.den));
        let den = self.den.mul(&other.den);
        RatFunc::new(num, den).expect("nonzero denominators")
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        RatFunc::new(self.num.mul(&other.num), self.den.mul(&other.den))
            .expect("nonzero denominators")
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        RatFunc::new(self.num.mul(&other.den), self.den.mul(&other.num))
    }

    pub fn recip(&self) -> Result<Self> {
        RatFunc::one().div(self)
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        RatFunc::new(self.num.scale(k), self.den.clone()).expect("nonzero denominator")
    }

    /// Integer power; negative exponents require a nonzero function.
    pub fn pow_i(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.recip()? } else { self.clone() };
        let mut acc = RatFunc::one();
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    /// Equality by cross-multiplication.
    pub fn equal(&self, other: &Self) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }

    /// Exact evaluation; `PoleAtPoint` when the denominator vanishes.
    pub fn eval(&self, p: &Point) -> Result<BigRational> {
        let d = self.den.eval(p);
        if d.is_zero() {
            return Err(Error::PoleAtPoint(format!(
                "denominator {} vanishes",
                self.den
            )));
        }
        Ok(self.num.eval(p) / d)
    }

    /// Substitute symbols by polynomials; fails if the denominator
    /// collapses to zero.
    pub fn subst(&self, images: &[MultiPoly; 3]) -> Result<Self> {
        RatFunc::new(self.num.subst(images), self.den.subst(images))
    }

    /// Substitute a single symbol, leaving the others fixed.
    pub fn subst_symbol(&self, s: Sym, image: &MultiPoly) -> Result<Self> {
        let mut images = [
            MultiPoly::symbol(Sym::A),
            MultiPoly::symbol(Sym::B),
            MultiPoly::symbol(Sym::C),
        ];
        images[s.index()] = image.clone();
        self.subst(&images)
    }
}

impl PartialEq for RatFunc {
    fn eq(&self, other: &Self) -> bool {
        self.equal(other)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant().is_some_and(|c| c.is_one()) {
            if self.num.num_terms() > 1 {
                write!(f, "({})", self.num)
            } else {
                write!(f, "{}", self.num)
            }
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}
