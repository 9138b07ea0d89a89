//! Affine-linear forms q0 + qa*a + qb*b + qc*c with exact rational
//! coefficients: the argument type of Gamma factors and Pochhammer bases.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::{MultiPoly, Point, Sym};
use super::rational::{format_rational, parse_rational};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearForm {
    pub q0: BigRational,
    pub qa: BigRational,
    pub qb: BigRational,
    pub qc: BigRational,
}

impl LinearForm {
    pub fn constant(q0: BigRational) -> Self {
        LinearForm {
            q0,
            qa: BigRational::zero(),
            qb: BigRational::zero(),
            qc: BigRational::zero(),
        }
    }

    pub fn int(n: i64) -> Self {
        LinearForm::constant(super::rational::rat_int(n))
    }

    pub fn symbol(s: Sym) -> Self {
        let mut f = LinearForm::constant(BigRational::zero());
        *f.coeff_mut(s) = BigRational::one();
        f
    }

    pub fn a() -> Self {
        LinearForm::symbol(Sym::A)
    }
    pub fn b() -> Self {
        LinearForm::symbol(Sym::B)
    }
    pub fn c() -> Self {
        LinearForm::symbol(Sym::C)
    }

    pub fn coeff(&self, s: Sym) -> &BigRational {
        match s {
            Sym::A => &self.qa,
            Sym::B => &self.qb,
            Sym::C => &self.qc,
        }
    }

    fn coeff_mut(&mut self, s: Sym) -> &mut BigRational {
        match s {
            Sym::A => &mut self.qa,
            Sym::B => &mut self.qb,
            Sym::C => &mut self.qc,
        }
    }

    /// Multiply by an exact rational.
    pub fn scale(&self, k: &BigRational) -> Self {
        LinearForm {
            q0: &self.q0 * k,
            qa: &self.qa * k,
            qb: &self.qb * k,
            qc: &self.qc * k,
        }
    }

    /// Add an integer shift (x -> x + j).
    pub fn shift(&self, j: i64) -> Self {
        let mut out = self.clone();
        out.q0 += super::rational::rat_int(j);
        out
    }

    /// Constant value if the symbol coefficients all vanish.
    pub fn as_constant(&self) -> Option<&BigRational> {
        if self.qa.is_zero() && self.qb.is_zero() && self.qc.is_zero() {
            Some(&self.q0)
        } else {
            None
        }
    }

    pub fn is_zero(&self) -> bool {
        self.q0.is_zero() && self.qa.is_zero() && self.qb.is_zero() && self.qc.is_zero()
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, p: &Point) -> BigRational {
        &self.q0
            + &self.qa * p.get(Sym::A)
            + &self.qb * p.get(Sym::B)
            + &self.qc * p.get(Sym::C)
    }

    pub fn to_poly(&self) -> MultiPoly {
        let mut acc = MultiPoly::constant(self.q0.clone());
        for s in Sym::ALL {
            acc = acc.add(&MultiPoly::symbol(s).scale(self.coeff(s)));
        }
        acc
    }

    /// Substitute symbols by linear forms (stays linear).
    pub fn subst(&self, images: &[LinearForm; 3]) -> LinearForm {
        let mut out = LinearForm::constant(self.q0.clone());
        for s in Sym::ALL {
            out = out + images[s.index()].scale(self.coeff(s));
        }
        out
    }
}

impl Add for LinearForm {
    type Output = LinearForm;
    fn add(self, rhs: LinearForm) -> LinearForm {
        LinearForm {
            q0: self.q0 + rhs.q0,
            qa: self.qa + rhs.qa,
            qb: self.qb + rhs.qb,
            qc: self.qc + rhs.qc,
        }
    }
}

impl Sub for LinearForm {
    type Output = LinearForm;
    fn sub(self, rhs: LinearForm) -> LinearForm {
        self + (-rhs)
    }
}

impl Neg for LinearForm {
    type Output = LinearForm;
    fn neg(self) -> LinearForm {
        self.scale(&-BigRational::one())
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<(bool, String)> = Vec::new();
        for s in Sym::ALL {
            let q = self.coeff(s);
            if q.is_zero() {
                continue;
            }
            let mag = q.abs();
            let body = if mag.is_one() {
                s.name().to_string()
            } else {
                format!("{}*{}", format_rational(&mag), s.name())
            };
            parts.push((q.is_negative(), body));
        }
        if !self.q0.is_zero() || parts.is_empty() {
            parts.push((self.q0.is_negative(), format_rational(&self.q0.abs())));
        }
        for (i, (neg, body)) in parts.iter().enumerate() {
            if i == 0 {
                if *neg {
                    write!(f, "-")?;
                }
            } else if *neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            write!(f, "{body}")?;
        }
        Ok(())
    }
}

/// Parse a linear-form expression such as `a/2 - b + 1/4` or `3/2`.
/// Products need one constant side, division a constant divisor.
pub fn parse_linear_form(input: &str) -> Result<LinearForm> {
    let mut p = Parser {
        chars: input.chars().collect(),
        pos: 0,
        input,
    };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != p.chars.len() {
        return Err(Error::Parse(format!(
            "unexpected trailing input in `{input}`"
        )));
    }
    Ok(e)
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    input: &'a str,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<LinearForm> {
        let mut acc = self.term()?;
        while let Some(op) = self.peek() {
            match op {
                '+' => {
                    self.pos += 1;
                    acc = acc + self.term()?;
                }
                '-' => {
                    self.pos += 1;
                    acc = acc - self.term()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<LinearForm> {
        let mut acc = self.factor()?;
        while let Some(op) = self.peek() {
            match op {
                '*' => {
                    self.pos += 1;
                    let rhs = self.factor()?;
                    acc = match (acc.as_constant().cloned(), rhs.as_constant().cloned()) {
                        (Some(k), _) => rhs.scale(&k),
                        (_, Some(k)) => acc.scale(&k),
                        _ => {
                            return Err(Error::Parse(format!(
                                "non-linear product in `{}`",
                                self.input
                            )))
                        }
                    };
                }
                '/' => {
                    self.pos += 1;
                    let rhs = self.factor()?;
                    let k = rhs.as_constant().cloned().ok_or_else(|| {
                        Error::Parse(format!("non-constant divisor in `{}`", self.input))
                    })?;
                    if k.is_zero() {
                        return Err(Error::Parse("division by zero".into()));
                    }
                    acc = acc.scale(&k.recip());
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<LinearForm> {
        match self.peek() {
            Some('-') => {
                self.pos += 1;
                Ok(-self.factor()?)
            }
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(Error::Parse(format!("missing `)` in `{}`", self.input)));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c == 'a' || c == 'b' || c == 'c' => {
                self.pos += 1;
                Ok(match c {
                    'a' => LinearForm::a(),
                    'b' => LinearForm::b(),
                    _ => LinearForm::c(),
                })
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self
                    .chars
                    .get(self.pos)
                    .is_some_and(|ch| ch.is_ascii_digit() || *ch == '.')
                {
                    self.pos += 1;
                }
                let lit: String = self.chars[start..self.pos].iter().collect();
                Ok(LinearForm::constant(parse_rational(&lit)?))
            }
            other => Err(Error::Parse(format!(
                "unexpected token {:?} in `{}`",
                other, self.input
            ))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;

    #[test]
    fn parse_and_eval() {
        let f = parse_linear_form("a/2 - b + 1/4").unwrap();
        assert_eq!(f.qa, rat(1, 2));
        assert_eq!(f.qb, rat(-1, 1));
        assert_eq!(f.q0, rat(1, 4));
        let v = f.eval(&Point::ab(rat(3, 1), rat(1, 4)));
        assert_eq!(v, rat(3, 2));
    }

    #[test]
    fn parse_constant_products() {
        let f = parse_linear_form("2*(a+1)/4").unwrap();
        assert_eq!(f.qa, rat(1, 2));
        assert_eq!(f.q0, rat(1, 2));
        assert!(parse_linear_form("a*b").is_err());
        assert!(parse_linear_form("a/b").is_err());
    }

    #[test]
    fn display_roundtrip() {
        let f = parse_linear_form("(a+1)/2 - b").unwrap();
        assert_eq!(f.to_string(), "1/2*a - b + 1/2");
    }
}
