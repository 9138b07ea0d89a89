//! Sparse multivariate polynomials over the fixed symbol set {a, b, c}
//! with exact rational coefficients.
//!
//! Monomials are ordered graded-lexicographically with a < b < c; the
//! order is only used to pick a deterministic leading term for
//! normalization and printing.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// One of the three symbols.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sym {
    A,
    B,
    C,
}

impl Sym {
    pub const ALL: [Sym; 3] = [Sym::A, Sym::B, Sym::C];

    pub fn index(self) -> usize {
        match self {
            Sym::A => 0,
            Sym::B => 1,
            Sym::C => 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Sym::A => "a",
            Sym::B => "b",
            Sym::C => "c",
        }
    }
}

/// Exponent triple (e_a, e_b, e_c) ordered graded-lex with a < b < c.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Mono(pub [u32; 3]);

impl Mono {
    pub const ONE: Mono = Mono([0, 0, 0]);

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(&self, other: &Mono) -> Mono {
        Mono([
            self.0[0] + other.0[0],
            self.0[1] + other.0[1],
            self.0[2] + other.0[2],
        ])
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        // graded first, then lex comparing the largest symbol c first
        (self.degree(), self.0[2], self.0[1], self.0[0]).cmp(&(
            other.degree(),
            other.0[2],
            other.0[1],
            other.0[0],
        ))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial: monomial -> nonzero coefficient. The zero
/// polynomial is the empty map.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Mono, BigRational>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn one() -> Self {
        MultiPoly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Mono::ONE, c);
        }
        MultiPoly { terms }
    }

    pub fn symbol(s: Sym) -> Self {
        let mut e = [0u32; 3];
        e[s.index()] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(Mono(e), BigRational::one());
        MultiPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> Option<BigRational> {
        if self.terms.is_empty() {
            return Some(BigRational::zero());
        }
        if self.terms.len() == 1 {
            if let Some(c) = self.terms.get(&Mono::ONE) {
                return Some(c.clone());
            }
        }
        None
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Mono::degree).max().unwrap_or(0)
    }

    /// Leading (largest) monomial and coefficient under the fixed order.
    pub fn leading(&self) -> Option<(&Mono, &BigRational)> {
        self.terms.iter().next_back()
    }

    fn insert_add(&mut self, m: Mono, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_add(*m, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (*m, -c.clone()))
            .collect();
        MultiPoly { terms }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = MultiPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.insert_add(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, k)| (*m, k * c))
            .collect();
        MultiPoly { terms }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = MultiPoly::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, point: &Point) -> BigRational {
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    t *= &point.0[i];
                }
            }
            acc += t;
        }
        acc
    }

    /// Substitute each symbol by a polynomial.
    pub fn subst(&self, images: &[MultiPoly; 3]) -> MultiPoly {
        let mut acc = MultiPoly::zero();
        for (m, c) in &self.terms {
            let mut t = MultiPoly::constant(c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    t = t.mul(&images[i]);
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Component-wise minimum exponent over all terms (zero poly -> 0).
    pub fn min_exponents(&self) -> [u32; 3] {
        let mut out = [u32::MAX; 3];
        for m in self.terms.keys() {
            for i in 0..3 {
                out[i] = out[i].min(m.0[i]);
            }
        }
        if self.terms.is_empty() {
            [0, 0, 0]
        } else {
            out
        }
    }

    /// Divide out the monomial x^e (requires it to divide every term).
    pub fn shift_down(&self, e: [u32; 3]) -> MultiPoly {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                (
                    Mono([m.0[0] - e[0], m.0[1] - e[1], m.0[2] - e[2]]),
                    c.clone(),
                )
            })
            .collect();
        MultiPoly { terms }
    }
}

/// Evaluation point: exact rational values for (a, b, c).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Point(pub [BigRational; 3]);

impl Point {
    pub fn new(a: BigRational, b: BigRational, c: BigRational) -> Self {
        Point([a, b, c])
    }

    /// Point with c = 0 for the two-symbol families.
    pub fn ab(a: BigRational, b: BigRational) -> Self {
        Point([a, b, BigRational::zero()])
    }

    pub fn get(&self, s: Sym) -> &BigRational {
        &self.0[s.index()]
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        // print in descending monomial order
        for (m, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.degree() == 0 {
                factors.push(super::rational::format_rational(&abs));
            }
            for s in Sym::ALL {
                let e = m.0[s.index()];
                if e == 1 {
                    factors.push(s.name().to_string());
                } else if e > 1 {
                    factors.push(format!("{}^{}", s.name(), e));
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

/// Parse helper used by tests and the CLI point syntax: `a=3,b=1/4[,c=..]`.
pub fn parse_point(s: &str) -> Result<Point> {
    let mut vals = [
        BigRational::zero(),
        BigRational::zero(),
        BigRational::zero(),
    ];
    for item in s.split(',') {
        let (k, v) = item
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("bad point component `{item}`")))?;
        let idx = match k.trim() {
            "a" => 0,
            "b" => 1,
            "c" => 2,
            other => return Err(Error::Parse(format!("unknown symbol `{other}`"))),
        };
        vals[idx] = super::rational::parse_rational(v)?;
    }
    Ok(Point(vals))
}
