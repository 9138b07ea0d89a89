//! The hypergeometric engine: Pochhammer symbols, exact summation of
//! terminating series, numeric pFq evaluation with tail estimates,
//! Gamma-product evaluation and analytically continued 2F1(-1) values.

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::algebra::rational::{as_nonpos_integer, format_rational, rat, rat_int};
use crate::algebra::{LinearForm, Point, RatFunc};
use crate::error::{Error, Result};
use crate::real::gamma::ln_gamma_rational;
use crate::real::Real;

/// Default term budget for numeric summation.
pub const DEFAULT_MAX_TERMS: usize = 400_000;
/// Default target relative tolerance for numeric summation.
pub const DEFAULT_TOL: f64 = 1e-13;

/// A pFq description: upper/lower parameter lists plus an exact rational
/// argument. Drives both exact terminating summation and numeric
/// evaluation.
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesSpec {
    pub upper: Vec<LinearForm>,
    pub lower: Vec<LinearForm>,
    pub argument: BigRational,
}

impl SeriesSpec {
    pub fn new(upper: Vec<LinearForm>, lower: Vec<LinearForm>, argument: BigRational) -> Self {
        SeriesSpec {
            upper,
            lower,
            argument,
        }
    }

    /// Series with all parameters constant rationals.
    pub fn constant(upper: Vec<BigRational>, lower: Vec<BigRational>, argument: BigRational) -> Self {
        SeriesSpec {
            upper: upper.into_iter().map(LinearForm::constant).collect(),
            lower: lower.into_iter().map(LinearForm::constant).collect(),
            argument,
        }
    }

    /// Substitute a rational point for the symbols, producing a constant
    /// series.
    pub fn at_point(&self, p: &Point) -> SeriesSpec {
        SeriesSpec {
            upper: self
                .upper
                .iter()
                .map(|f| LinearForm::constant(f.eval(p)))
                .collect(),
            lower: self
                .lower
                .iter()
                .map(|f| LinearForm::constant(f.eval(p)))
                .collect(),
            argument: self.argument.clone(),
        }
    }

    /// Termination index: the smallest m >= 0 such that some upper
    /// parameter is the constant -m. The sum then runs k = 0..=m.
    pub fn termination_index(&self) -> Option<u64> {
        self.upper
            .iter()
            .filter_map(|f| f.as_constant().and_then(as_nonpos_integer))
            .min()
    }

    fn constant_params(&self) -> Option<(Vec<BigRational>, Vec<BigRational>)> {
        let mut us = Vec::with_capacity(self.upper.len());
        for u in &self.upper {
            us.push(u.as_constant()?.clone());
        }
        let mut ls = Vec::with_capacity(self.lower.len());
        for l in &self.lower {
            ls.push(l.as_constant()?.clone());
        }
        Some((us, ls))
    }
}

impl fmt::Display for SeriesSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let us: Vec<String> = self.upper.iter().map(|u| u.to_string()).collect();
        let ls: Vec<String> = self.lower.iter().map(|l| l.to_string()).collect();
        write!(
            f,
            "{}F{}({}; {}; {})",
            self.upper.len(),
            self.lower.len(),
            us.join(", "),
            ls.join(", "),
            format_rational(&self.argument)
        )
    }
}

/// An exact rational-function prefactor times a signed multiset of
/// Gamma factors Gamma(arg)^exp.
#[derive(Debug, Clone)]
pub struct GammaProduct {
    pub prefactor: RatFunc,
    pub factors: Vec<(LinearForm, i32)>,
}

impl GammaProduct {
    pub fn new(prefactor: RatFunc, factors: Vec<(LinearForm, i32)>) -> Self {
        GammaProduct {
            prefactor,
            factors: factors.into_iter().filter(|(_, e)| *e != 0).collect(),
        }
    }

    /// Gamma-factor-free product.
    pub fn scalar(prefactor: RatFunc) -> Self {
        GammaProduct {
            prefactor,
            factors: Vec::new(),
        }
    }

    pub fn one() -> Self {
        GammaProduct::scalar(RatFunc::one())
    }

    pub fn mul(&self, other: &GammaProduct) -> GammaProduct {
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().cloned());
        GammaProduct::new(self.prefactor.mul(&other.prefactor), factors)
    }

    pub fn scale(&self, k: &RatFunc) -> GammaProduct {
        GammaProduct {
            prefactor: self.prefactor.mul(k),
            factors: self.factors.clone(),
        }
    }
}

/// A numeric value with an error estimate.
#[derive(Debug, Clone)]
pub struct NumericValue<R: Real> {
    pub value: R,
    pub error: R,
}

impl<R: Real> NumericValue<R> {
    pub fn new(value: R, error: R) -> Self {
        NumericValue {
            value,
            error: error.abs(),
        }
    }

    /// An exactly known rational rounded once into R.
    pub fn exact(v: &BigRational) -> Self {
        let value = R::from_rational(v);
        let error = value.abs() * R::epsilon() + R::epsilon();
        NumericValue { value, error }
    }

    pub fn add(&self, other: &Self) -> Self {
        NumericValue {
            value: self.value.clone() + other.value.clone(),
            error: self.error.clone() + other.error.clone(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        NumericValue {
            value: self.value.clone() - other.value.clone(),
            error: self.error.clone() + other.error.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let err = self.value.abs() * other.error.clone()
            + other.value.abs() * self.error.clone()
            + self.error.clone() * other.error.clone();
        NumericValue {
            value: self.value.clone() * other.value.clone(),
            error: err,
        }
    }

    pub fn scale(&self, k: &R) -> Self {
        NumericValue {
            value: self.value.clone() * k.clone(),
            error: self.error.clone() * k.abs(),
        }
    }

    pub fn scale_rational(&self, k: &BigRational) -> Self {
        self.scale(&R::from_rational(k))
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.value.to_f64(), self.error.to_f64())
    }
}

/// |x - y| / max(1, |y|) as f64.
pub fn relative_residual<R: Real>(x: &NumericValue<R>, y: &NumericValue<R>) -> f64 {
    let diff = (x.value.clone() - y.value.clone()).abs();
    let scale = R::max_val(R::one(), y.value.abs());
    (diff / scale).to_f64()
}

/// Rising factorial (x)_k = x (x+1) ... (x+k-1) as an exact polynomial.
pub fn pochhammer(x: &LinearForm, k: u32) -> RatFunc {
    let mut acc = RatFunc::one();
    for j in 0..k {
        acc = acc.mul(&RatFunc::from_linear(&x.shift(j as i64)));
    }
    acc
}

/// Rising factorial of an exact rational.
pub fn pochhammer_rational(x: &BigRational, k: u64) -> BigRational {
    let mut acc = BigRational::one();
    let mut t = x.clone();
    for _ in 0..k {
        acc *= &t;
        t += BigRational::one();
    }
    acc
}

/// Exact sum of a terminating hypergeometric series.
///
/// The termination index K is the smallest m >= 0 with some upper
/// parameter equal to the constant -m; summation runs k = 0..=K. A
/// constant lower parameter -m is tolerated when m >= K (its Pochhammer
/// never vanishes inside the range) and rejected otherwise.
pub fn sum_terminating(spec: &SeriesSpec) -> Result<RatFunc> {
    let k_max = spec.termination_index().ok_or(Error::NonTerminating)?;
    for l in &spec.lower {
        if let Some(m) = l.as_constant().and_then(as_nonpos_integer) {
            if m < k_max {
                return Err(Error::IllDefined(format!("{l}")));
            }
        }
    }
    let z = RatFunc::from_rational(spec.argument.clone());
    let mut term = RatFunc::one();
    let mut sum = RatFunc::one();
    for k in 0..k_max {
        let mut num = z.clone();
        for u in &spec.upper {
            num = num.mul(&RatFunc::from_linear(&u.shift(k as i64)));
        }
        let mut den = RatFunc::from_int(k as i64 + 1);
        for l in &spec.lower {
            den = den.mul(&RatFunc::from_linear(&l.shift(k as i64)));
        }
        term = term.mul(&num.div(&den)?);
        sum = sum.add(&term);
    }
    Ok(sum)
}

// ---------------------------------------------------------------------
// numeric summation
// ---------------------------------------------------------------------

/// Incremental term generator: t_{k+1} = t_k * prod(u+k)/prod(l+k) * z/(k+1).
struct Terms<R: Real> {
    us: Vec<R>,
    ls: Vec<R>,
    z: R,
    k: u64,
    t: R,
}

impl<R: Real> Terms<R> {
    fn new(us: &[BigRational], ls: &[BigRational], z: &BigRational) -> Self {
        Terms {
            us: us.iter().map(R::from_rational).collect(),
            ls: ls.iter().map(R::from_rational).collect(),
            z: R::from_rational(z),
            k: 0,
            t: R::one(),
        }
    }

    /// Current term t_k, then advance.
    fn next_term(&mut self) -> R {
        let t = self.t.clone();
        let mut factor = self.z.clone();
        for u in &mut self.us {
            factor = factor * u.clone();
            *u = u.clone() + R::one();
        }
        let mut den = R::from_i64(self.k as i64 + 1);
        for l in &mut self.ls {
            den = den * l.clone();
            *l = l.clone() + R::one();
        }
        self.t = self.t.clone() * factor / den;
        self.k += 1;
        t
    }
}

/// First index after which every parameter has moved past zero (term
/// signs and magnitudes behave asymptotically from here on).
fn burn_in(us: &[BigRational], ls: &[BigRational]) -> usize {
    let mut b = 8.0f64;
    for p in us.iter().chain(ls) {
        let v = p.to_f64().unwrap_or(0.0);
        if v < 0.0 {
            b = b.max(-v + 4.0);
        }
    }
    b.ceil() as usize
}

fn check_lower_params(ls: &[BigRational]) -> Result<()> {
    for l in ls {
        if as_nonpos_integer(l).is_some() {
            return Err(Error::InvalidLowerParameter);
        }
    }
    Ok(())
}

/// |z| < 1: geometric decay; error bound from the first omitted term.
fn sum_geometric<R: Real>(
    us: &[BigRational],
    ls: &[BigRational],
    z: &BigRational,
    max_terms: usize,
    tol: f64,
) -> Result<NumericValue<R>> {
    let mut it = Terms::<R>::new(us, ls, z);
    let mut sum = R::zero();
    let mut prev = R::zero();
    let b = burn_in(us, ls);
    for k in 0..max_terms {
        let t = it.next_term();
        sum = sum.clone() + t.clone();
        if k > b {
            let ratio = if prev.abs() > R::zero() {
                (t.abs() / prev.abs()).to_f64()
            } else {
                0.0
            };
            if ratio < 0.9 {
                let scale = R::max_val(R::one(), sum.abs()).to_f64();
                let tail = t.abs().to_f64() * ratio / (1.0 - ratio);
                if tail < tol * scale || t.abs().to_f64() < f64::MIN_POSITIVE {
                    let err = R::from_f64(tail) + sum.abs() * R::epsilon() * R::from_i64(4);
                    return Ok(NumericValue::new(sum, err));
                }
            }
        }
        prev = t;
    }
    Err(Error::NoConvergence(format!(
        "geometric tail bound did not engage within {max_terms} terms"
    )))
}

/// z = 1 with positive convergence margin s: partial sum plus an
/// asymptotic tail correction, evaluated at two depths and Richardson
/// extrapolated; the depth-to-depth difference is the error estimate.
fn sum_unit_polytail<R: Real>(
    us: &[BigRational],
    ls: &[BigRational],
    max_terms: usize,
    tol: f64,
) -> Result<NumericValue<R>> {
    let s_rat: BigRational = ls.iter().sum::<BigRational>() - us.iter().sum::<BigRational>();
    let s = s_rat.to_f64().unwrap_or(f64::NAN);
    if !(s > 0.0) {
        return Err(Error::NoConvergence(format!(
            "3F2(1)-type margin {s} is not positive"
        )));
    }
    // t_k ~ c k^(-1-s) (1 + e1/k + ...);  k! counts as a lower parameter 1
    let e1_rat: BigRational = (us.iter().map(|u| u * (u - BigRational::one())).sum::<BigRational>()
        - ls
            .iter()
            .map(|l| l * (l - BigRational::one()))
            .sum::<BigRational>())
        / rat_int(2);
    let e1 = R::from_rational(&e1_rat);
    let s_r = R::from_rational(&s_rat);
    // tail(K) = t_K (K/s + 1/2 - e1/(s(1+s)))
    let tail_const =
        R::from_f64(0.5) - e1.clone() / (s_r.clone() * (R::one() + s_r.clone()));

    let b = burn_in(us, ls);
    let k1 = ((3.0 / tol).powf(1.0 / (2.0 + s)) * 2.0).ceil() as usize;
    let k1 = k1.clamp(b + 2000, max_terms / 2);
    let k2 = 2 * k1;

    let mut it = Terms::<R>::new(us, ls, &BigRational::one());
    let mut sum = R::zero();
    let mut v1 = R::zero();
    for k in 0..k2 {
        let t = it.next_term();
        if k == k1 {
            v1 = sum.clone()
                + t.clone() * (R::from_i64(k1 as i64) / s_r.clone() + tail_const.clone());
        }
        sum = sum.clone() + t;
    }
    let t_k2 = it.next_term();
    let v2 = sum.clone()
        + t_k2 * (R::from_i64(k2 as i64) / s_r.clone() + tail_const.clone());

    // residual error of v(K) is O(K^-(2+s)); one Richardson step
    let ratio = R::from_f64(2f64.powf(2.0 + s) - 1.0);
    let diff = v2.clone() - v1;
    let improved = v2 + diff.clone() / ratio;
    let err = diff.abs()
        + sum.abs() * R::epsilon() * R::from_f64((k2 as f64).sqrt() + 4.0);
    let scale = R::max_val(R::one(), improved.abs()).to_f64();
    if err.to_f64() > tol * scale * 10.0 {
        return Err(Error::NoConvergence(format!(
            "z=1 tail estimate {:.3e} above tolerance after {k2} terms",
            err.to_f64()
        )));
    }
    Ok(NumericValue::new(improved, err))
}

/// z = -1 (eventually alternating terms): partial sums accelerated by
/// iterated averaging (Euler transform on the tail window).
fn sum_neg_unit_alternating<R: Real>(
    us: &[BigRational],
    ls: &[BigRational],
    max_terms: usize,
    tol: f64,
) -> Result<NumericValue<R>> {
    let s_rat: BigRational = ls.iter().sum::<BigRational>() - us.iter().sum::<BigRational>();
    let s = s_rat.to_f64().unwrap_or(f64::NAN);
    if !(s > -0.5) {
        return Err(Error::NoConvergence(format!(
            "z=-1 margin {s} <= -1/2; use a transformed path"
        )));
    }
    const LEVELS: usize = 16;
    let b = burn_in(us, ls);
    let k_top = (2 * b + 6000).min(max_terms);
    if k_top + LEVELS + 1 > max_terms {
        return Err(Error::NoConvergence(
            "term budget too small for alternating acceleration".into(),
        ));
    }
    let mut it = Terms::<R>::new(us, ls, &rat(-1, 1));
    let mut sum = R::zero();
    for _ in 0..k_top {
        sum = sum.clone() + it.next_term();
    }
    // window of LEVELS+1 consecutive partial sums
    let mut window = Vec::with_capacity(LEVELS + 1);
    window.push(sum.clone());
    for _ in 0..LEVELS {
        sum = sum.clone() + it.next_term();
        window.push(sum.clone());
    }
    let half = R::from_f64(0.5);
    let mut prev_last = window[window.len() - 1].clone();
    for _ in 0..LEVELS {
        for i in 0..window.len() - 1 {
            window[i] = (window[i].clone() + window[i + 1].clone()) * half.clone();
        }
        window.pop();
        prev_last = window[window.len() - 1].clone();
        if window.len() == 2 {
            break;
        }
    }
    let value = window[window.len() - 1].clone();
    let err = (value.clone() - prev_last).abs()
        + value.abs() * R::epsilon() * R::from_f64((k_top as f64).sqrt() + 8.0)
        + R::epsilon();
    let scale = R::max_val(R::one(), value.abs()).to_f64();
    if err.to_f64() > tol * scale * 10.0 {
        return Err(Error::NoConvergence(format!(
            "z=-1 acceleration error {:.3e} above tolerance",
            err.to_f64()
        )));
    }
    Ok(NumericValue::new(value, err))
}

/// Numeric evaluation of a constant-parameter series by partial sums.
///
/// Terminating series are summed exactly and rounded once. Otherwise
/// |z| < 1 uses plain summation with a geometric tail bound; |z| = 1
/// requires a convergence margin and uses the matching tail machinery.
pub fn eval_series_numeric<R: Real>(
    spec: &SeriesSpec,
    max_terms: usize,
    tol: f64,
) -> Result<NumericValue<R>> {
    let (us, ls) = spec
        .constant_params()
        .ok_or_else(|| Error::InvalidShape("symbolic parameter in numeric evaluation".into()))?;

    if let Some(k) = spec.termination_index() {
        if k as usize > max_terms {
            return Err(Error::NoConvergence(format!(
                "terminating index {k} exceeds the term budget"
            )));
        }
        let exact = sum_terminating(spec)?;
        let v = exact.as_constant().expect("constant series sums to a constant");
        return Ok(NumericValue::exact(&v));
    }

    check_lower_params(&ls)?;
    let z = &spec.argument;
    if z.is_zero() {
        return Ok(NumericValue::exact(&BigRational::one()));
    }
    if us.len() <= ls.len() {
        // entire in z: factorial decay regardless of |z|
        return sum_geometric(&us, &ls, z, max_terms, tol);
    }
    if us.len() > ls.len() + 1 {
        return Err(Error::NoConvergence(
            "more than q+1 upper parameters: divergent unless terminating".into(),
        ));
    }
    let one = BigRational::one();
    if z.abs() < one {
        sum_geometric(&us, &ls, z, max_terms, tol)
    } else if *z == one {
        sum_unit_polytail(&us, &ls, max_terms, tol)
    } else if *z == -one {
        sum_neg_unit_alternating(&us, &ls, max_terms, tol)
    } else {
        Err(Error::NoConvergence(format!(
            "|z| > 1 (z = {}) is outside the principal-branch summation domain",
            format_rational(z)
        )))
    }
}

/// Numeric evaluation of a Gamma product at an exact rational point.
///
/// Uses log-Gamma with explicit sign tracking; any Gamma factor at a
/// non-positive integer (either exponent sign) is a pole error.
pub fn eval_gamma_product<R: Real>(g: &GammaProduct, point: &Point) -> Result<NumericValue<R>> {
    let pref = g.prefactor.eval(point)?;
    let mut ln_total = R::zero();
    let mut sign = 1i8;
    let mut ln_scale = 0.0f64;
    for (arg, e) in &g.factors {
        let x = arg.eval(point);
        let lg = ln_gamma_rational::<R>(&x)?;
        ln_total = ln_total + lg.ln_abs.clone() * R::from_i64(*e as i64);
        ln_scale += lg.ln_abs.to_f64().abs() * e.unsigned_abs() as f64;
        if lg.sign < 0 && e.rem_euclid(2) == 1 {
            sign = -sign;
        }
    }
    if pref.is_zero() {
        return Ok(NumericValue::new(R::zero(), R::zero()));
    }
    let mag = ln_total.exp();
    let mut value = R::from_rational(&pref) * mag;
    if sign < 0 {
        value = -value;
    }
    let err = value.abs() * R::epsilon() * R::from_f64(6.0 + 2.0 * ln_scale);
    Ok(NumericValue::new(value, err))
}

/// Which evaluation route to take for 2F1(-1).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ContinuationPath {
    /// Decide from the convergence margin.
    Auto,
    /// Sum the z = -1 series directly (needs margin > -1/2).
    Direct,
    /// Pfaff transform to a z = 1/2 series (works on the whole cut plane).
    Pfaff,
}

/// Analytically continued 2F1(A, B; C; -1) for exact rational parameters.
///
/// Terminating cases are exact. Otherwise the z = -1 series is summed
/// directly when Re(C - A - B) > -1/2 and mapped through
/// 2F1(A,B;C;-1) = 2^-A 2F1(A, C-B; C; 1/2) when not.
pub fn eval_2f1_neg1_path<R: Real>(
    a: &BigRational,
    b: &BigRational,
    c: &BigRational,
    path: ContinuationPath,
) -> Result<NumericValue<R>> {
    if as_nonpos_integer(c).is_some() {
        return Err(Error::InvalidLowerParameter);
    }
    let neg1 = rat(-1, 1);
    if as_nonpos_integer(a).is_some() || as_nonpos_integer(b).is_some() {
        let spec = SeriesSpec::constant(vec![a.clone(), b.clone()], vec![c.clone()], neg1);
        let exact = sum_terminating(&spec)?;
        return Ok(NumericValue::exact(
            &exact.as_constant().expect("constant series"),
        ));
    }
    let margin = c - a - b;
    let direct_ok = margin > rat(-1, 2);
    let use_direct = match path {
        ContinuationPath::Auto => direct_ok,
        ContinuationPath::Direct => {
            if !direct_ok {
                return Err(Error::NoConvergence(
                    "direct z=-1 series needs margin > -1/2".into(),
                ));
            }
            true
        }
        ContinuationPath::Pfaff => false,
    };
    if use_direct {
        let spec = SeriesSpec::constant(vec![a.clone(), b.clone()], vec![c.clone()], neg1);
        return eval_series_numeric::<R>(&spec, DEFAULT_MAX_TERMS, DEFAULT_TOL);
    }
    // 2F1(A,B;C;-1) = 2^-A' 2F1(A', C-B'; C; 1/2) with {A',B'} = {A,B},
    // A' the smaller to keep the dynamic range down
    let (ap, bp) = if a <= b { (a, b) } else { (b, a) };
    let spec = SeriesSpec::constant(
        vec![ap.clone(), c - bp],
        vec![c.clone()],
        rat(1, 2),
    );
    let series = eval_series_numeric::<R>(&spec, DEFAULT_MAX_TERMS, DEFAULT_TOL)?;
    let ln2 = (R::one() + R::one()).ln();
    let pref = (-(R::from_rational(ap)) * ln2).exp();
    Ok(series.scale(&pref))
}

/// 2F1(A, B; C; -1) on the automatic evaluation path.
pub fn eval_2f1_neg1<R: Real>(
    a: &BigRational,
    b: &BigRational,
    c: &BigRational,
) -> Result<NumericValue<R>> {
    eval_2f1_neg1_path(a, b, c, ContinuationPath::Auto)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;
    use crate::algebra::Sym;
    use crate::real::gamma::gamma_rational;

    fn lf(s: &str) -> LinearForm {
        crate::algebra::parse_linear_form(s).unwrap()
    }

    #[test]
    fn pochhammer_basics() {
        // (a)_0 = 1
        assert!(pochhammer(&LinearForm::a(), 0).equal(&RatFunc::one()));
        // (1)_4 = 24
        assert!(pochhammer(&LinearForm::int(1), 4).equal(&RatFunc::from_int(24)));
        // (a/2 - b)_2 = (a/2 - b)(a/2 - b + 1)
        let x = lf("a/2 - b");
        let expect = RatFunc::from_linear(&x).mul(&RatFunc::from_linear(&x.shift(1)));
        assert!(pochhammer(&x, 2).equal(&expect));
    }

    #[test]
    fn pochhammer_concatenation() {
        // (x)_{j+k} = (x)_j (x+j)_k on a few random-ish forms
        let forms = [lf("a/2 - b"), lf("b + 1/3"), lf("-a + c/2"), lf("2")];
        for x in &forms {
            for j in 0..=8u32 {
                for k in 0..=8u32 {
                    let lhs = pochhammer(x, j + k);
                    let rhs = pochhammer(x, j).mul(&pochhammer(&x.shift(j as i64), k));
                    assert!(lhs.equal(&rhs), "x={x}, j={j}, k={k}");
                }
            }
        }
    }

    /// Brute-force oracle: sum the series term by term from explicit
    /// Pochhammer products, independent of the incremental loop.
    fn oracle_sum(spec: &SeriesSpec, k_max: u64) -> RatFunc {
        let mut sum = RatFunc::zero();
        for k in 0..=k_max {
            let mut t = RatFunc::from_rational(
                crate::algebra::rational::rat_pow(&spec.argument, k as i64),
            )
            .mul(&RatFunc::from_rational(crate::algebra::rational::inv_factorial(k as i64)));
            for u in &spec.upper {
                t = t.mul(&pochhammer(u, k as u32));
            }
            for l in &spec.lower {
                t = t.div(&pochhammer(l, k as u32)).unwrap();
            }
            sum = sum.add(&t);
        }
        sum
    }

    #[test]
    fn terminating_sum_p1_spec() {
        // 3F2(-1/2, -1, b; -1, a/2; 1) = 1 - b/a
        let spec = SeriesSpec::new(
            vec![lf("-1/2"), lf("-1"), LinearForm::b()],
            vec![lf("-1"), lf("a/2")],
            rat(1, 1),
        );
        let got = sum_terminating(&spec).unwrap();
        let expect = RatFunc::one()
            .sub(&RatFunc::symbol(Sym::B).div(&RatFunc::symbol(Sym::A)).unwrap());
        assert!(got.equal(&expect));
        assert!(got.equal(&oracle_sum(&spec, 1)));
    }

    #[test]
    fn terminating_sum_p2_spec() {
        // 3F2(-1, -3/2, b; -2, a/2; 1) = 1 - 3b/(2a), oracle-checked
        let spec = SeriesSpec::new(
            vec![lf("-1"), lf("-3/2"), LinearForm::b()],
            vec![lf("-2"), lf("a/2")],
            rat(1, 1),
        );
        let got = sum_terminating(&spec).unwrap();
        let expect = RatFunc::one().sub(
            &RatFunc::symbol(Sym::B)
                .scale(&rat(3, 2))
                .div(&RatFunc::symbol(Sym::A))
                .unwrap(),
        );
        assert!(got.equal(&expect));
        assert!(got.equal(&oracle_sum(&spec, 1)));
    }

    #[test]
    fn terminating_sum_zero_upper() {
        let spec = SeriesSpec::new(
            vec![lf("0"), lf("a"), LinearForm::b()],
            vec![lf("1/2"), lf("c")],
            rat(1, 1),
        );
        assert!(sum_terminating(&spec).unwrap().equal(&RatFunc::one()));
    }

    #[test]
    fn terminating_sum_error_cases() {
        let nonterm = SeriesSpec::new(
            vec![LinearForm::a(), lf("1/2")],
            vec![lf("3/2")],
            rat(1, 1),
        );
        assert!(matches!(sum_terminating(&nonterm), Err(Error::NonTerminating)));
        // lower -1 vanishes before the upper -3 truncates
        let ill = SeriesSpec::new(
            vec![lf("-3"), LinearForm::b()],
            vec![lf("-1")],
            rat(1, 1),
        );
        assert!(matches!(sum_terminating(&ill), Err(Error::IllDefined(_))));
    }

    #[test]
    fn numeric_exponential_series() {
        // 0F0(;;1) = e
        let spec = SeriesSpec::constant(vec![], vec![], rat(1, 1));
        let v: NumericValue<f64> = eval_series_numeric(&spec, 1000, 1e-14).unwrap();
        assert!((v.value - std::f64::consts::E).abs() < 1e-14);
    }

    #[test]
    fn numeric_binomial_series() {
        // 1F0(1;;1/2) = 2
        let spec = SeriesSpec::constant(vec![rat(1, 1)], vec![], rat(1, 2));
        let v: NumericValue<f64> = eval_series_numeric(&spec, 1000, 1e-13).unwrap();
        assert!((v.value - 2.0).abs() < 1e-12);
    }

    #[test]
    fn numeric_terminating_2f1() {
        // 2F1(1, -1; 3; -1) = 4/3
        let spec = SeriesSpec::constant(vec![rat(1, 1), rat(-1, 1)], vec![rat(3, 1)], rat(-1, 1));
        let v: NumericValue<f64> = eval_series_numeric(&spec, 100, 1e-14).unwrap();
        assert!((v.value - 4.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn numeric_matches_exact_on_constant_terminating_spec() {
        let spec = SeriesSpec::constant(
            vec![rat(-4, 1), rat(1, 3), rat(5, 2)],
            vec![rat(7, 4), rat(1, 5)],
            rat(2, 3),
        );
        let exact = sum_terminating(&spec).unwrap().as_constant().unwrap();
        let v: NumericValue<f64> = eval_series_numeric(&spec, 100, 1e-14).unwrap();
        assert!((v.value - exact.to_f64().unwrap()).abs() < 1e-13 * (1.0 + v.value.abs()));
    }

    #[test]
    fn numeric_gauss_value_at_unit_argument() {
        // 2F1(1/3, 1/2; 7/3; 1) = Gamma(7/3)Gamma(3/2) / (Gamma(2)Gamma(11/6))
        let spec = SeriesSpec::constant(vec![rat(1, 3), rat(1, 2)], vec![rat(7, 3)], rat(1, 1));
        let v: NumericValue<f64> = eval_series_numeric(&spec, DEFAULT_MAX_TERMS, 1e-11).unwrap();
        let expect = gamma_rational::<f64>(&rat(7, 3)).unwrap()
            * gamma_rational::<f64>(&rat(3, 2)).unwrap()
            / (gamma_rational::<f64>(&rat(2, 1)).unwrap()
                * gamma_rational::<f64>(&rat(11, 6)).unwrap());
        assert!(
            (v.value - expect).abs() < 1e-10,
            "got {} want {expect}, err est {:e}",
            v.value,
            v.error
        );
        assert!((v.value - expect).abs() < 10.0 * (v.error + 1e-14));
    }

    #[test]
    fn numeric_alternating_2f1_at_zero_margin() {
        // 2F1(1/2, 2; 5/2; -1) = 3/4 exactly
        let spec = SeriesSpec::constant(vec![rat(1, 2), rat(2, 1)], vec![rat(5, 2)], rat(-1, 1));
        let v: NumericValue<f64> = eval_series_numeric(&spec, DEFAULT_MAX_TERMS, 1e-11).unwrap();
        assert!((v.value - 0.75).abs() < 1e-12, "got {}", v.value);
    }

    #[test]
    fn no_convergence_outside_domain() {
        let spec = SeriesSpec::constant(vec![rat(1, 2), rat(2, 1)], vec![rat(5, 2)], rat(2, 1));
        assert!(matches!(
            eval_series_numeric::<f64>(&spec, 100, 1e-10),
            Err(Error::NoConvergence(_))
        ));
        // z = 1 with non-positive margin
        let spec = SeriesSpec::constant(vec![rat(3, 1), rat(1, 2)], vec![rat(5, 2)], rat(1, 1));
        assert!(matches!(
            eval_series_numeric::<f64>(&spec, 100, 1e-10),
            Err(Error::NoConvergence(_))
        ));
    }

    #[test]
    fn gamma_product_classical() {
        // lone Gamma(1/2) = sqrt(pi)
        let g = GammaProduct::new(RatFunc::one(), vec![(lf("1/2"), 1)]);
        let v: NumericValue<f64> = eval_gamma_product(&g, &Point::ab(rat(0, 1), rat(0, 1))).unwrap();
        assert!((v.value - std::f64::consts::PI.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn gamma_product_kummer_rhs_terminating_point() {
        // Gamma(3)Gamma(3/2) / (Gamma(2)Gamma(5/2)) = 4/3
        let g = GammaProduct::new(
            RatFunc::one(),
            vec![
                (lf("3"), 1),
                (lf("3/2"), 1),
                (lf("2"), -1),
                (lf("5/2"), -1),
            ],
        );
        let v: NumericValue<f64> = eval_gamma_product(&g, &Point::ab(rat(0, 1), rat(0, 1))).unwrap();
        assert!((v.value - 4.0 / 3.0).abs() < 1e-14);
    }

    #[test]
    fn gamma_product_pole() {
        let g = GammaProduct::new(RatFunc::one(), vec![(lf("0"), 1)]);
        assert!(matches!(
            eval_gamma_product::<f64>(&g, &Point::ab(rat(0, 1), rat(0, 1))),
            Err(Error::PoleAtPoint(_))
        ));
    }

    #[test]
    fn twof1_neg1_terminating() {
        let v: NumericValue<f64> = eval_2f1_neg1(&rat(1, 1), &rat(-1, 1), &rat(3, 1)).unwrap();
        assert!((v.value - 4.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn twof1_neg1_rejects_bad_lower() {
        assert!(matches!(
            eval_2f1_neg1::<f64>(&rat(1, 2), &rat(1, 3), &rat(0, 1)),
            Err(Error::InvalidLowerParameter)
        ));
    }

    #[test]
    fn twof1_neg1_paths_agree() {
        // margin C-A-B = 5/2 - 1/2 - 1/3 > 0: both paths are valid
        let (a, b, c) = (rat(1, 2), rat(1, 3), rat(5, 2));
        let direct: NumericValue<f64> =
            eval_2f1_neg1_path(&a, &b, &c, ContinuationPath::Direct).unwrap();
        let pfaff: NumericValue<f64> =
            eval_2f1_neg1_path(&a, &b, &c, ContinuationPath::Pfaff).unwrap();
        let diff = (direct.value - pfaff.value).abs();
        assert!(
            diff <= 10.0 * (direct.error + pfaff.error) + 1e-15,
            "diff {diff:e} vs errors {:e} {:e}",
            direct.error,
            pfaff.error
        );
    }
}
