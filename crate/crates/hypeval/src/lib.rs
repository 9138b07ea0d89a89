//! Exact and numeric evaluation of hypergeometric series contiguous to
//! the Kummer, Gosper and Dixon identities.
//!
//! The crate has two layers:
//!
//! * an exact layer — arbitrary-precision rationals, sparse polynomials
//!   and rational functions in {a, b, c}, terminating-series summation,
//!   the coefficient families P(n), Q(n), K(n), L(n) and their
//!   recurrences with telescoping-certificate verification;
//! * a numeric layer — pFq partial sums with tail estimates, Gamma
//!   products via log-Gamma with sign tracking, and analytically
//!   continued 2F1(-1) values, generic over 53-bit or 106-bit floats.

pub mod algebra;
pub mod error;
pub mod extensions;
pub mod hyper;
pub mod kummer;
pub mod real;
pub mod recurrence;
pub mod sweeps;
pub mod transforms;

pub use algebra::{BigRational, LinearForm, MultiPoly, Point, RatFunc, Sym};
pub use error::{Error, Result};
pub use hyper::{GammaProduct, NumericValue, SeriesSpec};
pub use real::{DoubleDouble, FloatMode, Real};
