//! Exact algebra: arbitrary-precision rationals, sparse polynomials and
//! rational functions over the fixed symbol set {a, b, c}.

pub mod linform;
pub mod poly;
pub mod ratfunc;
pub mod rational;

pub use linform::{parse_linear_form, LinearForm};
pub use poly::{parse_point, MultiPoly, Point, Sym};
pub use ratfunc::RatFunc;
pub use rational::{format_rational, parse_rational, rat, rat_int};

pub use num_rational::BigRational;
