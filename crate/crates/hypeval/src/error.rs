//! Error type shared by the exact and numeric layers.

use thiserror::Error;

/// Errors raised by exact arithmetic, series summation and Gamma numerics.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Division by the identically-zero rational function.
    #[error("division by the zero rational function")]
    DivisionByZero,

    /// A denominator (polynomial or Gamma argument) vanishes at the
    /// evaluation point.
    #[error("pole at evaluation point: {0}")]
    PoleAtPoint(String),

    /// No constant non-positive-integer upper parameter, so the series
    /// does not terminate.
    #[error("series does not terminate: no constant non-positive-integer upper parameter")]
    NonTerminating,

    /// A constant non-positive-integer lower parameter vanishes strictly
    /// inside the summation range.
    #[error("ill-defined series: lower parameter {0} vanishes inside the summation range")]
    IllDefined(String),

    /// Numeric summation cannot converge (or failed to settle within the
    /// term budget).
    #[error("no convergence: {0}")]
    NoConvergence(String),

    /// A 2F1 lower parameter is a non-positive integer.
    #[error("invalid lower parameter: non-positive integer")]
    InvalidLowerParameter,

    /// The input series does not have the shape required by a transform.
    #[error("invalid series shape: {0}")]
    InvalidShape(String),

    /// An orbit label leads to a vanishing lower Pochhammer somewhere in
    /// the orbit.
    #[error("singular orbit: {0}")]
    SingularOrbit(String),

    /// A coefficient variant was requested outside its validity range.
    #[error("variant {variant} does not cover n = {n}")]
    VariantOutOfRange { variant: String, n: i64 },

    /// Malformed textual input (rational literal, linear form, spec string).
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
