//! Crate-wide error type.

use num_rational::BigRational;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("n must be an even integer >= 2, got {0}")]
    InvalidN(i64),

    #[error("exponent {0} is not a half-integer")]
    NotHalfInteger(BigRational),

    #[error("evaluation at s = 0 is undefined")]
    EvalAtZero,

    #[error("value contains odd powers of s = q^(1/2); evaluation at q = {0} needs q to be a perfect rational square")]
    OddPowerOfS(BigRational),

    #[error("q = {0} is not the square of a rational, but the requested computation substitutes s = q^(1/2)")]
    QNotSquare(BigRational),

    #[error("q must lie outside {{0, 1, -1}} in numeric mode, got {0}")]
    DegenerateQ(BigRational),

    #[error("invalid simple-root index {index} for n = {n}")]
    InvalidRoot { n: usize, index: usize },

    #[error("invalid basis pair ({b}, {a}): need position(b) < position(a) < {dim}")]
    InvalidPair { b: usize, a: usize, dim: usize },

    #[error("unknown check name `{0}`")]
    UnknownCheck(String),

    #[error("parse error: {0}")]
    Parse(String),
}
