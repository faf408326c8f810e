//! Polynomial arithmetic over pluggable coefficient rings.

pub mod dense;
pub mod ops;
pub mod parse;
pub mod ring;
pub mod serial;
pub mod sparse;

#[cfg(test)]
mod tests;

use thiserror::Error;

use crate::gf::FieldError;

pub use ops::{
    divide_with_remainder, eval_rational, exact_divide, gcd_univariate, q_add, q_inv, q_mul, roots_dense,
    roots_in_field, substitute, Binding, Cleared,
};
pub use parse::{parse, parse_poly};
pub use ring::{GfRing, QuotientRing, RatFunc, RatFuncRing, Rationals, Ring};
pub use sparse::{Monomial, SparsePoly};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PolyError {
    #[error("coefficient domains differ: {0} vs {1}")]
    DomainMismatch(String, String),
    #[error("division leaves a nonzero remainder")]
    InexactDivision,
    #[error("divisor is not monic in {0}")]
    NotMonic(String),
    #[error("a denominator vanishes at the substituted point")]
    DenominatorVanishes,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("unknown variable {0}")]
    UnknownVariable(String),
    #[error("polynomial is not univariate in {0}")]
    NotUnivariate(String),
    #[error("residue is not invertible; gcd with the modulus is {0}")]
    NotInvertible(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("serialization: {0}")]
    Serialization(String),
    #[error(transparent)]
    Field(#[from] FieldError),
}
