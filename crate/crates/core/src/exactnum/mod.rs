//! Exact scalars: rationals and the cyclotomic field Q(ζ₂₄).
//!
//! Every matrix entry of the four code groups (1/√2, 1/√3, 1/2, i, e^{2πi/3})
//! lives in Q(ζ₂₄), so a single fixed-conductor type covers all of them.

mod cyclotomic;
mod rational;
pub mod roots;

pub use cyclotomic::{ComplexApprox, CycNum, NamedConstants, DEGREE};
pub use rational::{
    bit_size, convergents, format_rational, int, lcm_of_denominators, parse_rational, rat,
    round_dyadic, to_f64, Rational,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("malformed number `{0}`")]
    BadNumber(String),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("unexpected `{found}` at byte {pos}")]
    Unexpected { pos: usize, found: String },
    #[error("empty expression")]
    Empty,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("division by zero")]
pub struct DivisionByZero;
