//! Exact linear algebra over [`Rational`] and [`CycNum`].
//!
//! Dense matrices provide rref/kernel/solve; [`SpanTracker`] is the incremental
//! sparse independence test, and [`IntegerSpan`] is the integer-vector variant used
//! in the Terwilliger basis closure where every candidate has integer entries.

mod intspan;
mod matrix;
mod span;

pub use intspan::IntegerSpan;
pub use matrix::{charpoly, inverse, kernel_basis, rank, rref, solve, Matrix, Rref, SparseMatrix};
pub use span::{SpanTracker, SparseVec};

use std::fmt::Debug;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::exactnum::{bit_size, CycNum, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
}

/// A field with exact arithmetic.
pub trait Field: Clone + PartialEq + Debug + Send + Sync + Zero + One {
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    fn inverse(&self) -> Option<Self>;
    /// Heuristic size used to prefer small pivots.
    fn size(&self) -> u64;
    fn from_rational(r: Rational) -> Self;
    fn from_i64(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(n.into()))
    }
}

impl Field for Rational {
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn inverse(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| self.recip())
    }
    fn size(&self) -> u64 {
        bit_size(self)
    }
    fn from_rational(r: Rational) -> Self {
        r
    }
}

impl Field for CycNum {
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn inverse(&self) -> Option<Self> {
        self.inv().ok()
    }
    fn size(&self) -> u64 {
        self.coeffs().iter().map(bit_size).sum()
    }
    fn from_rational(r: Rational) -> Self {
        CycNum::from_rational(r)
    }
}
