//! Span of integer vectors over Q, tested exactly with fraction-free elimination.
//!
//! Rows are kept primitive (content 1) in echelon order. Arithmetic runs in `i128`
//! with overflow checks and switches permanently to `BigInt` on the first overflow.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use super::LinalgError;
use crate::exactnum::Rational;

trait Int: Clone + PartialEq + Sized {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    /// a·x − b·y
    fn mul_sub(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self>;
    fn gcd_with(&self, other: &Self) -> Self;
    fn div_exact(&self, d: &Self) -> Self;
    fn is_neg(&self) -> bool;
    fn negate(&self) -> Self;
    fn is_large(&self) -> bool;
}

impl Int for i128 {
    fn zero() -> Self {
        0
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn mul_sub(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self> {
        a.checked_mul(*x)?.checked_sub(b.checked_mul(*y)?)
    }
    fn gcd_with(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
    fn is_neg(&self) -> bool {
        *self < 0
    }
    fn negate(&self) -> Self {
        -*self
    }
    fn is_large(&self) -> bool {
        self.unsigned_abs() > (1u128 << 40)
    }
}

impl Int for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn mul_sub(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self> {
        Some(a * x - b * y)
    }
    fn gcd_with(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
    fn is_neg(&self) -> bool {
        self.is_negative()
    }
    fn negate(&self) -> Self {
        -self
    }
    fn is_large(&self) -> bool {
        true
    }
}

#[derive(Clone, Debug)]
struct Row<T> {
    pivot: usize,
    values: Vec<T>,
}

#[derive(Clone, Debug)]
enum Storage {
    Small(Vec<Row<i128>>),
    Big(Vec<Row<BigInt>>),
}

#[derive(Clone, Debug)]
pub struct IntegerSpan {
    dim: usize,
    storage: Storage,
}

fn make_primitive<T: Int>(v: &mut [T]) {
    let mut g = T::zero();
    for x in v.iter() {
        if !x.is_zero() {
            g = g.gcd_with(x);
        }
    }
    if g.is_zero() {
        return;
    }
    let lead_neg = v.iter().find(|x| !x.is_zero()).is_some_and(T::is_neg);
    let g = if lead_neg { g.negate() } else { g };
    for x in v.iter_mut() {
        if !x.is_zero() {
            *x = x.div_exact(&g);
        }
    }
}

/// Eliminates every stored pivot from `v`; `None` on overflow.
fn reduce<T: Int>(rows: &[Row<T>], mut v: Vec<T>) -> Option<Vec<T>> {
    for row in rows {
        let p = row.pivot;
        if v[p].is_zero() {
            continue;
        }
        let g = row.values[p].gcd_with(&v[p]);
        let a = row.values[p].div_exact(&g);
        let b = v[p].div_exact(&g);
        let mut large = false;
        for (x, r) in v.iter_mut().zip(&row.values) {
            if x.is_zero() && r.is_zero() {
                continue;
            }
            *x = T::mul_sub(&a, x, &b, r)?;
            large |= x.is_large();
        }
        if large {
            make_primitive(&mut v);
        }
    }
    Some(v)
}

fn insert<T: Int>(rows: &mut Vec<Row<T>>, mut rem: Vec<T>) -> bool {
    let Some(pivot) = rem.iter().position(|x| !Int::is_zero(x)) else {
        return false;
    };
    make_primitive(&mut rem);
    let at = rows.partition_point(|r| r.pivot < pivot);
    rows.insert(at, Row { pivot, values: rem });
    true
}

fn widen(rows: &[Row<i128>]) -> Vec<Row<BigInt>> {
    rows.iter()
        .map(|r| Row {
            pivot: r.pivot,
            values: r.values.iter().map(|&x| BigInt::from(x)).collect(),
        })
        .collect()
}

impl IntegerSpan {
    pub fn new(dim: usize) -> Self {
        IntegerSpan {
            dim,
            storage: Storage::Small(Vec::new()),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        match &self.storage {
            Storage::Small(r) => r.len(),
            Storage::Big(r) => r.len(),
        }
    }

    fn check(&self, len: usize) -> Result<(), LinalgError> {
        if len != self.dim {
            return Err(LinalgError::DimensionMismatch {
                expected: self.dim,
                got: len,
            });
        }
        Ok(())
    }

    fn go_big(&mut self) -> &mut Vec<Row<BigInt>> {
        if let Storage::Small(rows) = &self.storage {
            self.storage = Storage::Big(widen(rows));
        }
        match &mut self.storage {
            Storage::Big(rows) => rows,
            Storage::Small(_) => unreachable!(),
        }
    }

    /// Remainder of `v` after elimination, or `None` if it lies in the span.
    fn remainder_small(&mut self, v: &[i64]) -> Option<Result<Vec<i128>, Vec<BigInt>>> {
        if let Storage::Small(rows) = &self.storage {
            let wide: Vec<i128> = v.iter().map(|&x| i128::from(x)).collect();
            if let Some(rem) = reduce(rows, wide) {
                return rem.iter().any(|x| *x != 0).then_some(Ok(rem));
            }
        }
        let big: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
        let rows = self.go_big();
        let rem = reduce(rows, big).expect("bigint reduction cannot overflow");
        rem.iter().any(|x| !Int::is_zero(x)).then_some(Err(rem))
    }

    pub fn contains(&mut self, v: &[i64]) -> Result<bool, LinalgError> {
        self.check(v.len())?;
        Ok(self.remainder_small(v).is_none())
    }

    /// Adds `v`; returns true iff it enlarged the span.
    pub fn add(&mut self, v: &[i64]) -> Result<bool, LinalgError> {
        self.check(v.len())?;
        match self.remainder_small(v) {
            None => Ok(false),
            Some(Ok(rem)) => match &mut self.storage {
                Storage::Small(rows) => Ok(insert(rows, rem)),
                Storage::Big(_) => unreachable!(),
            },
            Some(Err(rem)) => Ok(insert(self.go_big(), rem)),
        }
    }

    pub fn add_bigint(&mut self, v: &[BigInt]) -> Result<bool, LinalgError> {
        self.check(v.len())?;
        if let Storage::Small(rows) = &mut self.storage {
            let narrow: Option<Vec<i128>> = v.iter().map(ToPrimitive::to_i128).collect();
            if let Some(rem) = narrow.and_then(|n| reduce(rows, n)) {
                return Ok(insert(rows, rem));
            }
        }
        let rows = self.go_big();
        let rem = reduce(rows, v.to_vec()).expect("bigint reduction cannot overflow");
        Ok(insert(rows, rem))
    }

    /// Stored echelon rows as rationals.
    pub fn rows(&self) -> Vec<Vec<Rational>> {
        match &self.storage {
            Storage::Small(rows) => rows
                .iter()
                .map(|r| {
                    r.values
                        .iter()
                        .map(|&x| Rational::from_integer(x.into()))
                        .collect()
                })
                .collect(),
            Storage::Big(rows) => rows
                .iter()
                .map(|r| {
                    r.values
                        .iter()
                        .map(|x| Rational::from_integer(x.clone()))
                        .collect()
                })
                .collect(),
        }
    }

    pub fn is_big(&self) -> bool {
        matches!(self.storage, Storage::Big(_))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::int;
    use crate::linalg::{Matrix, SpanTracker};
    use proptest::prelude::*;

    #[test]
    fn basic() {
        let mut s = IntegerSpan::new(3);
        assert!(s.add(&[2, 0, 0]).unwrap());
        assert!(!s.add(&[1, 0, 0]).unwrap());
        assert!(s.add(&[1, 3, 0]).unwrap());
        assert!(s.contains(&[0, 6, 0]).unwrap());
        assert!(!s.contains(&[0, 0, 1]).unwrap());
        assert_eq!(s.rank(), 2);
        assert!(s.add(&[1, 2]).is_err());
    }

    #[test]
    fn overflow_switches_to_bigint() {
        let big = i64::MAX;
        let rows = [[big, 1, 0, 0], [0, big, 1, 0], [1, 0, big, 1]];
        let mut s = IntegerSpan::new(4);
        let mut t = SpanTracker::new(4);
        for r in &rows {
            let q: Vec<_> = r.iter().map(|&x| int(x)).collect();
            assert_eq!(s.add(r).unwrap(), t.add_dense(&q).unwrap());
        }
        assert!(s.is_big());
        assert_eq!(s.rank(), 3);
        assert!(s.contains(&[big, 1, 0, 0]).unwrap());
        assert!(!s.contains(&[0, 0, 0, 1]).unwrap() || t.rank() == 4);
    }

    #[test]
    fn bigint_entries() {
        let mut s = IntegerSpan::new(2);
        let huge: BigInt = BigInt::from(1u8) << 200usize;
        assert!(s.add_bigint(&[huge.clone(), BigInt::from(1)]).unwrap());
        assert!(s.is_big());
        assert!(!s.add_bigint(&[huge.clone() * 3, BigInt::from(3)]).unwrap());
        assert!(s.add(&[0, 1]).unwrap());
    }

    proptest! {
        #[test]
        fn agrees_with_rational_tracker(vecs in prop::collection::vec(prop::collection::vec(-4i64..5, 6), 1..10)) {
            let mut a = IntegerSpan::new(6);
            let mut b = SpanTracker::new(6);
            for v in &vecs {
                let q: Vec<_> = v.iter().map(|&x| int(x)).collect();
                prop_assert_eq!(a.add(v).unwrap(), b.add_dense(&q).unwrap());
            }
            let m = Matrix::from_rows(a.rows());
            prop_assert_eq!(crate::linalg::rank(&m), b.rank());
        }
    }
}
