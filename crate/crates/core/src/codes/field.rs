//! The fields F₂, F₃ and F₄ = F₂[ω]/(ω² + ω + 1).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Element of F_q, q ∈ {2, 3, 4}. For q = 4 the value packs a + bω as a + 2b.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteFieldElem {
    q: u8,
    v: u8,
}

pub fn is_supported(q: u8) -> bool {
    matches!(q, 2..=4)
}

impl FiniteFieldElem {
    /// `v` is reduced mod q (q prime) or read as a + 2b (q = 4).
    pub fn new(q: u8, v: u8) -> Self {
        assert!(is_supported(q), "unsupported field order {q}");
        Self { q, v: v % q }
    }

    pub fn from_int(q: u8, v: i64) -> Self {
        Self::new(q, v.rem_euclid(i64::from(q)) as u8)
    }

    /// a + bω in F₄.
    pub fn f4(a: u8, b: u8) -> Self {
        Self {
            q: 4,
            v: (a & 1) | ((b & 1) << 1),
        }
    }

    pub fn zero(q: u8) -> Self {
        Self::new(q, 0)
    }

    pub fn one(q: u8) -> Self {
        Self::new(q, 1)
    }

    pub fn q(self) -> u8 {
        self.q
    }

    pub fn value(self) -> u8 {
        self.v
    }

    pub fn is_zero(self) -> bool {
        self.v == 0
    }

    /// All field elements, zero first.
    pub fn all(q: u8) -> Vec<Self> {
        (0..q).map(|v| Self::new(q, v)).collect()
    }

    pub fn inv(self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Self::all(self.q)
            .into_iter()
            .find(|x| self * *x == Self::one(self.q))
    }

    /// Frobenius x ↦ x² on F₄ (ω ↦ ω²); identity on the prime fields.
    pub fn conj(self) -> Self {
        match self.q {
            4 => self * self,
            _ => self,
        }
    }
}

impl Add for FiniteFieldElem {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        debug_assert_eq!(self.q, o.q);
        match self.q {
            4 => Self {
                q: 4,
                v: self.v ^ o.v,
            },
            q => Self {
                q,
                v: (self.v + o.v) % q,
            },
        }
    }
}

impl Neg for FiniteFieldElem {
    type Output = Self;
    fn neg(self) -> Self {
        match self.q {
            4 => self,
            q => Self {
                q,
                v: (q - self.v) % q,
            },
        }
    }
}

impl Sub for FiniteFieldElem {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + -o
    }
}

impl Mul for FiniteFieldElem {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        debug_assert_eq!(self.q, o.q);
        match self.q {
            4 => {
                let (a, b) = (self.v & 1, self.v >> 1);
                let (c, d) = (o.v & 1, o.v >> 1);
                // ω² = ω + 1
                let re = (a & c) ^ (b & d);
                let om = (a & d) ^ (b & c) ^ (b & d);
                Self {
                    q: 4,
                    v: re | (om << 1),
                }
            }
            q => Self {
                q,
                v: (self.v * o.v) % q,
            },
        }
    }
}

impl fmt::Display for FiniteFieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.q, self.v) {
            (4, 2) => f.write_str("w"),
            (4, 3) => f.write_str("w^2"),
            (_, v) => write!(f, "{v}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_axioms_exhaustively() {
        for q in 2..=4u8 {
            let all = FiniteFieldElem::all(q);
            let (zero, one) = (FiniteFieldElem::zero(q), FiniteFieldElem::one(q));
            for &a in &all {
                assert_eq!(a + zero, a);
                assert_eq!(a * one, a);
                assert_eq!(a + -a, zero);
                if !a.is_zero() {
                    assert_eq!(a * a.inv().unwrap(), one);
                }
                for &b in &all {
                    assert_eq!(a + b, b + a);
                    assert_eq!(a * b, b * a);
                    assert_eq!((a + b).conj(), a.conj() + b.conj());
                    assert_eq!((a * b).conj(), a.conj() * b.conj());
                    for &c in &all {
                        assert_eq!(a * (b + c), a * b + a * c);
                        assert_eq!(a * b * c, a * (b * c));
                    }
                }
            }
        }
    }

    #[test]
    fn f4_structure() {
        let w = FiniteFieldElem::f4(0, 1);
        let one = FiniteFieldElem::one(4);
        let w2 = w * w;
        assert_eq!(w2, w + one);
        assert_eq!(w.conj(), w2);
        assert_eq!(w2 * w, one);
        assert_eq!(w.to_string(), "w");
    }
}
