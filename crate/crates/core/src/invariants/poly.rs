//! Bivariate polynomials over Q(ζ₂₄).

use std::collections::BTreeMap;
use std::fmt;

use crate::exactnum::{format_rational, int, CycNum, Rational};
use crate::matgroup::Mat2;

/// Sparse polynomial: (deg x, deg y) → nonzero coefficient.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BivarPoly {
    terms: BTreeMap<(u32, u32), CycNum>,
}

impl BivarPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: CycNum) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn one() -> Self {
        Self::constant(CycNum::one())
    }

    pub fn x() -> Self {
        Self::monomial(CycNum::one(), 1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(CycNum::one(), 0, 1)
    }

    pub fn monomial(c: CycNum, a: u32, b: u32) -> Self {
        let mut p = Self::zero();
        p.add_term(a, b, &c);
        p
    }

    /// Integer coefficients with a common rational factor, e.g. the printed forms.
    pub fn from_integer_terms(factor: Rational, terms: &[(i64, u32, u32)]) -> Self {
        let mut p = Self::zero();
        for &(c, a, b) in terms {
            p.add_term(a, b, &CycNum::from_rational(&factor * int(c)));
        }
        p
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &CycNum)> {
        self.terms.iter().map(|(&(a, b), c)| (a, b, c))
    }

    pub fn coeff(&self, a: u32, b: u32) -> CycNum {
        self.terms
            .get(&(a, b))
            .cloned()
            .unwrap_or_else(CycNum::zero)
    }

    /// Number of nonzero terms.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, a: u32, b: u32, c: &CycNum) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((a, b)).or_insert_with(CycNum::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(a, b));
        }
    }

    /// Common total degree, or None for zero and mixed-degree polynomials.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(|&(a, b)| a + b);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn is_rational(&self) -> bool {
        self.terms.values().all(|c| c.as_rational().is_some())
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (a, b, c) in other.terms() {
            out.add_term(a, b, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&CycNum::from_int(-1)))
    }

    pub fn scale(&self, s: &CycNum) -> Self {
        let mut out = Self::zero();
        for (a, b, c) in self.terms() {
            out.add_term(a, b, &(c * s));
        }
        out
    }

    pub fn scale_rational(&self, s: &Rational) -> Self {
        self.scale(&CycNum::from_rational(s.clone()))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, b, c) in self.terms() {
            for (a2, b2, c2) in other.terms() {
                out.add_term(a + a2, b + b2, &(c * c2));
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Substitution (x, y) → (σ₁₁x + σ₁₂y, σ₂₁x + σ₂₂y).
    pub fn act_on(&self, sigma: &Mat2) -> Self {
        let (max_a, max_b) = self
            .terms
            .keys()
            .fold((0, 0), |(ma, mb), &(a, b)| (ma.max(a), mb.max(b)));
        let l1 = Self::linear(sigma.entry(0, 0), sigma.entry(0, 1));
        let l2 = Self::linear(sigma.entry(1, 0), sigma.entry(1, 1));
        let p1 = powers(&l1, max_a);
        let p2 = powers(&l2, max_b);
        let mut out = Self::zero();
        for (a, b, c) in self.terms() {
            out = out.add(&p1[a as usize].mul(&p2[b as usize]).scale(c));
        }
        out
    }

    /// αx + βy.
    pub fn linear(alpha: &CycNum, beta: &CycNum) -> Self {
        let mut p = Self::zero();
        p.add_term(1, 0, alpha);
        p.add_term(0, 1, beta);
        p
    }

    pub fn d_dx(&self) -> Self {
        let mut out = Self::zero();
        for (a, b, c) in self.terms() {
            if a > 0 {
                out.add_term(a - 1, b, &c.scale(&int(i64::from(a))));
            }
        }
        out
    }

    pub fn d_dy(&self) -> Self {
        let mut out = Self::zero();
        for (a, b, c) in self.terms() {
            if b > 0 {
                out.add_term(a, b - 1, &c.scale(&int(i64::from(b))));
            }
        }
        out
    }

    /// Text form `c * x^a y^b + …`, highest power of x first.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.terms
            .iter()
            .rev()
            .map(|(&(a, b), c)| {
                let coeff = match c.as_rational() {
                    Some(r) => format_rational(r),
                    None => format!("({})", c.to_text()),
                };
                let mono: Vec<String> = [("x", a), ("y", b)]
                    .iter()
                    .filter(|(_, e)| *e > 0)
                    .map(|(v, e)| {
                        if *e == 1 {
                            (*v).to_string()
                        } else {
                            format!("{v}^{e}")
                        }
                    })
                    .collect();
                if mono.is_empty() {
                    coeff
                } else {
                    format!("{coeff} * {}", mono.join(" "))
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// Coefficients over the degree-d monomials x^d, x^(d-1)y, …, y^d.
    pub fn coefficient_vector(&self, d: u32) -> Vec<CycNum> {
        (0..=d).rev().map(|a| self.coeff(a, d - a)).collect()
    }

    /// Rational coefficient map; None if some coefficient is irrational.
    pub fn rational_terms(&self) -> Option<Vec<(u32, u32, Rational)>> {
        self.terms()
            .map(|(a, b, c)| c.as_rational().map(|r| (a, b, r.clone())))
            .collect()
    }
}

/// p⁰..pⁿ.
pub fn powers(p: &BivarPoly, n: u32) -> Vec<BivarPoly> {
    let mut out = vec![BivarPoly::one()];
    for k in 0..n as usize {
        let next = out[k].mul(p);
        out.push(next);
    }
    out
}

impl fmt::Display for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}
