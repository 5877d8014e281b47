//! Arithmetic in Q(ζ₂₄) using the power basis 1, ζ, …, ζ⁷ modulo Φ₂₄(x) = x⁸ − x⁴ + 1.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::rational::{format_rational, int, parse_rational, rat, Rational};
use super::{DivisionByZero, ParseError};
use crate::linalg::{self, Matrix};

/// Degree of Q(ζ₂₄) over Q.
pub const DEGREE: usize = 8;

/// Element Σ c_m ζ₂₄^m, m = 0..7, in canonical (reduced) form.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct CycNum {
    coeffs: [Rational; DEGREE],
}

pub struct NamedConstants {
    pub sqrt2: CycNum,
    pub sqrt3: CycNum,
    pub i: CycNum,
    pub omega3: CycNum,
}

impl CycNum {
    pub fn zero() -> Self {
        CycNum {
            coeffs: std::array::from_fn(|_| Rational::zero()),
        }
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_rational(r: Rational) -> Self {
        let mut out = Self::zero();
        out.coeffs[0] = r;
        out
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(int(n))
    }

    pub fn from_coeffs(coeffs: [Rational; DEGREE]) -> Self {
        CycNum { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational; DEGREE] {
        &self.coeffs
    }

    /// ζ₂₄^m for any integer exponent.
    pub fn zeta_pow(m: i64) -> Self {
        let m = m.rem_euclid(24) as usize;
        let mut raw = vec![Rational::zero(); m.max(DEGREE - 1) + 1];
        raw[m] = Rational::one();
        Self::reduce(raw)
    }

    pub fn named() -> NamedConstants {
        NamedConstants {
            sqrt2: Self::zeta_pow(3) + Self::zeta_pow(-3),
            sqrt3: Self::zeta_pow(2) + Self::zeta_pow(-2),
            i: Self::zeta_pow(6),
            omega3: Self::zeta_pow(8),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The rational value if the element lies in Q.
    pub fn as_rational(&self) -> Option<&Rational> {
        self.coeffs[1..]
            .iter()
            .all(Zero::is_zero)
            .then_some(&self.coeffs[0])
    }

    pub fn scale(&self, r: &Rational) -> Self {
        CycNum {
            coeffs: std::array::from_fn(|m| &self.coeffs[m] * r),
        }
    }

    /// Reduces an arbitrary-length coefficient list modulo x⁸ − x⁴ + 1.
    fn reduce(mut raw: Vec<Rational>) -> Self {
        // x^k = x^(k-4) - x^(k-8) for k >= 8
        for k in (DEGREE..raw.len()).rev() {
            let top = std::mem::take(&mut raw[k]);
            if top.is_zero() {
                continue;
            }
            raw[k - 4] += &top;
            raw[k - 8] -= &top;
        }
        raw.resize(DEGREE, Rational::zero());
        let mut it = raw.into_iter();
        CycNum {
            coeffs: std::array::from_fn(|_| it.next().unwrap()),
        }
    }

    /// Complex conjugation ζ ↦ ζ⁻¹.
    pub fn conj(&self) -> Self {
        let mut out = Self::zero();
        for (m, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            out += &Self::zeta_pow(-(m as i64)).scale(c);
        }
        out
    }

    /// Galois automorphism ζ ↦ ζ^u for u coprime to 24.
    pub fn galois(&self, u: i64) -> Self {
        let mut out = Self::zero();
        for (m, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                out += &Self::zeta_pow(u * m as i64).scale(c);
            }
        }
        out
    }

    /// Matrix of multiplication by `self` in the power basis (column m is self·ζ^m).
    pub fn multiplication_matrix(&self) -> Matrix<Rational> {
        let mut m = Matrix::zeros(DEGREE, DEGREE);
        let mut basis = Self::one();
        let zeta = Self::zeta_pow(1);
        for col in 0..DEGREE {
            let prod = self * &basis;
            for row in 0..DEGREE {
                m.set(row, col, prod.coeffs[row].clone());
            }
            basis = &basis * &zeta;
        }
        m
    }

    /// Multiplicative inverse, found by solving the 8×8 rational system self·x = 1.
    pub fn inv(&self) -> Result<Self, DivisionByZero> {
        if self.is_zero() {
            return Err(DivisionByZero);
        }
        let m = self.multiplication_matrix();
        let mut rhs = vec![Rational::zero(); DEGREE];
        rhs[0] = Rational::one();
        let x = linalg::solve(&m, &rhs).ok_or(DivisionByZero)?;
        let mut it = x.into_iter();
        Ok(CycNum {
            coeffs: std::array::from_fn(|_| it.next().unwrap()),
        })
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Canonical text form, e.g. `1/2 + -3*z^5`; zero prints as `0`.
    pub fn to_text(&self) -> String {
        let mut terms = Vec::new();
        for (m, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let c = format_rational(c);
            terms.push(match m {
                0 => c,
                1 => format!("{c}*z"),
                _ => format!("{c}*z^{m}"),
            });
        }
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ")
        }
    }

    /// Parses a sum of terms. Each term is a product of rationals and the atoms
    /// `z`, `z^k`, `i`, `w` (= e^{2πi/3}), `sqrt2`, `sqrt3`, with an optional leading sign.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        TextParser::new(text).parse()
    }

    /// Rational approximation of the complex value with absolute error below
    /// 2^(−bits+4)·(1 + |exact|).
    pub fn to_complex_approx(&self, bits: u32) -> ComplexApprox {
        let bits = bits.max(53);
        let mut re = [
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
        ];
        let mut im = re.clone();
        for (m, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let cos = cos_15(m as i64);
            let sin = cos_15(6 - m as i64);
            for t in 0..4 {
                re[t] += c * &cos[t];
                im[t] += c * &sin[t];
            }
        }
        let magnitude: Rational = re[1..]
            .iter()
            .chain(im[1..].iter())
            .map(|r| r.abs())
            .fold(Rational::zero(), |a, b| a + b);
        let extra = magnitude.ceil().to_integer().bits() as u32;
        let work = bits + 8 + extra;
        let roots = [
            Rational::one(),
            sqrt_approx(2, work),
            sqrt_approx(3, work),
            sqrt_approx(6, work),
        ];
        let eval = |parts: &[Rational; 4]| -> Rational {
            parts
                .iter()
                .zip(roots.iter())
                .map(|(a, b)| a * b)
                .fold(Rational::zero(), |acc, x| acc + x)
        };
        ComplexApprox {
            re: eval(&re),
            im: eval(&im),
        }
    }

    pub fn to_c64(&self) -> (f64, f64) {
        self.to_complex_approx(53).to_f64()
    }
}

/// Complex number with rational real and imaginary parts.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexApprox {
    pub re: Rational,
    pub im: Rational,
}

impl ComplexApprox {
    pub fn to_f64(&self) -> (f64, f64) {
        (super::to_f64(&self.re), super::to_f64(&self.im))
    }
}

/// cos(15°·m) as coefficients over (1, √2, √3, √6).
fn cos_15(m: i64) -> [Rational; 4] {
    let m = m.rem_euclid(24);
    let m = if m > 12 { 24 - m } else { m };
    let (m, sign) = if m > 6 { (12 - m, -1) } else { (m, 1) };
    let base: [i64; 4] = match m {
        0 => [4, 0, 0, 0],
        1 => [0, 1, 0, 1],
        2 => [0, 0, 2, 0],
        3 => [0, 2, 0, 0],
        4 => [2, 0, 0, 0],
        5 => [0, -1, 0, 1],
        _ => [0, 0, 0, 0],
    };
    std::array::from_fn(|t| rat(sign * base[t], 4))
}

fn sqrt_approx(k: u64, bits: u32) -> Rational {
    let scaled = BigInt::from(k) << (2 * bits);
    BigRational::new(scaled.sqrt(), BigInt::one() << bits)
}

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl Zero for CycNum {
    fn zero() -> Self {
        CycNum::zero()
    }
    fn is_zero(&self) -> bool {
        CycNum::is_zero(self)
    }
}

impl One for CycNum {
    fn one() -> Self {
        CycNum::one()
    }
}

impl<'a> Add<&'a CycNum> for &'a CycNum {
    type Output = CycNum;
    fn add(self, rhs: &CycNum) -> CycNum {
        CycNum {
            coeffs: std::array::from_fn(|m| &self.coeffs[m] + &rhs.coeffs[m]),
        }
    }
}

impl Add for CycNum {
    type Output = CycNum;
    fn add(self, rhs: CycNum) -> CycNum {
        &self + &rhs
    }
}

impl AddAssign<&CycNum> for CycNum {
    fn add_assign(&mut self, rhs: &CycNum) {
        for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs.iter()) {
            *a += b;
        }
    }
}

impl SubAssign<&CycNum> for CycNum {
    fn sub_assign(&mut self, rhs: &CycNum) {
        for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs.iter()) {
            *a -= b;
        }
    }
}

impl<'a> Sub<&'a CycNum> for &'a CycNum {
    type Output = CycNum;
    fn sub(self, rhs: &CycNum) -> CycNum {
        CycNum {
            coeffs: std::array::from_fn(|m| &self.coeffs[m] - &rhs.coeffs[m]),
        }
    }
}

impl Sub for CycNum {
    type Output = CycNum;
    fn sub(self, rhs: CycNum) -> CycNum {
        &self - &rhs
    }
}

impl Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum {
            coeffs: std::array::from_fn(|m| -&self.coeffs[m]),
        }
    }
}

impl Neg for CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        -&self
    }
}

impl<'a> Mul<&'a CycNum> for &'a CycNum {
    type Output = CycNum;
    fn mul(self, rhs: &CycNum) -> CycNum {
        let lhs_zero = self.coeffs.iter().map(Zero::is_zero).collect::<Vec<_>>();
        let mut raw = vec![Rational::zero(); 2 * DEGREE - 1];
        for (a, ca) in self.coeffs.iter().enumerate() {
            if lhs_zero[a] {
                continue;
            }
            for (b, cb) in rhs.coeffs.iter().enumerate() {
                if cb.is_zero() {
                    continue;
                }
                raw[a + b] += ca * cb;
            }
        }
        CycNum::reduce(raw)
    }
}

impl Mul for CycNum {
    type Output = CycNum;
    fn mul(self, rhs: CycNum) -> CycNum {
        &self * &rhs
    }
}

struct TextParser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> TextParser<'a> {
    fn new(src: &'a str) -> Self {
        TextParser { src, pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.as_bytes().get(self.pos).copied()
    }

    fn unexpected(&self) -> ParseError {
        let found = self.src[self.pos..].chars().next().map(String::from);
        ParseError::Unexpected {
            pos: self.pos,
            found: found.unwrap_or_else(|| "end of input".into()),
        }
    }

    fn parse(mut self) -> Result<CycNum, ParseError> {
        self.skip_ws();
        if self.peek().is_none() {
            return Err(ParseError::Empty);
        }
        let mut total = CycNum::zero();
        let mut first = true;
        loop {
            self.skip_ws();
            let mut negative = false;
            match self.peek() {
                Some(b'+') if !first => self.pos += 1,
                Some(b'-') => {
                    self.pos += 1;
                    negative = true;
                }
                None => return Err(self.unexpected()),
                _ if !first => return Err(self.unexpected()),
                _ => {}
            }
            self.skip_ws();
            if !first && self.peek() == Some(b'-') {
                self.pos += 1;
                negative = !negative;
                self.skip_ws();
            }
            let term = self.term()?;
            if negative {
                total -= &term;
            } else {
                total += &term;
            }
            first = false;
            self.skip_ws();
            if self.peek().is_none() {
                return Ok(total);
            }
        }
    }

    fn term(&mut self) -> Result<CycNum, ParseError> {
        let mut acc = self.factor()?;
        loop {
            self.skip_ws();
            if self.peek() != Some(b'*') {
                return Ok(acc);
            }
            self.pos += 1;
            self.skip_ws();
            let f = self.factor()?;
            acc = &acc * &f;
        }
    }

    fn factor(&mut self) -> Result<CycNum, ParseError> {
        let rest = &self.src[self.pos..];
        let named = CycNum::named();
        for (word, value) in [
            ("sqrt2", &named.sqrt2),
            ("sqrt3", &named.sqrt3),
            ("i", &named.i),
            ("w", &named.omega3),
        ] {
            if rest.starts_with(word) {
                self.pos += word.len();
                return Ok(value.clone());
            }
        }
        match self.peek() {
            Some(b'z') => {
                self.pos += 1;
                self.skip_ws();
                if self.peek() != Some(b'^') {
                    return Ok(CycNum::zeta_pow(1));
                }
                self.pos += 1;
                self.skip_ws();
                let start = self.pos;
                while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                    self.pos += 1;
                }
                let digits = &self.src[start..self.pos];
                if digits.is_empty() {
                    return Err(self.unexpected());
                }
                // only the residue mod 24 matters
                let exp = digits
                    .bytes()
                    .fold(0i64, |acc, d| (acc * 10 + i64::from(d - b'0')) % 24);
                Ok(CycNum::zeta_pow(exp))
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                    self.pos += 1;
                }
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    let den_start = self.pos;
                    while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                        self.pos += 1;
                    }
                    if den_start == self.pos {
                        return Err(self.unexpected());
                    }
                }
                let r = parse_rational(&self.src[start..self.pos])?;
                Ok(CycNum::from_rational(r))
            }
            Some(b'(') => {
                self.pos += 1;
                let close = self.src[self.pos..]
                    .find(')')
                    .ok_or_else(|| self.unexpected())?;
                let inner = &self.src[self.pos..self.pos + close];
                if inner.contains('(') {
                    return Err(self.unexpected());
                }
                let v = CycNum::parse(inner)?;
                self.pos += close + 1;
                Ok(v)
            }
            _ => Err(self.unexpected()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;
    use proptest::prelude::*;

    fn z(m: i64) -> CycNum {
        CycNum::zeta_pow(m)
    }

    #[test]
    fn i_squared_is_minus_one() {
        assert_eq!(&z(6) * &z(6), CycNum::from_int(-1));
    }

    #[test]
    fn sqrt2_squared() {
        // (ζ³ + ζ²¹)² = ζ⁶ + 2 + ζ⁴² = ζ⁶ + 2 + ζ¹⁸ = i + 2 − i
        let s = &z(3) + &z(21);
        assert_eq!(&s * &s, CycNum::from_int(2));
        assert_eq!(s, CycNum::named().sqrt2);
    }

    #[test]
    fn named_constants_satisfy_their_equations() {
        let n = CycNum::named();
        assert_eq!(n.sqrt3.pow(2), CycNum::from_int(3));
        assert_eq!(n.omega3.pow(3), CycNum::one());
        assert_ne!(n.omega3, CycNum::one());
        assert_eq!(n.i.pow(4), CycNum::one());
        assert_ne!(n.i.pow(2), CycNum::one());
    }

    #[test]
    fn additive_identity() {
        let a = CycNum::parse("1/2 + 3*z^5").unwrap();
        assert_eq!(&a + &CycNum::zero(), a);
    }

    #[test]
    fn inverses() {
        assert_eq!(CycNum::one().inv().unwrap(), CycNum::one());
        let s = CycNum::named().sqrt2;
        assert_eq!(&s.inv().unwrap() * &s, CycNum::one());
        // ζ²³ = −ζ¹¹ = −ζ³(ζ⁴ − 1) = ζ³ − ζ⁷
        let expect = &z(3) - &z(7);
        assert_eq!(z(1).inv().unwrap(), expect);
        assert_eq!(z(23), expect);
        assert!(CycNum::zero().inv().is_err());
    }

    #[test]
    fn text_round_trip_and_forms() {
        let s = CycNum::named().sqrt2;
        // ζ²¹ = −ζ⁹ = ζ − ζ⁵
        assert_eq!(s.to_text(), "1*z + 1*z^3 + -1*z^5");
        assert_eq!(CycNum::parse(&s.to_text()).unwrap(), s);
        assert_eq!(CycNum::zero().to_text(), "0");
        assert_eq!(CycNum::parse("-1/2*sqrt2").unwrap(), s.scale(&rat(-1, 2)));
        assert_eq!(CycNum::parse("1 - i").unwrap(), &CycNum::one() - &z(6));
        assert_eq!(CycNum::parse("z^30").unwrap(), z(6));
        assert_eq!(
            CycNum::parse("(1 + i)*(1 - i)").unwrap(),
            CycNum::from_int(2)
        );
        assert!(CycNum::parse("").is_err());
        assert!(CycNum::parse("1 +").is_err());
        assert!(CycNum::parse("1 2").is_err());
        assert!(CycNum::parse("q").is_err());
        assert!(CycNum::parse("1/0").is_err());
    }

    #[test]
    fn complex_approximations() {
        let (re, im) = z(6).to_c64();
        assert!(re.abs() < 1e-15 && (im - 1.0).abs() < 1e-15);
        let (re, im) = CycNum::named().sqrt2.to_c64();
        assert!((re - std::f64::consts::SQRT_2).abs() < 1e-15 && im.abs() < 1e-15);
        assert_eq!(CycNum::zero().to_c64(), (0.0, 0.0));
        for m in 0..24 {
            let (re, im) = z(m).to_c64();
            let t = 2.0 * std::f64::consts::PI * m as f64 / 24.0;
            assert!((re - t.cos()).abs() < 1e-14 && (im - t.sin()).abs() < 1e-14);
        }
    }

    #[test]
    fn high_precision_approximation() {
        let a = CycNum::named().sqrt2.to_complex_approx(200);
        // √2 · √2 within 2^-190
        let sq = &a.re * &a.re;
        let err = (sq - rat(2, 1)).abs();
        assert!(err < BigRational::new(BigInt::one(), BigInt::one() << 190));
    }

    fn arb_cyc() -> impl Strategy<Value = CycNum> {
        prop::array::uniform8((-20i64..20, 1i64..6))
            .prop_map(|pairs| CycNum::from_coeffs(pairs.map(|(n, d)| rat(n, d))))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]
        #[test]
        fn ring_axioms(a in arb_cyc(), b in arb_cyc(), c in arb_cyc()) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a - &a).is_zero());
            prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
            prop_assert_eq!((&a + &b).conj(), &a.conj() + &b.conj());
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]
        #[test]
        fn inverse_property(a in arb_cyc()) {
            prop_assume!(!a.is_zero());
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }

        #[test]
        fn text_round_trip(a in arb_cyc()) {
            prop_assert_eq!(CycNum::parse(&a.to_text()).unwrap(), a);
        }
    }
}
