//! Exact roots of rational univariate polynomials in Q and Q(ζ₂₄).
//!
//! Roots are located numerically, snapped to nearby rationals and then accepted
//! only after an exact evaluation returns zero, so the numerics never decide
//! correctness. Polynomials are coefficient vectors, degree 0 first.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::cyclotomic::CycNum;
use super::rational::{convergents, int, round_dyadic, to_f64, Rational};

pub fn eval(p: &[Rational], x: &Rational) -> Rational {
    p.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
}

fn trim(mut p: Vec<Rational>) -> Vec<Rational> {
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn degree(p: &[Rational]) -> usize {
    p.len().saturating_sub(1)
}

/// Quotient and remainder of `p` divided by the monic or non-monic `d`.
pub fn div_rem(p: &[Rational], d: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let d = trim(d.to_vec());
    let lead = d.last().expect("nonzero divisor").clone();
    assert!(!lead.is_zero(), "nonzero divisor");
    let mut rem = trim(p.to_vec());
    if rem.len() < d.len() {
        return (vec![Rational::zero()], rem);
    }
    let mut quot = vec![Rational::zero(); rem.len() - d.len() + 1];
    for shift in (0..quot.len()).rev() {
        let c = &rem[shift + d.len() - 1] / &lead;
        if !c.is_zero() {
            for (j, dj) in d.iter().enumerate() {
                rem[shift + j] -= &c * dj;
            }
        }
        quot[shift] = c;
    }
    rem.truncate(d.len() - 1);
    (
        quot,
        trim(if rem.is_empty() {
            vec![Rational::zero()]
        } else {
            rem
        }),
    )
}

fn divides(p: &[Rational], d: &[Rational]) -> Option<Vec<Rational>> {
    let (q, r) = div_rem(p, d);
    r.iter().all(Zero::is_zero).then_some(q)
}

/// Complex roots in double precision (Durand–Kerner), multiplicities included.
pub fn numeric_roots(p: &[Rational]) -> Vec<(f64, f64)> {
    let p = trim(p.to_vec());
    let n = degree(&p);
    if n == 0 {
        return Vec::new();
    }
    let lead = &p[n];
    let c: Vec<f64> = p.iter().map(|x| to_f64(&(x / lead))).collect();
    let radius = 1.0 + c[..n].iter().fold(0.0f64, |m, x| m.max(x.abs()));
    let mut z: Vec<(f64, f64)> = (0..n)
        .map(|k| {
            let t = 2.0 * std::f64::consts::PI * k as f64 / n as f64 + 0.4;
            (radius * t.cos(), radius * t.sin())
        })
        .collect();
    let mul = |a: (f64, f64), b: (f64, f64)| (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0);
    let div = |a: (f64, f64), b: (f64, f64)| {
        let d = b.0 * b.0 + b.1 * b.1;
        ((a.0 * b.0 + a.1 * b.1) / d, (a.1 * b.0 - a.0 * b.1) / d)
    };
    for _ in 0..2000 {
        let mut moved = 0.0f64;
        for i in 0..n {
            let value = c.iter().rev().fold((0.0, 0.0), |acc, &ck| {
                let m = mul(acc, z[i]);
                (m.0 + ck, m.1)
            });
            let mut denom = (1.0, 0.0);
            for j in 0..n {
                if j != i {
                    denom = mul(denom, (z[i].0 - z[j].0, z[i].1 - z[j].1));
                }
            }
            if denom == (0.0, 0.0) {
                denom = (1e-12, 1e-12);
            }
            let step = div(value, denom);
            z[i] = (z[i].0 - step.0, z[i].1 - step.1);
            moved = moved.max(step.0.hypot(step.1) / (1.0 + z[i].0.hypot(z[i].1)));
        }
        if moved < 1e-15 {
            break;
        }
    }
    z
}

/// Snaps a real approximation to a rational root of `p`, if one is nearby.
fn snap_rational(p: &[Rational], approx: f64) -> Option<Rational> {
    if !approx.is_finite() {
        return None;
    }
    let nearest = Rational::from_integer(BigInt::from(approx.round() as i64));
    if eval(p, &nearest).is_zero() {
        return Some(nearest);
    }
    let deriv: Vec<Rational> = p
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| c * int(k as i64))
        .collect();
    let mut x = Rational::from_float(approx)?;
    let max_den = BigInt::one() << 64u32;
    for bits in [64u32, 128, 256] {
        for c in convergents(&x, &max_den) {
            if eval(p, &c).is_zero() {
                return Some(c);
            }
        }
        let d = eval(&deriv, &x);
        if d.is_zero() {
            return None;
        }
        x = round_dyadic(&(&x - eval(p, &x) / d), bits);
    }
    None
}

/// Distinct rational roots of `p`, ascending, each verified exactly.
pub fn rational_roots(p: &[Rational]) -> Vec<Rational> {
    let mut rest = trim(p.to_vec());
    let mut found: Vec<Rational> = Vec::new();
    // Clustered roots can all snap to one neighbour, so deflate and search the
    // quotient again until a round adds nothing.
    loop {
        let before = found.len();
        for (re, im) in numeric_roots(&rest.clone()) {
            if degree(&rest) == 0 {
                break;
            }
            if im.abs() > 1e-6 * (1.0 + re.abs()) {
                continue;
            }
            if let Some(r) = snap_rational(&rest, re) {
                while let Some(q) = divides(&rest, &[-r.clone(), Rational::one()]) {
                    rest = q;
                }
                found.push(r);
            }
        }
        if found.len() == before || degree(&rest) == 0 {
            break;
        }
    }
    found.sort();
    found.dedup();
    found
}

/// Roots of `p` in Q(ζ₂₄) when `p` factors into linear and quadratic factors over
/// Q whose discriminants are rational squares times one of ±1, ±2, ±3, ±6.
/// Returns the distinct roots, or None if some factor is out of reach.
pub fn cyclotomic_roots(p: &[Rational]) -> Option<Vec<CycNum>> {
    let mut rest = trim(p.to_vec());
    let mut roots: Vec<CycNum> = Vec::new();
    for r in rational_roots(&rest) {
        while let Some(q) = divides(&rest, &[-r.clone(), Rational::one()]) {
            rest = q;
        }
        roots.push(CycNum::from_rational(r));
    }
    while degree(&rest) > 0 {
        let approx = numeric_roots(&rest);
        let quad = find_quadratic(&rest, &approx)?;
        while let Some(q) = divides(&rest, &quad) {
            rest = q;
        }
        // x² + bx + c with roots (−b ± √(b² − 4c))/2
        let (c, b) = (&quad[0], &quad[1]);
        let disc = b * b - int(4) * c;
        let s = CycNum::sqrt_of_rational(&disc)?;
        let half = Rational::new(BigInt::one(), BigInt::from(2));
        let mb = CycNum::from_rational(-b.clone());
        roots.push((&mb + &s).scale(&half));
        roots.push((&mb - &s).scale(&half));
    }
    roots.sort();
    roots.dedup();
    Some(roots)
}

/// A monic rational quadratic factor x² + bx + c built from a pair of approximate roots.
fn find_quadratic(p: &[Rational], approx: &[(f64, f64)]) -> Option<Vec<Rational>> {
    let max_den = BigInt::one() << 40u32;
    for a in 0..approx.len() {
        for b in a + 1..approx.len() {
            let (x, y) = (approx[a], approx[b]);
            let sum = (x.0 + y.0, x.1 + y.1);
            let prod = (x.0 * y.0 - x.1 * y.1, x.0 * y.1 + x.1 * y.0);
            let tol = |v: (f64, f64)| v.1.abs() < 1e-6 * (1.0 + v.0.abs());
            if !tol(sum) || !tol(prod) {
                continue;
            }
            let sum_r = candidates(sum.0, &max_den);
            let prod_r = candidates(prod.0, &max_den);
            for s in &sum_r {
                for q in &prod_r {
                    let quad = vec![q.clone(), -s.clone(), Rational::one()];
                    if divides(p, &quad).is_some() {
                        return Some(quad);
                    }
                }
            }
        }
    }
    None
}

fn candidates(v: f64, max_den: &BigInt) -> Vec<Rational> {
    let Some(x) = Rational::from_float(v) else {
        return Vec::new();
    };
    let mut out = convergents(&x, max_den);
    out.reverse();
    out.truncate(4);
    out.push(Rational::from_integer(BigInt::from(v.round() as i64)));
    out
}

impl CycNum {
    /// A square root of `r` in Q(ζ₂₄), if there is one of the form q·√D with
    /// D ∈ {±1, ±2, ±3, ±6}.
    pub fn sqrt_of_rational(r: &Rational) -> Option<CycNum> {
        if r.is_zero() {
            return Some(CycNum::zero());
        }
        let k = CycNum::named();
        let i = k.i.clone();
        let sqrt6 = &k.sqrt2 * &k.sqrt3;
        let table: [(i64, CycNum); 8] = [
            (1, CycNum::one()),
            (-1, i.clone()),
            (2, k.sqrt2.clone()),
            (-2, &i * &k.sqrt2),
            (3, k.sqrt3.clone()),
            (-3, &i * &k.sqrt3),
            (6, sqrt6.clone()),
            (-6, &i * &sqrt6),
        ];
        for (d, root) in table {
            let q = r / int(d);
            if q.is_negative() {
                continue;
            }
            if let Some(s) = rational_sqrt(&q) {
                return Some(root.scale(&s));
            }
        }
        None
    }
}

fn rational_sqrt(q: &Rational) -> Option<Rational> {
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    (&n * &n == *q.numer() && &d * &d == *q.denom()).then(|| Rational::new(n, d))
}
