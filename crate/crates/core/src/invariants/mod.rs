//! Invariant theory of the code groups in two variables: group action on
//! polynomials, E-polynomials φ_k, Molien series and generation certificates.

mod poly;
mod series;

pub use poly::{powers, BivarPoly};
pub use series::{expand_product_series, molien_series, reynolds_dimensions, PowerSeries};

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::exactnum::{format_rational, CycNum, Rational};
use crate::linalg::{solve, Matrix};
use crate::matgroup::FiniteMatrixGroup;

/// Terms of the Molien series compared in a generation certificate.
pub const CERTIFICATE_TERMS: usize = 40;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum InvariantError {
    #[error("series needs at least one term")]
    BadTermCount,
    #[error("Molien coefficient {0} is not rational")]
    IrrationalMolien(usize),
    #[error("E-polynomial of degree {0} is not invariant under generator {1}")]
    NotInvariant(u32, usize),
    #[error("{0} is not homogeneous")]
    NotHomogeneous(&'static str),
    #[error("target of degree {0} is not in the span of the generator products")]
    Inconsistent(u32),
}

/// φ_k = (1/|G|) Σ_σ (σ₁₁x + σ₁₂y)^k, checked for invariance under the generators.
pub fn e_polynomial(group: &FiniteMatrixGroup, k: u32) -> Result<BivarPoly, InvariantError> {
    let binom: Vec<Rational> = {
        let mut row = vec![BigInt::from(1)];
        for i in 0..k as usize {
            let next = row[i].clone() * BigInt::from(k as usize - i) / BigInt::from(i + 1);
            row.push(next);
        }
        row.into_iter().map(Rational::from_integer).collect()
    };
    let sum = group
        .elements()
        .par_iter()
        .map(|sigma| {
            let (s11, s12) = (sigma.entry(0, 0), sigma.entry(0, 1));
            let mut p11 = vec![CycNum::one()];
            let mut p12 = vec![CycNum::one()];
            for i in 0..k as usize {
                p11.push(&p11[i] * s11);
                p12.push(&p12[i] * s12);
            }
            let mut out = BivarPoly::zero();
            for a in 0..=k {
                let c = (&p11[a as usize] * &p12[(k - a) as usize]).scale(&binom[a as usize]);
                out = out.add(&BivarPoly::monomial(c, a, k - a));
            }
            out
        })
        .reduce(BivarPoly::zero, |a, b| a.add(&b));
    let phi = sum.scale_rational(&Rational::new(1.into(), group.order().into()));
    for (index, g) in group.generators().iter().enumerate() {
        if phi.act_on(g) != phi {
            return Err(InvariantError::NotInvariant(k, index));
        }
    }
    Ok(phi)
}

/// True iff `p` is fixed by every element of the group.
pub fn is_invariant(group: &FiniteMatrixGroup, p: &BivarPoly) -> bool {
    group
        .elements()
        .par_iter()
        .all(|sigma| p.act_on(sigma) == *p)
}

/// Σ c_mn φ_a^m φ_b^n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expression {
    pub terms: Vec<(u32, u32, CycNum)>,
}

impl Expression {
    pub fn evaluate(&self, phi_a: &BivarPoly, phi_b: &BivarPoly) -> BivarPoly {
        self.terms.iter().fold(BivarPoly::zero(), |acc, (m, n, c)| {
            acc.add(&phi_a.pow(*m).mul(&phi_b.pow(*n)).scale(c))
        })
    }

    pub fn to_text(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(m, n, c)| {
                let coeff = c
                    .as_rational()
                    .map(format_rational)
                    .unwrap_or_else(|| format!("({})", c.to_text()));
                format!("{coeff} * A^{m} B^{n}")
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Writes `target` as a polynomial in `phi_a`, `phi_b` by a linear solve in the
/// degree-D monomial basis, then re-expands to confirm.
pub fn express_in_generators(
    target: &BivarPoly,
    phi_a: &BivarPoly,
    phi_b: &BivarPoly,
) -> Result<Expression, InvariantError> {
    if target.is_zero() {
        return Ok(Expression { terms: Vec::new() });
    }
    let d = target
        .homogeneous_degree()
        .ok_or(InvariantError::NotHomogeneous("target"))?;
    let a = phi_a
        .homogeneous_degree()
        .ok_or(InvariantError::NotHomogeneous("first generator"))?;
    let b = phi_b
        .homogeneous_degree()
        .ok_or(InvariantError::NotHomogeneous("second generator"))?;
    let pairs: Vec<(u32, u32)> = (0..=d)
        .flat_map(|m| (0..=d).map(move |n| (m, n)))
        .filter(|&(m, n)| m * a + n * b == d)
        .collect();
    if pairs.is_empty() {
        return Err(InvariantError::Inconsistent(d));
    }
    let columns: Vec<Vec<CycNum>> = pairs
        .iter()
        .map(|&(m, n)| phi_a.pow(m).mul(&phi_b.pow(n)).coefficient_vector(d))
        .collect();
    let system = Matrix::from_rows(
        (0..=d as usize)
            .map(|r| columns.iter().map(|c| c[r].clone()).collect())
            .collect(),
    );
    let x = solve(&system, &target.coefficient_vector(d)).ok_or(InvariantError::Inconsistent(d))?;
    let expr = Expression {
        terms: pairs
            .into_iter()
            .zip(x)
            .filter(|(_, c)| !c.is_zero())
            .map(|((m, n), c)| (m, n, c))
            .collect(),
    };
    if expr.evaluate(phi_a, phi_b) != *target {
        return Err(InvariantError::Inconsistent(d));
    }
    Ok(expr)
}

/// Jacobian determinant ∂(p, q)/∂(x, y).
pub fn jacobian(p: &BivarPoly, q: &BivarPoly) -> BivarPoly {
    p.d_dx().mul(&q.d_dy()).sub(&p.d_dy().mul(&q.d_dx()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct IdentityCheck {
    pub name: String,
    pub matches: bool,
    /// Expression found, or the failure reason.
    pub detail: String,
}

/// Evidence that C[φ_a, φ_b] is the whole invariant ring: two algebraically
/// independent invariants whose degrees multiply to |G| generate the invariant
/// ring of a two-dimensional reflection group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct GenerationCertificate {
    pub group: String,
    pub generators_degrees: (u32, u32),
    pub invariant: bool,
    pub jacobian_nonzero: bool,
    pub degree_product: u32,
    pub group_order: usize,
    pub molien_match: bool,
    pub target_identities: Vec<IdentityCheck>,
    /// Substitution used by the group action.
    pub action: &'static str,
}

impl GenerationCertificate {
    pub fn passed(&self) -> bool {
        self.invariant
            && self.jacobian_nonzero
            && self.degree_product as usize == self.group_order
            && self.molien_match
            && self.target_identities.iter().all(|c| c.matches)
    }

    /// Names of the failed legs.
    pub fn failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        if !self.invariant {
            out.push("invariance".into());
        }
        if !self.jacobian_nonzero {
            out.push("jacobian".into());
        }
        if self.degree_product as usize != self.group_order {
            out.push("degree product".into());
        }
        if !self.molien_match {
            out.push("molien".into());
        }
        out.extend(
            self.target_identities
                .iter()
                .filter(|c| !c.matches)
                .map(|c| c.name.clone()),
        );
        out
    }
}

pub const ACTION_CONVENTION: &str = "f(x, y) -> f(s11 x + s12 y, s21 x + s22 y)";

/// Runs every certificate leg; `targets` are named invariants that must be
/// expressible in φ_a, φ_b.
pub fn verify_generation(
    group_label: &str,
    group: &FiniteMatrixGroup,
    phi_a: &BivarPoly,
    phi_b: &BivarPoly,
    targets: &[(&str, BivarPoly)],
) -> Result<GenerationCertificate, InvariantError> {
    let a = phi_a
        .homogeneous_degree()
        .ok_or(InvariantError::NotHomogeneous("first generator"))?;
    let b = phi_b
        .homogeneous_degree()
        .ok_or(InvariantError::NotHomogeneous("second generator"))?;
    let invariant = is_invariant(group, phi_a) && is_invariant(group, phi_b);
    let molien = molien_series(group, CERTIFICATE_TERMS)?;
    let product = expand_product_series(a as usize, b as usize, CERTIFICATE_TERMS);
    let target_identities = targets
        .iter()
        .map(|(name, t)| match express_in_generators(t, phi_a, phi_b) {
            Ok(e) => IdentityCheck {
                name: (*name).into(),
                matches: true,
                detail: e.to_text(),
            },
            Err(e) => IdentityCheck {
                name: (*name).into(),
                matches: false,
                detail: e.to_string(),
            },
        })
        .collect();
    Ok(GenerationCertificate {
        group: group_label.into(),
        generators_degrees: (a, b),
        invariant,
        jacobian_nonzero: !jacobian(phi_a, phi_b).is_zero(),
        degree_product: a * b,
        group_order: group.order(),
        molien_match: molien == product,
        target_identities,
        action: ACTION_CONVENTION,
    })
}

/// Term-by-term comparison of a computed polynomial with a printed one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct FormComparison {
    pub label: String,
    pub computed: String,
    pub printed: String,
    pub matches: bool,
    /// Monomials whose coefficients differ, as "x^a y^b: computed vs printed".
    pub differences: Vec<String>,
    /// printed / computed when the two are proportional but unequal.
    pub printed_over_computed: Option<String>,
}

pub fn compare_forms(label: &str, computed: &BivarPoly, printed: &BivarPoly) -> FormComparison {
    let mut keys: Vec<(u32, u32)> = computed
        .terms()
        .chain(printed.terms())
        .map(|(a, b, _)| (a, b))
        .collect();
    keys.sort_unstable_by(|p, q| q.cmp(p));
    keys.dedup();
    let differences: Vec<String> = keys
        .iter()
        .filter_map(|&(a, b)| {
            let (c, p) = (computed.coeff(a, b), printed.coeff(a, b));
            (c != p).then(|| format!("x^{a} y^{b}: {} vs {}", c.to_text(), p.to_text()))
        })
        .collect();
    let ratio = proportionality(computed, printed);
    FormComparison {
        label: label.into(),
        computed: computed.to_text(),
        printed: printed.to_text(),
        matches: differences.is_empty(),
        printed_over_computed: ratio
            .filter(|_| !differences.is_empty())
            .map(|r| r.to_text()),
        differences,
    }
}

fn proportionality(computed: &BivarPoly, printed: &BivarPoly) -> Option<CycNum> {
    let (a, b, c) = computed.terms().next()?;
    let ratio = &printed.coeff(a, b) * &c.inv().ok()?;
    (!ratio.is_zero() && computed.scale(&ratio) == *printed).then_some(ratio)
}
