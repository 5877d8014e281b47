//! Truncated power series and the Hilbert series of invariant rings.

use rayon::prelude::*;

use super::poly::{powers, BivarPoly};
use super::InvariantError;
use crate::exactnum::{int, CycNum, Rational};
use crate::linalg::{rank, Matrix};
use crate::matgroup::FiniteMatrixGroup;

/// c_0 + c_1 t + … + c_{N-1} t^{N-1}; every operation truncates to N terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<Rational>,
}

impl PowerSeries {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        Self { coeffs }
    }

    /// Number of retained terms.
    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(|| int(0))
    }

    /// 1/(1 − t^step) to `n` terms.
    pub fn geometric(step: usize, n: usize) -> Self {
        assert!(step >= 1, "step must be positive");
        Self::new((0..n).map(|k| int(i64::from(k % step == 0))).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let mut out = vec![int(0); n];
        for (i, a) in self.coeffs.iter().take(n).enumerate() {
            for (j, b) in other.coeffs.iter().take(n - i).enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Self::new((0..n).map(|k| &self.coeffs[k] + &other.coeffs[k]).collect())
    }

    /// Coefficients as integers, if they all are.
    pub fn to_integers(&self) -> Option<Vec<i64>> {
        use num_traits::ToPrimitive;
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer().to_i64()).flatten())
            .collect()
    }
}

/// Truncated expansion of 1/((1 − t^a)(1 − t^b)).
pub fn expand_product_series(a: usize, b: usize, n_terms: usize) -> PowerSeries {
    PowerSeries::geometric(a, n_terms).mul(&PowerSeries::geometric(b, n_terms))
}

/// Hilbert series of C[x,y]^G: the group average of 1/det(1 − tσ), expanded through
/// c_k = tr(σ)c_{k−1} − det(σ)c_{k−2}.
pub fn molien_series(
    group: &FiniteMatrixGroup,
    n_terms: usize,
) -> Result<PowerSeries, InvariantError> {
    if n_terms == 0 {
        return Err(InvariantError::BadTermCount);
    }
    let zero = || vec![CycNum::zero(); n_terms];
    let total = group
        .elements()
        .par_iter()
        .map(|sigma| {
            let (tr, det) = (sigma.trace(), sigma.det());
            let mut c = Vec::with_capacity(n_terms);
            c.push(CycNum::one());
            for k in 1..n_terms {
                let mut next = &tr * &c[k - 1];
                if k >= 2 {
                    next -= &(&det * &c[k - 2]);
                }
                c.push(next);
            }
            c
        })
        .reduce(zero, |a, b| a.iter().zip(&b).map(|(x, y)| x + y).collect());
    let inv_order = Rational::new(1.into(), group.order().into());
    total
        .into_iter()
        .enumerate()
        .map(|(k, c)| {
            c.as_rational()
                .map(|r| r * &inv_order)
                .ok_or(InvariantError::IrrationalMolien(k))
        })
        .collect::<Result<Vec<_>, _>>()
        .map(PowerSeries::new)
}

/// dim C[x,y]^G_k for k = 0..=max_k, as the rank of the Reynolds projector on the
/// degree-k monomials.
pub fn reynolds_dimensions(group: &FiniteMatrixGroup, max_k: u32) -> Vec<usize> {
    let empty = || -> Vec<Vec<BivarPoly>> {
        (0..=max_k)
            .map(|k| vec![BivarPoly::zero(); k as usize + 1])
            .collect()
    };
    let sums = group
        .elements()
        .par_iter()
        .map(|sigma| {
            let l1 = BivarPoly::linear(sigma.entry(0, 0), sigma.entry(0, 1));
            let l2 = BivarPoly::linear(sigma.entry(1, 0), sigma.entry(1, 1));
            let (p1, p2) = (powers(&l1, max_k), powers(&l2, max_k));
            (0..=max_k)
                .map(|k| {
                    (0..=k)
                        .map(|a| p1[a as usize].mul(&p2[(k - a) as usize]))
                        .collect()
                })
                .collect::<Vec<Vec<BivarPoly>>>()
        })
        .reduce(empty, |a, b| {
            a.iter()
                .zip(&b)
                .map(|(x, y)| x.iter().zip(y).map(|(p, q)| p.add(q)).collect())
                .collect()
        });
    sums.iter()
        .enumerate()
        .map(|(k, cols)| {
            let rows: Vec<Vec<CycNum>> = cols
                .iter()
                .map(|p| p.coefficient_vector(k as u32))
                .collect();
            rank(&Matrix::from_rows(rows))
        })
        .collect()
}
