//! Center of T(G).
//!
//! Central elements are block diagonal, so the unknowns are the coefficients of
//! the diagonal-block basis elements. They already commute with every E_i*; the
//! remaining condition is commutation with one combination A = Σ c_j A_j whose
//! powers span the Bose–Mesner algebra, since A and the E_i* generate T(G).

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use super::block::{block_labels, BlockDiagonal, BlockLayout};
use super::closure::BasisElement;
use super::TerwilligerError;
use crate::exactnum::{int, Rational};
use crate::linalg::{kernel_basis, rank, IntegerSpan, Matrix};
use crate::scheme::AssociationScheme;

#[derive(Clone, Debug)]
pub struct CenterData {
    /// Coefficient vectors over the full basis, primitive integers.
    pub coefficients: Vec<Vec<Rational>>,
    pub elements: Vec<BlockDiagonal<Rational>>,
    /// Weights c_j of the generating combination A.
    pub weights: Vec<i64>,
    /// Blocks E_i*AE_k*, indexed `i * (d+1) + k`, row-major.
    pub a_blocks: Vec<Vec<i64>>,
}

/// Small deterministic weights with 1, A, …, A^d linearly independent.
pub fn generating_weights(scheme: &AssociationScheme) -> Vec<i64> {
    let d1 = scheme.class_count();
    let mut state: u64 = 0x9e37_79b9_7f4a_7c15;
    loop {
        let weights: Vec<i64> = (0..d1)
            .map(|_| {
                state = state
                    .wrapping_mul(6364136223846793005)
                    .wrapping_add(1442695040888963407);
                1 + ((state >> 33) % 997) as i64
            })
            .collect();
        if generates_bose_mesner(scheme, &weights) {
            return weights;
        }
    }
}

fn generates_bose_mesner(scheme: &AssociationScheme, weights: &[i64]) -> bool {
    let d1 = scheme.class_count();
    let a: Vec<Rational> = weights.iter().map(|&w| int(w)).collect();
    let mut power: Vec<Rational> = (0..d1)
        .map(|k| if k == 0 { int(1) } else { int(0) })
        .collect();
    let mut rows = vec![power.clone()];
    for _ in 1..d1 {
        let mut next = vec![int(0); d1];
        for (i, ai) in a.iter().enumerate() {
            for (j, xj) in power.iter().enumerate() {
                if xj.is_zero() {
                    continue;
                }
                let w = ai * xj;
                for (k, slot) in next.iter_mut().enumerate() {
                    let p = scheme.p(i, j, k);
                    if p != 0 {
                        *slot += &w * int(i64::from(p));
                    }
                }
            }
        }
        power = next;
        rows.push(power.clone());
    }
    rank(&Matrix::from_rows(rows)) == d1
}

fn int_mul(a: &[i64], ar: usize, ac: usize, b: &[i64], bc: usize) -> Vec<i64> {
    let mut out = vec![0i64; ar * bc];
    for r in 0..ar {
        for k in 0..ac {
            let x = a[r * ac + k];
            if x == 0 {
                continue;
            }
            for c in 0..bc {
                out[r * bc + c] += x * b[k * bc + c];
            }
        }
    }
    out
}

pub fn center_basis(
    scheme: &AssociationScheme,
    layout: &BlockLayout,
    basis: &[BasisElement],
) -> Result<CenterData, TerwilligerError> {
    let d1 = layout.class_count();
    let weights = generating_weights(scheme);
    let a_blocks: Vec<Vec<i64>> = (0..d1 * d1)
        .into_par_iter()
        .map(|b| {
            block_labels(scheme, layout, b / d1, b % d1)
                .into_iter()
                .flat_map(|row| row.into_iter().map(|j| weights[j]))
                .collect()
        })
        .collect();

    // Unknowns: basis elements on diagonal blocks, grouped per class.
    let unknowns: Vec<usize> = (0..basis.len())
        .filter(|&t| basis[t].element.source == basis[t].element.target)
        .collect();
    let u = unknowns.len();
    let mut per_class: Vec<Vec<(usize, usize)>> = vec![Vec::new(); d1];
    for (slot, &t) in unknowns.iter().enumerate() {
        per_class[basis[t].element.source].push((slot, t));
    }

    // Rows of y·A_ik − A_ik·y, one per entry of each block.
    let block_rows: Vec<Vec<Vec<i64>>> = (0..d1 * d1)
        .into_par_iter()
        .map(|b| {
            let (i, k) = (b / d1, b % d1);
            let (ni, nk) = (layout.size(i), layout.size(k));
            let a = &a_blocks[b];
            let mut rows = vec![vec![0i64; u]; ni * nk];
            for &(slot, t) in &per_class[i] {
                let prod = int_mul(&basis[t].element.entries, ni, ni, a, nk);
                for (e, v) in prod.into_iter().enumerate() {
                    rows[e][slot] += v;
                }
            }
            for &(slot, t) in &per_class[k] {
                let prod = int_mul(a, ni, nk, &basis[t].element.entries, nk);
                for (e, v) in prod.into_iter().enumerate() {
                    rows[e][slot] -= v;
                }
            }
            rows.retain(|r| r.iter().any(|&v| v != 0));
            rows
        })
        .collect();
    let mut span = IntegerSpan::new(u);
    for row in block_rows.iter().flatten() {
        if span.rank() == u {
            break;
        }
        span.add(row)?;
    }

    let kernel = if span.rank() == 0 {
        (0..u)
            .map(|s| (0..u).map(|t| int(i64::from(s == t))).collect())
            .collect()
    } else {
        kernel_basis(&Matrix::from_rows(span.rows()))
    };

    let mut coefficients = Vec::new();
    let mut elements = Vec::new();
    for v in kernel {
        let v = primitive(v);
        let mut full = vec![int(0); basis.len()];
        let mut element = BlockDiagonal::zero(layout);
        for (slot, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let t = unknowns[slot];
            full[t] = c.clone();
            let e = &basis[t].element;
            let block = &mut element.blocks[e.source];
            for r in 0..e.rows {
                for col in 0..e.cols {
                    let x = e.get(r, col);
                    if x != 0 {
                        let s = block.get(r, col) + c * int(x);
                        block.set(r, col, s);
                    }
                }
            }
        }
        coefficients.push(full);
        elements.push(element);
    }
    Ok(CenterData {
        coefficients,
        elements,
        weights,
        a_blocks,
    })
}

/// Scales to coprime integers with a positive leading entry.
fn primitive(v: Vec<Rational>) -> Vec<Rational> {
    let den = v
        .iter()
        .fold(num_bigint::BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<num_bigint::BigInt> = v
        .iter()
        .map(|x| (x * Rational::from_integer(den.clone())).to_integer())
        .collect();
    let g = ints
        .iter()
        .fold(num_bigint::BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return v;
    }
    let lead_neg = ints
        .iter()
        .find(|x| !x.is_zero())
        .is_some_and(|x| x.is_negative());
    let g = if lead_neg { -g } else { g };
    ints.into_iter()
        .map(|x| Rational::from_integer(x / &g))
        .collect()
}
