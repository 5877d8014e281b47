//! Primitive central idempotents and Wedderburn degrees.
//!
//! With e_1..e_s the center basis, e_ae_b = Σ_c r_ab^c e_c. Multiplication by a
//! generic z = Σ x_a e_a has s distinct eigenvalues; its eigenvectors give the
//! characters χ_a(e_j) = M_aj, and (ε_1..ε_s) = (e_1..e_s)·M⁻¹. The characteristic
//! polynomial is split over Q first and over Q(ζ₂₄) second. Whatever path is taken,
//! the resulting ε_a are checked exactly before they are returned.

use rayon::prelude::*;

use super::block::{to_field, BlockDiagonal, BlockLayout};
use super::center::CenterData;
use super::closure::BasisElement;
use super::TerwilligerError;
use crate::exactnum::roots::{cyclotomic_roots, rational_roots};
use crate::exactnum::{CycNum, Rational};
use crate::linalg::{charpoly, inverse, kernel_basis, rref, solve, Field, Matrix, SpanTracker};

/// Exactly verified primitive central idempotents.
#[derive(Clone, Debug)]
pub enum Idempotents {
    Rational(Vec<BlockDiagonal<Rational>>),
    Cyclotomic(Vec<BlockDiagonal<CycNum>>),
}

impl Idempotents {
    pub fn len(&self) -> usize {
        match self {
            Idempotents::Rational(v) => v.len(),
            Idempotents::Cyclotomic(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn field(&self) -> &'static str {
        match self {
            Idempotents::Rational(_) => "Q",
            Idempotents::Cyclotomic(_) => "Q(zeta24)",
        }
    }

    fn reorder(&mut self, order: &[usize]) {
        fn apply<T: Clone>(v: &mut Vec<T>, order: &[usize]) {
            *v = order.iter().map(|&i| v[i].clone()).collect();
        }
        match self {
            Idempotents::Rational(v) => apply(v, order),
            Idempotents::Cyclotomic(v) => apply(v, order),
        }
    }
}

/// r[a][b][c] with e_a·e_b = Σ_c r[a][b][c]·e_c, verified exactly.
pub fn structure_constants(
    elements: &[BlockDiagonal<Rational>],
) -> Result<Vec<Vec<Vec<Rational>>>, TerwilligerError> {
    let s = elements.len();
    let flat: Vec<Vec<Rational>> = elements.iter().map(BlockDiagonal::flatten).collect();
    let red = rref(&Matrix::from_rows(flat.clone()));
    if red.rank != s {
        return Err(TerwilligerError::SplittingFailure(
            "center basis is dependent".into(),
        ));
    }
    // Coordinates are read off on the pivot columns of the basis.
    let pivots = red.pivots;
    let system = Matrix::from_rows(
        (0..s)
            .map(|c| (0..s).map(|t| flat[t][pivots[c]].clone()).collect())
            .collect(),
    );
    let coords = |y: &[Rational]| -> Result<Vec<Rational>, TerwilligerError> {
        let rhs: Vec<Rational> = pivots.iter().map(|&p| y[p].clone()).collect();
        let x = solve(&system, &rhs).expect("pivot minor is invertible");
        let mut back = vec![Rational::from_integer(0.into()); y.len()];
        for (t, c) in x.iter().enumerate() {
            for (slot, v) in back.iter_mut().zip(&flat[t]) {
                *slot += c * v;
            }
        }
        if back != y {
            return Err(TerwilligerError::SplittingFailure(
                "center is not closed under products".into(),
            ));
        }
        Ok(x)
    };
    (0..s)
        .into_par_iter()
        .map(|a| {
            (0..s)
                .map(|b| coords(&elements[a].mul(&elements[b]).flatten()))
                .collect()
        })
        .collect()
}

/// Matrix of multiplication by e_a in center coordinates: column b holds e_a·e_b.
fn left_mul_matrix<F: Field>(r: &[Vec<Vec<Rational>>], a: usize) -> Matrix<F> {
    let s = r.len();
    Matrix::from_rows(
        (0..s)
            .map(|c| {
                (0..s)
                    .map(|b| F::from_rational(r[a][b][c].clone()))
                    .collect()
            })
            .collect(),
    )
}

/// M⁻¹ over F from the distinct eigenvalues of L_z.
fn characters_inverse<F: Field>(
    r: &[Vec<Vec<Rational>>],
    lz: &Matrix<F>,
    eigenvalues: &[F],
) -> Option<Matrix<F>> {
    let s = r.len();
    let mut m = Matrix::zeros(s, s);
    let ls: Vec<Matrix<F>> = (0..s).map(|j| left_mul_matrix(r, j)).collect();
    for (a, lambda) in eigenvalues.iter().enumerate() {
        let mut shifted = lz.clone();
        for i in 0..s {
            let v = shifted.get(i, i).minus(lambda);
            shifted.set(i, i, v);
        }
        let kernel = kernel_basis(&shifted);
        if kernel.len() != 1 {
            return None;
        }
        let v = &kernel[0];
        let pos = v.iter().position(|x| !x.is_zero())?;
        let inv = v[pos].inverse()?;
        for (j, l) in ls.iter().enumerate() {
            m.set(a, j, l.mul_vec(v)[pos].times(&inv));
        }
    }
    inverse(&m)
}

fn combine<F: Field>(
    layout: &BlockLayout,
    elements: &[BlockDiagonal<Rational>],
    m_inv: &Matrix<F>,
) -> Vec<BlockDiagonal<F>> {
    let lifted: Vec<BlockDiagonal<F>> = elements
        .iter()
        .map(|e| BlockDiagonal {
            blocks: e
                .blocks
                .iter()
                .map(|b| {
                    Matrix::from_rows(
                        (0..b.rows())
                            .map(|r| {
                                b.row(r)
                                    .iter()
                                    .map(|x| F::from_rational(x.clone()))
                                    .collect()
                            })
                            .collect(),
                    )
                })
                .collect(),
        })
        .collect();
    (0..m_inv.cols())
        .map(|a| {
            let mut eps = BlockDiagonal::zero(layout);
            for (j, e) in lifted.iter().enumerate() {
                let c = m_inv.get(j, a);
                if !c.is_zero() {
                    eps.add_scaled(c, e);
                }
            }
            eps
        })
        .collect()
}

/// Checks ε_a² = ε_a ≠ 0, ε_aε_b = 0, Σε_a = I and commutation with A.
pub fn verify_idempotents<F: Field>(
    layout: &BlockLayout,
    eps: &[BlockDiagonal<F>],
    a_blocks: &[Vec<i64>],
) -> Result<(), String> {
    let d1 = layout.class_count();
    let mut sum = BlockDiagonal::zero(layout);
    for (a, e) in eps.iter().enumerate() {
        if e.is_zero() {
            return Err(format!("ε_{a} is zero"));
        }
        sum.add_scaled(&F::one(), e);
    }
    if sum != BlockDiagonal::identity(layout) {
        return Err("idempotents do not sum to the identity".into());
    }
    let pairs: Vec<(usize, usize)> = (0..eps.len())
        .flat_map(|a| (a..eps.len()).map(move |b| (a, b)))
        .collect();
    pairs.into_par_iter().try_for_each(|(a, b)| {
        let p = eps[a].mul(&eps[b]);
        let ok = if a == b { p == eps[a] } else { p.is_zero() };
        if ok {
            Ok(())
        } else if a == b {
            Err(format!("ε_{a}² ≠ ε_{a}"))
        } else {
            Err(format!("ε_{a}ε_{b} ≠ 0"))
        }
    })?;
    (0..eps.len() * d1 * d1)
        .into_par_iter()
        .try_for_each(|job| {
            let (a, blk) = (job / (d1 * d1), job % (d1 * d1));
            let (i, k) = (blk / d1, blk % d1);
            let am: Matrix<F> = to_field(layout.size(i), layout.size(k), &a_blocks[blk]);
            if eps[a].blocks[i].mul(&am) == am.mul(&eps[a].blocks[k]) {
                Ok(())
            } else {
                Err(format!("ε_{a} is not central"))
            }
        })
}

/// Pseudo-random small weights for the splitting element z.
fn split_weights(s: usize, attempt: u64) -> Vec<i64> {
    let mut state = 0x2545_f491_4f6c_dd1d_u64 ^ attempt.wrapping_mul(0x9e37_79b9);
    (0..s)
        .map(|_| {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state % 19) as i64 - 9
        })
        .collect()
}

pub fn central_idempotents(
    layout: &BlockLayout,
    center: &CenterData,
) -> Result<Idempotents, TerwilligerError> {
    let s = center.elements.len();
    let r = structure_constants(&center.elements)?;
    let mut notes = Vec::new();
    for attempt in 0..8 {
        let weights = split_weights(s, attempt);
        let mut lz = Matrix::<Rational>::zeros(s, s);
        for (a, &w) in weights.iter().enumerate() {
            if w == 0 {
                continue;
            }
            let la: Matrix<Rational> = left_mul_matrix(&r, a);
            for row in 0..s {
                for col in 0..s {
                    let v = lz.get(row, col) + la.get(row, col) * Rational::from_integer(w.into());
                    lz.set(row, col, v);
                }
            }
        }
        let poly = charpoly(&lz);

        let roots = rational_roots(&poly);
        if roots.len() == s {
            if let Some(m_inv) = characters_inverse(&r, &lz, &roots) {
                let eps = combine(layout, &center.elements, &m_inv);
                match verify_idempotents(layout, &eps, &center.a_blocks) {
                    Ok(()) => return Ok(Idempotents::Rational(eps)),
                    Err(e) => notes.push(e),
                }
            }
            continue;
        }
        if let Some(roots) = cyclotomic_roots(&poly) {
            if roots.len() == s {
                let lz_c = Matrix::from_rows(
                    (0..s)
                        .map(|i| {
                            lz.row(i)
                                .iter()
                                .map(|x| CycNum::from_rational(x.clone()))
                                .collect()
                        })
                        .collect(),
                );
                if let Some(m_inv) = characters_inverse(&r, &lz_c, &roots) {
                    let eps = combine(layout, &center.elements, &m_inv);
                    match verify_idempotents(layout, &eps, &center.a_blocks) {
                        Ok(()) => return Ok(Idempotents::Cyclotomic(eps)),
                        Err(e) => notes.push(e),
                    }
                }
                continue;
            }
        } else {
            notes.push("characteristic polynomial does not split over Q(ζ24)".into());
        }
    }
    notes.dedup();
    Err(TerwilligerError::SplittingFailure(if notes.is_empty() {
        "no splitting element with distinct eigenvalues found".into()
    } else {
        notes.join("; ")
    }))
}

/// dim Tε_a as a sum of per-block ranks of {b·ε_a}.
fn block_rank<F: Field>(
    layout: &BlockLayout,
    basis: &[BasisElement],
    eps: &BlockDiagonal<F>,
) -> usize {
    let d1 = layout.class_count();
    let mut by_block: Vec<Vec<&BasisElement>> = vec![Vec::new(); d1 * d1];
    for b in basis {
        by_block[b.element.source * d1 + b.element.target].push(b);
    }
    by_block
        .into_par_iter()
        .enumerate()
        .map(|(blk, members)| {
            let (i, k) = (blk / d1, blk % d1);
            let mut span = SpanTracker::new(layout.size(i) * layout.size(k));
            for b in members {
                let prod = b.element.mul_dense(&eps.blocks[k]);
                let flat: Vec<F> = (0..prod.rows())
                    .flat_map(|r| prod.row(r).to_vec())
                    .collect();
                span.add_dense(&flat).expect("matching length");
            }
            span.rank()
        })
        .sum()
}

/// Degrees d_a with d_a² = dim Tε_a; sorts the idempotents by degree.
pub fn wedderburn_degrees(
    layout: &BlockLayout,
    basis: &[BasisElement],
    idempotents: &mut Idempotents,
) -> Result<Vec<usize>, TerwilligerError> {
    let ranks: Vec<usize> = match idempotents {
        Idempotents::Rational(v) => v.iter().map(|e| block_rank(layout, basis, e)).collect(),
        Idempotents::Cyclotomic(v) => v.iter().map(|e| block_rank(layout, basis, e)).collect(),
    };
    let mut degrees = Vec::with_capacity(ranks.len());
    for (index, &rank) in ranks.iter().enumerate() {
        let d = (rank as f64).sqrt().round() as usize;
        if d * d != rank {
            return Err(TerwilligerError::NonSquareRank { index, rank });
        }
        degrees.push(d);
    }
    let mut order: Vec<usize> = (0..degrees.len()).collect();
    order.sort_by_key(|&a| degrees[a]);
    idempotents.reorder(&order);
    Ok(order.iter().map(|&a| degrees[a]).collect())
}
