//! Group association scheme: relations (x, y) ∈ R_i ⟺ y·x⁻¹ ∈ C_i.

use rayon::prelude::*;
use thiserror::Error;

use crate::exactnum::{int, Rational};
use crate::linalg::{SparseMatrix, SparseVec};
use crate::matgroup::{ConjugacyData, FiniteMatrixGroup};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SchemeError {
    #[error("counting formula disagrees with A_iA_j expansion at (i,j,k) = ({i},{j},{k})")]
    Inconsistent { i: usize, j: usize, k: usize },
    #[error("A_{i}A_{j} is not a combination of adjacency matrices")]
    NotClosed { i: usize, j: usize },
    #[error("intersection numbers are not symmetric at (i,j,k) = ({i},{j},{k})")]
    NotCommutative { i: usize, j: usize, k: usize },
    #[error("relations do not partition G×G")]
    NotPartition,
}

#[derive(Clone, Debug)]
pub struct AssociationScheme {
    group: FiniteMatrixGroup,
    classes: ConjugacyData,
    /// `adjacency[i][x]`: sorted y with y·x⁻¹ ∈ C_i.
    adjacency: Vec<Vec<Vec<usize>>>,
    p: Vec<u32>,
}

pub fn build_scheme(group: FiniteMatrixGroup) -> Result<AssociationScheme, SchemeError> {
    let classes = group.conjugacy_classes();
    let n = group.order();
    let d1 = classes.len();
    let adjacency: Vec<Vec<Vec<usize>>> = classes
        .classes
        .iter()
        .map(|class| {
            (0..n)
                .map(|x| {
                    let mut row: Vec<usize> = class.iter().map(|&c| group.mul(c, x)).collect();
                    row.sort_unstable();
                    row
                })
                .collect()
        })
        .collect();

    // row x of Σ A_i must be all-ones exactly once
    for x in 0..n {
        let mut seen = vec![false; n];
        for rows in &adjacency {
            for &y in &rows[x] {
                if std::mem::replace(&mut seen[y], true) {
                    return Err(SchemeError::NotPartition);
                }
            }
        }
        if seen.iter().any(|s| !s) || adjacency[0][x] != [x] {
            return Err(SchemeError::NotPartition);
        }
    }

    // p_ij^k from the matrix side: (A_iA_j)_{e,z} for z the representative of C_k.
    let mut p = vec![0u32; d1 * d1 * d1];
    for i in 0..d1 {
        for j in 0..d1 {
            let mut row = vec![0u32; n];
            for &w in &adjacency[i][0] {
                for &y in &adjacency[j][w] {
                    row[y] += 1;
                }
            }
            for k in 0..d1 {
                p[(i * d1 + j) * d1 + k] = row[classes.representatives[k]];
            }
        }
    }

    let scheme = AssociationScheme {
        group,
        classes,
        adjacency,
        p,
    };
    scheme.check_counting_formula()?;
    scheme.check_bose_mesner()?;
    Ok(scheme)
}

impl AssociationScheme {
    pub fn group(&self) -> &FiniteMatrixGroup {
        &self.group
    }

    pub fn classes(&self) -> &ConjugacyData {
        &self.classes
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    /// Number of classes d + 1.
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn p(&self, i: usize, j: usize, k: usize) -> u32 {
        let d1 = self.class_count();
        self.p[(i * d1 + j) * d1 + k]
    }

    /// Nested array `[i][j][k]`.
    pub fn intersection_numbers(&self) -> Vec<Vec<Vec<u32>>> {
        let d1 = self.class_count();
        (0..d1)
            .map(|i| {
                (0..d1)
                    .map(|j| (0..d1).map(|k| self.p(i, j, k)).collect())
                    .collect()
            })
            .collect()
    }

    /// Column indices of the ones in row x of A_i.
    pub fn adjacency_row(&self, i: usize, x: usize) -> &[usize] {
        &self.adjacency[i][x]
    }

    pub fn adjacency_matrix(&self, i: usize) -> SparseMatrix<Rational> {
        let n = self.order();
        SparseMatrix {
            rows: n,
            cols: n,
            row_data: self.adjacency[i]
                .iter()
                .map(|row| SparseVec::from_pairs(row.iter().map(|&y| (y, int(1)))))
                .collect(),
        }
    }

    /// |{(i,j,k) : p_ij^k ≠ 0}|.
    pub fn nonvanishing_triples(&self) -> usize {
        self.p.iter().filter(|&&v| v != 0).count()
    }

    /// Σ_i |G|/|C_i|.
    pub fn dimension_upper_bound(&self) -> usize {
        let n = self.order();
        self.classes.sizes().iter().map(|s| n / s).sum()
    }

    pub fn dimension_lower_bound(&self) -> usize {
        self.nonvanishing_triples()
    }

    fn count_pairs(&self, i: usize, j: usize, z: usize) -> u32 {
        self.classes.classes[i]
            .iter()
            .filter(|&&a| {
                let b = self.group.mul(self.group.inv(a), z);
                self.classes.class_of[b] == j
            })
            .count() as u32
    }

    /// |{(a,b) ∈ C_i × C_j : ab = z}| for two choices of z per class, compared
    /// with the matrix-defined p_ij^k.
    fn check_counting_formula(&self) -> Result<(), SchemeError> {
        let d1 = self.class_count();
        for k in 0..d1 {
            let class = &self.classes.classes[k];
            let choices: Vec<usize> = if class.len() > 1 {
                vec![class[0], class[class.len() - 1]]
            } else {
                vec![class[0]]
            };
            for i in 0..d1 {
                for j in 0..d1 {
                    for &z in &choices {
                        if self.count_pairs(i, j, z) != self.p(i, j, k) {
                            return Err(SchemeError::Inconsistent { i, j, k });
                        }
                    }
                    if self.p(i, j, k) != self.p(j, i, k) {
                        return Err(SchemeError::NotCommutative { i, j, k });
                    }
                }
            }
        }
        Ok(())
    }

    /// A_iA_j = Σ_k p_ij^k A_k entrywise, for every (i, j).
    fn check_bose_mesner(&self) -> Result<(), SchemeError> {
        let n = self.order();
        let d1 = self.class_count();
        let pairs: Vec<(usize, usize)> =
            (0..d1).flat_map(|i| (0..d1).map(move |j| (i, j))).collect();
        let bad = pairs.par_iter().find_first(|&&(i, j)| {
            let mut row = vec![0u32; n];
            for x in 0..n {
                row.iter_mut().for_each(|v| *v = 0);
                for &w in &self.adjacency[i][x] {
                    for &y in &self.adjacency[j][w] {
                        row[y] += 1;
                    }
                }
                let x_inv = self.group.inv(x);
                for (y, &count) in row.iter().enumerate() {
                    let k = self.classes.class_of[self.group.mul(y, x_inv)];
                    if count != self.p(i, j, k) {
                        return true;
                    }
                }
            }
            false
        });
        match bad {
            Some(&(i, j)) => Err(SchemeError::NotClosed { i, j }),
            None => Ok(()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matgroup::{builtin_group, generate_group, GroupName, Mat2};

    #[test]
    fn trivial_scheme() {
        let s = build_scheme(generate_group(&[Mat2::identity()], 1).unwrap()).unwrap();
        assert_eq!(s.class_count(), 1);
        assert_eq!(
            s.adjacency_matrix(0).to_dense(),
            crate::linalg::Matrix::identity(1)
        );
        assert_eq!(s.dimension_upper_bound(), 1);
    }

    #[test]
    fn g1_shape() {
        let s = build_scheme(builtin_group(GroupName::I)).unwrap();
        assert_eq!(s.class_count(), 7);
        assert_eq!(s.order(), 16);
        // 16/1 + 16/4 + 16/2 + 16/1 + 16/4 + 16/2 + 16/2
        assert_eq!(s.dimension_upper_bound(), 64);
    }

    #[test]
    fn g4_row_sums_and_bound() {
        let s = build_scheme(builtin_group(GroupName::IV)).unwrap();
        let n = s.order();
        let sizes = s.classes().sizes();
        for (i, &size) in sizes.iter().enumerate() {
            for x in 0..n {
                // brute force: count y with y x^-1 in C_i
                let brute = (0..n)
                    .filter(|&y| s.classes().class_of[s.group().mul(y, s.group().inv(x))] == i)
                    .count();
                assert_eq!(brute, size);
                assert_eq!(s.adjacency_row(i, x).len(), size);
            }
        }
        assert_eq!(s.dimension_upper_bound(), 44);
    }

    #[test]
    fn intersection_number_identities() {
        let s = build_scheme(builtin_group(GroupName::IV)).unwrap();
        let d1 = s.class_count();
        let sizes = s.classes().sizes();
        for j in 0..d1 {
            for k in 0..d1 {
                assert_eq!(s.p(0, j, k), u32::from(j == k));
            }
        }
        for i in 0..d1 {
            for j in 0..d1 {
                let total: usize = (0..d1).map(|k| s.p(i, j, k) as usize * sizes[k]).sum();
                assert_eq!(total, sizes[i] * sizes[j]);
            }
        }
    }

    #[test]
    fn all_builtin_schemes_close() {
        for name in GroupName::ALL {
            let s = build_scheme(builtin_group(name)).unwrap();
            let t = s.intersection_numbers();
            for (i, row) in t.iter().enumerate() {
                for (j, col) in row.iter().enumerate() {
                    assert_eq!(col, &t[j][i]);
                }
            }
            assert!(s.dimension_lower_bound() <= s.dimension_upper_bound());
        }
    }
}
