//! Block bookkeeping: every element of T(G) used here lives on one C_i × C_k block
//! (basis elements) or on the diagonal blocks (center elements).

use crate::exactnum::{int, Rational};
use crate::linalg::{Field, Matrix, SparseMatrix, SparseVec};
use crate::scheme::AssociationScheme;

/// Class membership and in-class positions of the group elements.
#[derive(Clone, Debug)]
pub struct BlockLayout {
    pub classes: Vec<Vec<usize>>,
    pub class_of: Vec<usize>,
    pub position: Vec<usize>,
}

impl BlockLayout {
    pub fn new(scheme: &AssociationScheme) -> Self {
        let data = scheme.classes();
        Self {
            classes: data.classes.clone(),
            class_of: data.class_of.clone(),
            position: data.position_in_class(),
        }
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn size(&self, i: usize) -> usize {
        self.classes[i].len()
    }

    pub fn order(&self) -> usize {
        self.class_of.len()
    }
}

/// Integer matrix supported on the `source × target` block, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BlockElement {
    pub source: usize,
    pub target: usize,
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<i64>,
}

impl BlockElement {
    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.entries[r * self.cols + c]
    }

    /// Embeds the block into the full |G|×|G| matrix.
    pub fn to_sparse(&self, layout: &BlockLayout) -> SparseMatrix<Rational> {
        let n = layout.order();
        let mut row_data = vec![SparseVec::new(); n];
        let cols = &layout.classes[self.target];
        for (r, &x) in layout.classes[self.source].iter().enumerate() {
            let pairs = (0..self.cols)
                .filter(|&c| self.get(r, c) != 0)
                .map(|c| (cols[c], int(self.get(r, c))));
            row_data[x] = SparseVec::from_pairs(pairs);
        }
        SparseMatrix {
            rows: n,
            cols: n,
            row_data,
        }
    }

    /// `self · m` where `m` acts on the target block from the right.
    pub fn mul_dense<F: Field>(&self, m: &Matrix<F>) -> Matrix<F> {
        let mut out = Matrix::<F>::zeros(self.rows, m.cols());
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a == 0 {
                    continue;
                }
                let a = F::from_i64(a);
                for c in 0..m.cols() {
                    let v = out.get(r, c).plus(&a.times(m.get(k, c)));
                    out.set(r, c, v);
                }
            }
        }
        out
    }
}

/// 0/1 block E_i* A_j E_k*, stored as the column positions of the ones in each row.
#[derive(Clone, Debug)]
pub struct GeneratorBlock {
    pub source: usize,
    pub relation: usize,
    pub target: usize,
    pub cols: usize,
    pub ones: Vec<Vec<u32>>,
}

impl GeneratorBlock {
    pub fn to_element(&self) -> BlockElement {
        let rows = self.ones.len();
        let mut entries = vec![0; rows * self.cols];
        for (r, row) in self.ones.iter().enumerate() {
            for &c in row {
                entries[r * self.cols + c as usize] = 1;
            }
        }
        BlockElement {
            source: self.source,
            target: self.target,
            rows,
            cols: self.cols,
            entries,
        }
    }

    /// `self · b` for `b` on the `target × m` block; None if an entry overflows.
    pub fn mul(&self, b: &BlockElement) -> Option<BlockElement> {
        debug_assert_eq!(self.target, b.source);
        let mut entries = vec![0i64; self.ones.len() * b.cols];
        for (r, row) in self.ones.iter().enumerate() {
            let out = &mut entries[r * b.cols..(r + 1) * b.cols];
            for &k in row {
                let src = &b.entries[k as usize * b.cols..(k as usize + 1) * b.cols];
                for (o, &v) in out.iter_mut().zip(src) {
                    *o = o.checked_add(v)?;
                }
            }
        }
        Some(BlockElement {
            source: self.source,
            target: b.target,
            rows: self.ones.len(),
            cols: b.cols,
            entries,
        })
    }
}

/// Relation index of every pair in the `i × k` block: `labels[a][b]` = class of y·x⁻¹.
pub fn block_labels(
    scheme: &AssociationScheme,
    layout: &BlockLayout,
    i: usize,
    k: usize,
) -> Vec<Vec<usize>> {
    let group = scheme.group();
    layout.classes[i]
        .iter()
        .map(|&x| {
            let xi = group.inv(x);
            layout.classes[k]
                .iter()
                .map(|&y| layout.class_of[group.mul(y, xi)])
                .collect()
        })
        .collect()
}

/// Nonzero generators E_i*A_jE_k* of the `i × k` block, ordered by j.
pub fn block_generators(
    scheme: &AssociationScheme,
    layout: &BlockLayout,
    i: usize,
    k: usize,
) -> Vec<GeneratorBlock> {
    let labels = block_labels(scheme, layout, i, k);
    let cols = layout.size(k);
    (0..layout.class_count())
        .filter_map(|j| {
            let ones: Vec<Vec<u32>> = labels
                .iter()
                .map(|row| (0..cols as u32).filter(|&b| row[b as usize] == j).collect())
                .collect();
            ones.iter()
                .any(|r| !r.is_empty())
                .then_some(GeneratorBlock {
                    source: i,
                    relation: j,
                    target: k,
                    cols,
                    ones,
                })
        })
        .collect()
}

/// Block-diagonal matrix, one square block per class.
#[derive(Clone, Debug, PartialEq)]
pub struct BlockDiagonal<F> {
    pub blocks: Vec<Matrix<F>>,
}

impl<F: Field> BlockDiagonal<F> {
    pub fn zero(layout: &BlockLayout) -> Self {
        Self {
            blocks: layout
                .classes
                .iter()
                .map(|c| Matrix::zeros(c.len(), c.len()))
                .collect(),
        }
    }

    pub fn identity(layout: &BlockLayout) -> Self {
        Self {
            blocks: layout
                .classes
                .iter()
                .map(|c| Matrix::identity(c.len()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self {
            blocks: self
                .blocks
                .iter()
                .zip(&other.blocks)
                .map(|(a, b)| a.mul(b))
                .collect(),
        }
    }

    pub fn add_scaled(&mut self, c: &F, other: &Self) {
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            for r in 0..a.rows() {
                for col in 0..a.cols() {
                    let v = a.get(r, col).plus(&c.times(b.get(r, col)));
                    a.set(r, col, v);
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(Matrix::is_zero)
    }

    /// Entries of all blocks concatenated.
    pub fn flatten(&self) -> Vec<F> {
        self.blocks
            .iter()
            .flat_map(|b| (0..b.rows()).flat_map(move |r| b.row(r).to_vec()))
            .collect()
    }

    /// Embeds into the full |G|×|G| matrix.
    pub fn to_sparse(&self, layout: &BlockLayout) -> SparseMatrix<F> {
        let n = layout.order();
        let mut row_data = vec![SparseVec::new(); n];
        for (i, block) in self.blocks.iter().enumerate() {
            let members = &layout.classes[i];
            for (r, &x) in members.iter().enumerate() {
                let pairs = (0..block.cols())
                    .filter(|&c| !block.get(r, c).is_zero())
                    .map(|c| (members[c], block.get(r, c).clone()));
                row_data[x] = SparseVec::from_pairs(pairs);
            }
        }
        SparseMatrix {
            rows: n,
            cols: n,
            row_data,
        }
    }
}

/// Integer block as a dense matrix over `F`.
pub fn to_field<F: Field>(rows: usize, cols: usize, entries: &[i64]) -> Matrix<F> {
    Matrix::from_rows(
        (0..rows)
            .map(|r| {
                (0..cols)
                    .map(|c| F::from_i64(entries[r * cols + c]))
                    .collect()
            })
            .collect(),
    )
}
