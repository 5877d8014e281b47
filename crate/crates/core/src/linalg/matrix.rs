use std::fmt;

use super::{Field, SparseVec};

/// Dense row-major matrix.
#[derive(Clone, PartialEq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

/// Sparse matrix as a list of sparse rows.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseMatrix<F> {
    pub rows: usize,
    pub cols: usize,
    pub row_data: Vec<SparseVec<F>>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, F::one());
        }
        m
    }

    /// Panics if the rows have different lengths.
    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Matrix {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &F {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: F) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[F] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "inner dimensions differ");
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = r * out.cols + c;
                    out.data[idx] = out.data[idx].plus(&a.times(b));
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(F::zero(), |acc, (a, b)| acc.plus(&a.times(b)))
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(F::is_zero)
    }

    pub fn to_sparse(&self) -> SparseMatrix<F> {
        SparseMatrix {
            rows: self.rows,
            cols: self.cols,
            row_data: (0..self.rows)
                .map(|r| SparseVec::from_dense(self.row(r)))
                .collect(),
        }
    }
}

impl<F: Field> SparseMatrix<F> {
    pub fn to_dense(&self) -> Matrix<F> {
        let mut m = Matrix::zeros(self.rows, self.cols);
        for (r, row) in self.row_data.iter().enumerate() {
            for (c, v) in row.entries() {
                m.set(r, *c, v.clone());
            }
        }
        m
    }

    pub fn nnz(&self) -> usize {
        self.row_data.iter().map(SparseVec::nnz).sum()
    }
}

impl<F: fmt::Debug> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<&[F]> = self.data.chunks(self.cols.max(1)).collect();
        f.debug_struct("Matrix")
            .field("rows", &self.rows)
            .field("cols", &self.cols)
            .field("data", &rows)
            .finish()
    }
}

/// Reduced row echelon form together with rank and pivot columns.
#[derive(Clone, Debug)]
pub struct Rref<F> {
    pub matrix: Matrix<F>,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

/// Gauss–Jordan elimination. Pivot: first column with a nonzero entry, then the
/// smallest-size candidate in that column.
pub fn rref<F: Field>(m: &Matrix<F>) -> Rref<F> {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..a.cols {
        if row == a.rows {
            break;
        }
        let best = (row..a.rows)
            .filter(|&r| !a.get(r, col).is_zero())
            .min_by_key(|&r| (a.get(r, col).size(), r));
        let Some(best) = best else { continue };
        if best != row {
            for c in 0..a.cols {
                a.data.swap(best * a.cols + c, row * a.cols + c);
            }
        }
        let inv = a.get(row, col).inverse().expect("nonzero pivot");
        for c in col..a.cols {
            let v = a.get(row, c).times(&inv);
            a.set(row, c, v);
        }
        for r in 0..a.rows {
            if r == row {
                continue;
            }
            let factor = a.get(r, col).clone();
            if factor.is_zero() {
                continue;
            }
            for c in col..a.cols {
                let p = a.get(row, c);
                if p.is_zero() {
                    continue;
                }
                let v = a.get(r, c).minus(&factor.times(p));
                a.set(r, c, v);
            }
        }
        pivots.push(col);
        row += 1;
    }
    Rref {
        matrix: a,
        rank: pivots.len(),
        pivots,
    }
}

pub fn rank<F: Field>(m: &Matrix<F>) -> usize {
    rref(m).rank
}

/// Basis of {v : m·v = 0}; one vector per free column.
pub fn kernel_basis<F: Field>(m: &Matrix<F>) -> Vec<Vec<F>> {
    let r = rref(m);
    let is_pivot = {
        let mut flags = vec![false; m.cols];
        for &p in &r.pivots {
            flags[p] = true;
        }
        flags
    };
    (0..m.cols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![F::zero(); m.cols];
            v[free] = F::one();
            for (i, &p) in r.pivots.iter().enumerate() {
                v[p] = r.matrix.get(i, free).negated();
            }
            v
        })
        .collect()
}

/// Inverse of a square matrix; `None` when singular.
pub fn inverse<F: Field>(m: &Matrix<F>) -> Option<Matrix<F>> {
    assert_eq!(m.rows, m.cols, "square matrix");
    let n = m.rows;
    let mut aug = Matrix::zeros(n, 2 * n);
    for r in 0..n {
        for c in 0..n {
            aug.set(r, c, m.get(r, c).clone());
        }
        aug.set(r, n + r, F::one());
    }
    let red = rref(&aug);
    if n > 0 && red.pivots.get(n - 1) != Some(&(n - 1)) {
        return None;
    }
    let mut out = Matrix::zeros(n, n);
    for r in 0..n {
        for c in 0..n {
            out.set(r, c, red.matrix.get(r, n + c).clone());
        }
    }
    Some(out)
}

/// Characteristic polynomial det(xI − m), coefficients from degree 0 upward
/// (Faddeev–LeVerrier).
pub fn charpoly<F: Field>(m: &Matrix<F>) -> Vec<F> {
    assert_eq!(m.rows, m.cols, "square matrix");
    let n = m.rows;
    let mut coeffs = vec![F::zero(); n + 1];
    coeffs[n] = F::one();
    let mut mk = Matrix::zeros(n, n);
    for k in 1..=n {
        let mut next = m.mul(&mk);
        for i in 0..n {
            let v = next.get(i, i).plus(&coeffs[n - k + 1]);
            next.set(i, i, v);
        }
        let prod = m.mul(&next);
        let trace = (0..n).fold(F::zero(), |acc, i| acc.plus(prod.get(i, i)));
        let inv_k = F::from_i64(k as i64).inverse().expect("nonzero");
        coeffs[n - k] = trace.times(&inv_k).negated();
        mk = next;
    }
    coeffs
}

/// Solves m·x = b; `None` when the system is inconsistent. Free variables are set to zero.
pub fn solve<F: Field>(m: &Matrix<F>, b: &[F]) -> Option<Vec<F>> {
    assert_eq!(m.rows, b.len(), "right-hand side length");
    let mut aug = Matrix::zeros(m.rows, m.cols + 1);
    for (r, rhs) in b.iter().enumerate() {
        for c in 0..m.cols {
            aug.set(r, c, m.get(r, c).clone());
        }
        aug.set(r, m.cols, rhs.clone());
    }
    let red = rref(&aug);
    if red.pivots.last() == Some(&m.cols) {
        return None;
    }
    let mut x = vec![F::zero(); m.cols];
    for (i, &p) in red.pivots.iter().enumerate() {
        x[p] = red.matrix.get(i, m.cols).clone();
    }
    Some(x)
}
