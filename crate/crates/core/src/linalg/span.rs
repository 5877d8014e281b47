use std::collections::{BTreeMap, HashMap};

use super::{Field, LinalgError, Matrix};

/// Sparse vector as sorted `(index, value)` pairs with no stored zeros.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseVec<F> {
    entries: Vec<(usize, F)>,
}

impl<F: Field> SparseVec<F> {
    pub fn new() -> Self {
        SparseVec {
            entries: Vec::new(),
        }
    }

    /// Sorts and drops zeros; later duplicates are summed into earlier ones.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, F)>) -> Self {
        let mut acc: BTreeMap<usize, F> = BTreeMap::new();
        for (i, v) in pairs {
            let slot = acc.entry(i).or_insert_with(F::zero);
            *slot = slot.plus(&v);
        }
        SparseVec {
            entries: acc.into_iter().filter(|(_, v)| !v.is_zero()).collect(),
        }
    }

    pub fn from_dense(values: &[F]) -> Self {
        SparseVec {
            entries: values
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(i, v)| (i, v.clone()))
                .collect(),
        }
    }

    pub fn to_dense(&self, len: usize) -> Vec<F> {
        let mut out = vec![F::zero(); len];
        for (i, v) in &self.entries {
            out[*i] = v.clone();
        }
        out
    }

    pub fn entries(&self) -> &[(usize, F)] {
        &self.entries
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, idx: usize) -> Option<&F> {
        self.entries
            .binary_search_by_key(&idx, |(i, _)| *i)
            .ok()
            .map(|p| &self.entries[p].1)
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.last().map(|(i, _)| *i)
    }

    fn scale(&mut self, s: &F) {
        for (_, v) in &mut self.entries {
            *v = v.times(s);
        }
    }

    /// self − s·other
    fn sub_scaled(&self, s: &F, other: &SparseVec<F>) -> SparseVec<F> {
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (
            self.entries.iter().peekable(),
            other.entries.iter().peekable(),
        );
        loop {
            match (a.peek(), b.peek()) {
                (Some((ia, va)), Some((ib, vb))) => {
                    if ia < ib {
                        out.push((*ia, va.clone()));
                        a.next();
                    } else if ib < ia {
                        out.push((*ib, vb.times(s).negated()));
                        b.next();
                    } else {
                        let v = va.minus(&vb.times(s));
                        if !v.is_zero() {
                            out.push((*ia, v));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some((ia, va)), None) => {
                    out.push((*ia, va.clone()));
                    a.next();
                }
                (None, Some((ib, vb))) => {
                    out.push((*ib, vb.times(s).negated()));
                    b.next();
                }
                (None, None) => break,
            }
        }
        SparseVec { entries: out }
    }
}

impl<F: Field> Default for SparseVec<F> {
    fn default() -> Self {
        Self::new()
    }
}

/// Incremental span of sparse vectors kept in fully reduced echelon form.
///
/// Stored rows have pivot entry 1 and every pivot column is zero in all other rows,
/// so reducing a candidate is a single pass over its entries in pivot columns.
#[derive(Clone, Debug)]
pub struct SpanTracker<F> {
    ambient_dim: usize,
    rows: Vec<SparseVec<F>>,
    pivot_row: HashMap<usize, usize>,
}

impl<F: Field> SpanTracker<F> {
    pub fn new(ambient_dim: usize) -> Self {
        SpanTracker {
            ambient_dim,
            rows: Vec::new(),
            pivot_row: HashMap::new(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVec<F>] {
        &self.rows
    }

    fn check_dim(&self, v: &SparseVec<F>) -> Result<(), LinalgError> {
        match v.max_index() {
            Some(i) if i >= self.ambient_dim => Err(LinalgError::DimensionMismatch {
                expected: self.ambient_dim,
                got: i + 1,
            }),
            _ => Ok(()),
        }
    }

    /// Component of `v` outside the current span (zero iff `v` is in the span).
    pub fn reduce(&self, v: &SparseVec<F>) -> SparseVec<F> {
        let hits: Vec<(usize, F)> = v
            .entries
            .iter()
            .filter_map(|(c, val)| self.pivot_row.get(c).map(|&r| (r, val.clone())))
            .collect();
        let mut out = v.clone();
        for (r, coef) in hits {
            out = out.sub_scaled(&coef, &self.rows[r]);
        }
        out
    }

    pub fn contains(&self, v: &SparseVec<F>) -> Result<bool, LinalgError> {
        self.check_dim(v)?;
        Ok(self.reduce(v).is_zero())
    }

    /// Adds `v`; returns true iff it enlarged the span.
    pub fn add(&mut self, v: &SparseVec<F>) -> Result<bool, LinalgError> {
        self.check_dim(v)?;
        let mut rem = self.reduce(v);
        let Some((pivot, lead)) = rem.entries.first().cloned() else {
            return Ok(false);
        };
        rem.scale(&lead.inverse().expect("nonzero lead"));
        for row in &mut self.rows {
            if let Some(f) = row.get(pivot).cloned() {
                *row = row.sub_scaled(&f, &rem);
            }
        }
        self.pivot_row.insert(pivot, self.rows.len());
        self.rows.push(rem);
        Ok(true)
    }

    pub fn add_dense(&mut self, v: &[F]) -> Result<bool, LinalgError> {
        if v.len() != self.ambient_dim {
            return Err(LinalgError::DimensionMismatch {
                expected: self.ambient_dim,
                got: v.len(),
            });
        }
        self.add(&SparseVec::from_dense(v))
    }

    /// Stored rows as a dense matrix (rank × ambient_dim).
    pub fn to_matrix(&self) -> Matrix<F> {
        Matrix::from_rows(
            self.rows
                .iter()
                .map(|r| r.to_dense(self.ambient_dim))
                .collect(),
        )
    }
}
