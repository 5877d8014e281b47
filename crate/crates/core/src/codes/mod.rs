//! Linear codes over F₂, F₃, F₄: weight enumerators, duals, Type I–IV and the
//! invariance of the weight enumerator under the matching group.

mod field;

pub use field::{is_supported, FiniteFieldElem};

use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;
use thiserror::Error;

use crate::exactnum::{int, CycNum};
use crate::invariants::BivarPoly;
use crate::matgroup::{builtin_group, GroupName};

/// Largest code size q^k that is enumerated.
pub const MAX_CODEWORDS: u64 = 1 << 24;

#[derive(Debug, Error)]
pub enum CodeError {
    #[error("unsupported field order {0}; expected 2, 3 or 4")]
    BadField(u8),
    #[error("row {row} has length {got}, expected {expected}")]
    RowLength {
        row: usize,
        expected: usize,
        got: usize,
    },
    #[error("row {row}, column {col}: {reason}")]
    BadEntry {
        row: usize,
        col: usize,
        reason: String,
    },
    #[error("generator matrix must be a JSON array of rows")]
    NotAnArray,
    #[error("code has {q}^{k} codewords, more than the enumeration limit of 2^24")]
    TooLarge { q: u8, k: usize },
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

/// Bilinear form used for duality.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum InnerProduct {
    /// Σ x_i y_i.
    Euclidean,
    /// Σ x_i ȳ_i with ȳ = y² on F₄; same as Euclidean on F₂, F₃.
    Hermitian,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CodeType {
    I,
    II,
    III,
    IV,
    #[serde(rename = "none")]
    None,
}

impl CodeType {
    pub fn group(self) -> Option<GroupName> {
        match self {
            CodeType::I => Some(GroupName::I),
            CodeType::II => Some(GroupName::II),
            CodeType::III => Some(GroupName::III),
            CodeType::IV => Some(GroupName::IV),
            CodeType::None => None,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            CodeType::I => "I",
            CodeType::II => "II",
            CodeType::III => "III",
            CodeType::IV => "IV",
            CodeType::None => "none",
        }
    }
}

/// Linear code given by a generator matrix kept in reduced row echelon form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearCode {
    q: u8,
    n: usize,
    rows: Vec<Vec<FiniteFieldElem>>,
}

fn rref(mut rows: Vec<Vec<FiniteFieldElem>>, n: usize) -> (Vec<Vec<FiniteFieldElem>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..n {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][col].inv().expect("nonzero pivot");
        for x in rows[r].iter_mut() {
            *x = *x * inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][col].is_zero() {
                let f = rows[i][col];
                let pivot_row = rows[r].clone();
                for (x, p) in rows[i].iter_mut().zip(&pivot_row) {
                    *x = *x - f * *p;
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    (rows, pivots)
}

impl LinearCode {
    pub fn new(q: u8, n: usize, rows: Vec<Vec<FiniteFieldElem>>) -> Result<Self, CodeError> {
        if !is_supported(q) {
            return Err(CodeError::BadField(q));
        }
        for (row, r) in rows.iter().enumerate() {
            if r.len() != n {
                return Err(CodeError::RowLength {
                    row,
                    expected: n,
                    got: r.len(),
                });
            }
            if let Some(col) = r.iter().position(|x| x.q() != q) {
                return Err(CodeError::BadEntry {
                    row,
                    col,
                    reason: "entry from another field".into(),
                });
            }
        }
        let (rows, _) = rref(rows, n);
        Ok(Self { q, n, rows })
    }

    /// Code from integer rows; entries reduced mod q, or (q = 4) the a + 2b packing.
    pub fn from_ints(q: u8, rows: &[Vec<i64>]) -> Result<Self, CodeError> {
        if !is_supported(q) {
            return Err(CodeError::BadField(q));
        }
        let n = rows.first().map_or(0, Vec::len);
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&v| FiniteFieldElem::from_int(q, v)).collect())
            .collect();
        Self::new(q, n, rows)
    }

    pub fn q(&self) -> u8 {
        self.q
    }

    pub fn length(&self) -> usize {
        self.n
    }

    pub fn dimension(&self) -> usize {
        self.rows.len()
    }

    pub fn generator_matrix(&self) -> &[Vec<FiniteFieldElem>] {
        &self.rows
    }

    /// q^k, or None past the enumeration limit.
    pub fn size(&self) -> Option<u64> {
        let mut s: u64 = 1;
        for _ in 0..self.dimension() {
            s = s
                .checked_mul(u64::from(self.q))
                .filter(|&v| v <= MAX_CODEWORDS)?;
        }
        Some(s)
    }

    fn codeword(&self, mut index: u64) -> Vec<FiniteFieldElem> {
        let mut word = vec![FiniteFieldElem::zero(self.q); self.n];
        for row in &self.rows {
            let coeff = FiniteFieldElem::new(self.q, (index % u64::from(self.q)) as u8);
            index /= u64::from(self.q);
            if coeff.is_zero() {
                continue;
            }
            for (w, r) in word.iter_mut().zip(row) {
                *w = *w + coeff * *r;
            }
        }
        word
    }

    /// Number of codewords of each weight 0..=n.
    pub fn weight_distribution(&self) -> Result<Vec<u64>, CodeError> {
        let size = self.size().ok_or(CodeError::TooLarge {
            q: self.q,
            k: self.dimension(),
        })?;
        let n = self.n;
        Ok((0..size)
            .into_par_iter()
            .fold(
                || vec![0u64; n + 1],
                |mut acc, i| {
                    acc[self.codeword(i).iter().filter(|x| !x.is_zero()).count()] += 1;
                    acc
                },
            )
            .reduce(
                || vec![0u64; n + 1],
                |a, b| a.iter().zip(&b).map(|(x, y)| x + y).collect(),
            ))
    }

    /// w_C(x, y) = Σ_c x^{n−wt(c)} y^{wt(c)}.
    pub fn weight_enumerator(&self) -> Result<BivarPoly, CodeError> {
        let dist = self.weight_distribution()?;
        let n = self.n as u32;
        Ok(dist
            .iter()
            .enumerate()
            .fold(BivarPoly::zero(), |acc, (w, &count)| {
                acc.add(&BivarPoly::monomial(
                    CycNum::from_rational(int(count as i64)),
                    n - w as u32,
                    w as u32,
                ))
            }))
    }

    /// Dual code under the chosen form.
    pub fn dual(&self, form: InnerProduct) -> LinearCode {
        let (rows, pivots) = rref(self.rows.clone(), self.n);
        let rows: Vec<Vec<FiniteFieldElem>> = match form {
            InnerProduct::Euclidean => rows,
            // Σ x_i ȳ_i = 0 ⟺ Σ x̄_i y_i = 0
            InnerProduct::Hermitian => rows
                .iter()
                .map(|r| r.iter().map(|x| x.conj()).collect())
                .collect(),
        };
        let (rows, pivots) = if form == InnerProduct::Hermitian {
            rref(rows, self.n)
        } else {
            (rows, pivots)
        };
        let free: Vec<usize> = (0..self.n).filter(|c| !pivots.contains(c)).collect();
        let basis = free
            .iter()
            .map(|&f| {
                let mut v = vec![FiniteFieldElem::zero(self.q); self.n];
                v[f] = FiniteFieldElem::one(self.q);
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = -rows[r][f];
                }
                v
            })
            .collect();
        LinearCode::new(self.q, self.n, basis).expect("same field and length")
    }

    pub fn is_self_dual(&self, form: InnerProduct) -> bool {
        2 * self.dimension() == self.n && self.dual(form) == *self
    }

    /// Type I–IV by self-duality and weight divisibility (2, 4, 3, 2); Type II wins over I.
    pub fn classify(&self, form: InnerProduct) -> Result<CodeType, CodeError> {
        if !self.is_self_dual(form) {
            return Ok(CodeType::None);
        }
        let dist = self.weight_distribution()?;
        let all_divisible = |m: usize| dist.iter().enumerate().all(|(w, &c)| c == 0 || w % m == 0);
        Ok(match self.q {
            2 if all_divisible(4) => CodeType::II,
            2 if all_divisible(2) => CodeType::I,
            3 if all_divisible(3) => CodeType::III,
            4 if all_divisible(2) => CodeType::IV,
            _ => CodeType::None,
        })
    }
}

/// Parses a JSON array of rows; entries are integers mod q, or [a, b] pairs for
/// a + bω when q = 4.
pub fn parse_generator_matrix(text: &str, q: u8) -> Result<LinearCode, CodeError> {
    if !is_supported(q) {
        return Err(CodeError::BadField(q));
    }
    let value: Value = serde_json::from_str(text)?;
    let rows = value.as_array().ok_or(CodeError::NotAnArray)?;
    let mut out = Vec::with_capacity(rows.len());
    for (r, row) in rows.iter().enumerate() {
        let row = row.as_array().ok_or(CodeError::BadEntry {
            row: r,
            col: 0,
            reason: "row is not an array".into(),
        })?;
        let entries = row
            .iter()
            .enumerate()
            .map(|(c, v)| {
                parse_entry(v, q).map_err(|reason| CodeError::BadEntry {
                    row: r,
                    col: c,
                    reason,
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        out.push(entries);
    }
    let n = out.first().map_or(0, Vec::len);
    LinearCode::new(q, n, out)
}

fn parse_entry(v: &Value, q: u8) -> Result<FiniteFieldElem, String> {
    if q == 4 {
        let pair = v
            .as_array()
            .filter(|p| p.len() == 2)
            .ok_or("expected an [a, b] pair")?;
        let bit = |x: &Value| {
            x.as_i64()
                .map(|b| b.rem_euclid(2) as u8)
                .ok_or("pair entries must be integers")
        };
        Ok(FiniteFieldElem::f4(bit(&pair[0])?, bit(&pair[1])?))
    } else {
        v.as_i64()
            .map(|x| FiniteFieldElem::from_int(q, x))
            .ok_or_else(|| "expected an integer".into())
    }
}

/// Outcome of applying every element of a group to a weight enumerator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct InvarianceReport {
    pub group: String,
    pub elements: usize,
    pub fixed: usize,
    /// Indices of the elements that move the polynomial.
    pub moved_by: Vec<usize>,
}

impl InvarianceReport {
    pub fn passed(&self) -> bool {
        self.moved_by.is_empty()
    }
}

/// Applies every element of the built-in group `g` to `p`.
pub fn invariance_under(p: &BivarPoly, g: GroupName) -> InvarianceReport {
    let group = builtin_group(g);
    let moved_by: Vec<usize> = (0..group.order())
        .into_par_iter()
        .filter(|&i| p.act_on(group.element(i)) != *p)
        .collect();
    InvarianceReport {
        group: g.label().into(),
        elements: group.order(),
        fixed: group.order() - moved_by.len(),
        moved_by,
    }
}

/// Checks the weight enumerator against the group matching the code's type.
pub fn check_enumerator_invariance(
    code: &LinearCode,
    form: InnerProduct,
) -> Result<Option<InvarianceReport>, CodeError> {
    let Some(g) = code.classify(form)?.group() else {
        return Ok(None);
    };
    Ok(Some(invariance_under(&code.weight_enumerator()?, g)))
}

/// Sample codes, one per type.
pub mod fixtures {
    use super::*;

    pub const NAMES: [&str; 5] = [
        "repetition2",
        "hamming8",
        "tetracode",
        "hexacode",
        "repetition4",
    ];

    pub fn by_name(name: &str) -> Option<LinearCode> {
        match name {
            "repetition2" => Some(repetition2()),
            "hamming8" => Some(hamming8()),
            "tetracode" => Some(tetracode()),
            "hexacode" => Some(hexacode()),
            "repetition4" => Some(repetition4()),
            _ => None,
        }
    }

    /// {00, 11} over F₂.
    pub fn repetition2() -> LinearCode {
        LinearCode::from_ints(2, &[vec![1, 1]]).expect("valid fixture")
    }

    /// Extended Hamming [8, 4, 4] code.
    pub fn hamming8() -> LinearCode {
        LinearCode::from_ints(
            2,
            &[
                vec![1, 0, 0, 0, 0, 1, 1, 1],
                vec![0, 1, 0, 0, 1, 0, 1, 1],
                vec![0, 0, 1, 0, 1, 1, 0, 1],
                vec![0, 0, 0, 1, 1, 1, 1, 0],
            ],
        )
        .expect("valid fixture")
    }

    /// Ternary tetracode [4, 2, 3].
    pub fn tetracode() -> LinearCode {
        LinearCode::from_ints(3, &[vec![1, 0, 1, 1], vec![0, 1, 1, 2]]).expect("valid fixture")
    }

    /// Quaternary hexacode [6, 3, 4].
    pub fn hexacode() -> LinearCode {
        let (o, l, w) = (
            FiniteFieldElem::zero(4),
            FiniteFieldElem::one(4),
            FiniteFieldElem::f4(0, 1),
        );
        LinearCode::new(
            4,
            6,
            vec![
                vec![l, o, o, l, w, w],
                vec![o, l, o, w, l, w],
                vec![o, o, l, w, w, l],
            ],
        )
        .expect("valid fixture")
    }

    /// {00, 11} over F₄.
    pub fn repetition4() -> LinearCode {
        LinearCode::from_ints(4, &[vec![1, 1]]).expect("valid fixture")
    }
}
