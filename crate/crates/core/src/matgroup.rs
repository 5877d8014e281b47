//! Finite groups of 2×2 matrices over Q(ζ₂₄): closure, element indexing and
//! conjugacy classes.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactnum::{int, rat, CycNum, ParseError};

/// Multiplication tables are materialized only up to this order.
pub const TABLE_LIMIT: usize = 256;

#[derive(Debug, Error)]
pub enum GroupError {
    #[error("group closure exceeded cap of {cap} elements")]
    CapExceeded { cap: usize },
    #[error("generator {index} is singular")]
    SingularGenerator { index: usize },
    #[error("cap must be at least 1")]
    BadCap,
    #[error("generator file: {0}")]
    Json(#[from] serde_json::Error),
    #[error("generator {index}, entry ({row},{col}): {source}")]
    Entry {
        index: usize,
        row: usize,
        col: usize,
        source: ParseError,
    },
}

/// 2×2 matrix stored row-major.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Mat2 {
    pub e: [CycNum; 4],
}

impl Mat2 {
    pub fn new(a: CycNum, b: CycNum, c: CycNum, d: CycNum) -> Self {
        Mat2 { e: [a, b, c, d] }
    }

    pub fn identity() -> Self {
        Self::new(CycNum::one(), CycNum::zero(), CycNum::zero(), CycNum::one())
    }

    pub fn scalar(s: CycNum) -> Self {
        Self::new(s.clone(), CycNum::zero(), CycNum::zero(), s)
    }

    pub fn entry(&self, r: usize, c: usize) -> &CycNum {
        &self.e[2 * r + c]
    }

    pub fn mul(&self, o: &Mat2) -> Mat2 {
        let [a, b, c, d] = &self.e;
        let [p, q, r, s] = &o.e;
        Mat2::new(
            &(a * p) + &(b * r),
            &(a * q) + &(b * s),
            &(c * p) + &(d * r),
            &(c * q) + &(d * s),
        )
    }

    pub fn det(&self) -> CycNum {
        let [a, b, c, d] = &self.e;
        &(a * d) - &(b * c)
    }

    pub fn trace(&self) -> CycNum {
        &self.e[0] + &self.e[3]
    }

    pub fn inverse(&self) -> Option<Mat2> {
        let inv_det = self.det().inv().ok()?;
        let [a, b, c, d] = &self.e;
        Some(Mat2::new(
            d * &inv_det,
            &(-b) * &inv_det,
            &(-c) * &inv_det,
            a * &inv_det,
        ))
    }

    pub fn scale(&self, s: &CycNum) -> Mat2 {
        Mat2 {
            e: std::array::from_fn(|k| &self.e[k] * s),
        }
    }

    /// `[a, b; c, d]` with entries in canonical CycNum text form.
    pub fn to_text(&self) -> String {
        format!(
            "[{}, {}; {}, {}]",
            self.e[0], self.e[1], self.e[2], self.e[3]
        )
    }

    pub fn to_strings(&self) -> [[String; 2]; 2] {
        [
            [self.e[0].to_text(), self.e[1].to_text()],
            [self.e[2].to_text(), self.e[3].to_text()],
        ]
    }
}

/// The four code groups.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GroupName {
    I,
    II,
    III,
    IV,
}

impl GroupName {
    pub const ALL: [GroupName; 4] = [GroupName::I, GroupName::II, GroupName::III, GroupName::IV];

    /// The two generators: a MacWilliams-type transform and a diagonal matrix.
    pub fn generators(self) -> Vec<Mat2> {
        let n = CycNum::named();
        let c = |v: i64| CycNum::from_int(v);
        match self {
            GroupName::I | GroupName::II => {
                let s = n.sqrt2.scale(&rat(1, 2));
                let hadamard = Mat2::new(c(1), c(1), c(1), c(-1)).scale(&s);
                let diag = if self == GroupName::I { c(-1) } else { n.i };
                vec![hadamard, Mat2::new(c(1), c(0), c(0), diag)]
            }
            GroupName::III => {
                let s = n.sqrt3.scale(&rat(1, 3));
                vec![
                    Mat2::new(c(1), c(2), c(1), c(-1)).scale(&s),
                    Mat2::new(c(1), c(0), c(0), n.omega3),
                ]
            }
            GroupName::IV => {
                let half = CycNum::from_rational(rat(1, 2));
                vec![
                    Mat2::new(c(1), c(3), c(1), c(-1)).scale(&half),
                    Mat2::new(c(1), c(0), c(0), CycNum::from_rational(int(-1))),
                ]
            }
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            GroupName::I => "I",
            GroupName::II => "II",
            GroupName::III => "III",
            GroupName::IV => "IV",
        }
    }
}

impl fmt::Display for GroupName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for GroupName {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.trim().to_ascii_uppercase().as_str() {
            "I" | "1" => Ok(GroupName::I),
            "II" | "2" => Ok(GroupName::II),
            "III" | "3" => Ok(GroupName::III),
            "IV" | "4" => Ok(GroupName::IV),
            other => Err(format!(
                "unknown group `{other}` (expected I, II, III or IV)"
            )),
        }
    }
}

/// A closed finite matrix group with the identity at index 0.
#[derive(Clone, Debug)]
pub struct FiniteMatrixGroup {
    elements: Vec<Mat2>,
    index: HashMap<Mat2, usize>,
    table: Option<Vec<u32>>,
    inverses: Vec<usize>,
    generators: Vec<Mat2>,
    /// (parent, generator) with element = parent·generator; the root has no generator.
    tree: Vec<(usize, usize)>,
    /// perms[g][x] = index of x·g
    perms: Vec<Vec<usize>>,
}

/// Conjugacy classes in canonical order; `classes[0]` is the identity class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyData {
    pub classes: Vec<Vec<usize>>,
    pub class_of: Vec<usize>,
    pub representatives: Vec<usize>,
}

impl ConjugacyData {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }

    /// Position of each element inside its class.
    pub fn position_in_class(&self) -> Vec<usize> {
        let mut pos = vec![0; self.class_of.len()];
        for class in &self.classes {
            for (p, &x) in class.iter().enumerate() {
                pos[x] = p;
            }
        }
        pos
    }
}

/// Breadth-first closure of `generators` under right multiplication.
///
/// The BFS tree records each element as parent·generator, so products are later
/// evaluated through the generator permutations without further matrix arithmetic.
pub fn generate_group(generators: &[Mat2], cap: usize) -> Result<FiniteMatrixGroup, GroupError> {
    if cap == 0 {
        return Err(GroupError::BadCap);
    }
    for (i, g) in generators.iter().enumerate() {
        if g.det().is_zero() {
            return Err(GroupError::SingularGenerator { index: i });
        }
    }
    let mut elements = vec![Mat2::identity()];
    let mut index = HashMap::from([(Mat2::identity(), 0usize)]);
    let mut tree = vec![(0usize, usize::MAX)];
    let mut perms: Vec<Vec<usize>> = vec![Vec::new(); generators.len()];
    let mut head = 0;
    while head < elements.len() {
        let x = elements[head].clone();
        for (gi, g) in generators.iter().enumerate() {
            let y = x.mul(g);
            let target = match index.get(&y) {
                Some(&t) => t,
                None => {
                    if elements.len() == cap {
                        return Err(GroupError::CapExceeded { cap });
                    }
                    let t = elements.len();
                    index.insert(y.clone(), t);
                    elements.push(y);
                    tree.push((head, gi));
                    t
                }
            };
            perms[gi].push(target);
        }
        head += 1;
    }
    let mut group = FiniteMatrixGroup {
        elements,
        index,
        table: None,
        inverses: Vec::new(),
        generators: generators.to_vec(),
        tree,
        perms,
    };
    let n = group.order();
    if n <= TABLE_LIMIT {
        // BFS order puts parents first, so row x fills left to right.
        let mut table = vec![0u32; n * n];
        for x in 0..n {
            table[x * n] = x as u32;
            for y in 1..n {
                let (parent, gi) = group.tree[y];
                table[x * n + y] = group.perms[gi][table[x * n + parent] as usize] as u32;
            }
        }
        group.inverses = (0..n)
            .map(|x| {
                (0..n)
                    .find(|&y| table[x * n + y] == 0)
                    .expect("inverse exists")
            })
            .collect();
        group.table = Some(table);
    } else {
        group.inverses = group
            .elements
            .iter()
            .map(|x| group.index[&x.inverse().expect("group elements are invertible")])
            .collect();
    }
    Ok(group)
}

pub fn builtin_group(name: GroupName) -> FiniteMatrixGroup {
    generate_group(&name.generators(), 1024).expect("built-in generators close to a finite group")
}

/// Reads a generator file: a JSON array of 2×2 arrays of CycNum text forms.
pub fn parse_generator_file(text: &str) -> Result<Vec<Mat2>, GroupError> {
    let raw: Vec<[[String; 2]; 2]> = serde_json::from_str(text)?;
    raw.iter()
        .enumerate()
        .map(|(index, m)| {
            let mut entries = Vec::with_capacity(4);
            for (row, cols) in m.iter().enumerate() {
                for (col, s) in cols.iter().enumerate() {
                    let v = CycNum::parse(s).map_err(|source| GroupError::Entry {
                        index,
                        row,
                        col,
                        source,
                    })?;
                    entries.push(v);
                }
            }
            let mut it = entries.into_iter();
            Ok(Mat2 {
                e: std::array::from_fn(|_| it.next().unwrap()),
            })
        })
        .collect()
}

impl FiniteMatrixGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Mat2] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Mat2 {
        &self.elements[i]
    }

    pub fn generators(&self) -> &[Mat2] {
        &self.generators
    }

    pub fn index_of(&self, m: &Mat2) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn has_table(&self) -> bool {
        self.table.is_some()
    }

    /// Product via the word of `b` in the BFS tree.
    fn mul_slow(&self, a: usize, b: usize) -> usize {
        let mut word = Vec::new();
        let mut y = b;
        while y != 0 {
            let (parent, gi) = self.tree[y];
            word.push(gi);
            y = parent;
        }
        word.iter().rev().fold(a, |acc, &gi| self.perms[gi][acc])
    }

    /// Index of elements[a]·elements[b].
    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.table {
            Some(t) => t[a * self.order() + b] as usize,
            None => self.mul_slow(a, b),
        }
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn conjugacy_classes(&self) -> ConjugacyData {
        let n = self.order();
        let mut assigned = vec![false; n];
        let mut raw: Vec<Vec<usize>> = Vec::new();
        for x in 0..n {
            if assigned[x] {
                continue;
            }
            let mut class: Vec<usize> = (0..n)
                .map(|g| self.mul(self.mul(g, x), self.inv(g)))
                .collect();
            class.sort_unstable();
            class.dedup();
            for &y in &class {
                assigned[y] = true;
            }
            raw.push(class);
        }
        let keyed: Vec<(usize, String, usize, Vec<usize>)> = raw
            .into_iter()
            .map(|class| {
                let (rep, text) = class
                    .iter()
                    .map(|&e| (e, self.elements[e].to_text()))
                    .min_by(|a, b| a.1.cmp(&b.1))
                    .expect("nonempty class");
                (class.len(), text, rep, class)
            })
            .collect();
        let (mut identity, mut rest): (Vec<_>, Vec<_>) =
            keyed.into_iter().partition(|(_, _, _, c)| c.contains(&0));
        rest.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
        identity.append(&mut rest);
        let mut class_of = vec![0; n];
        let mut classes = Vec::new();
        let mut representatives = Vec::new();
        for (ci, (_, _, rep, class)) in identity.into_iter().enumerate() {
            for &e in &class {
                class_of[e] = ci;
            }
            representatives.push(rep);
            classes.push(class);
        }
        ConjugacyData {
            classes,
            class_of,
            representatives,
        }
    }
}
