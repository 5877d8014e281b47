//! Published values for the four groups, kept verbatim so reports can compare
//! computed results against them.

use crate::exactnum::{rat, Rational};
use crate::invariants::BivarPoly;
use crate::matgroup::GroupName;

/// Order and number of conjugacy classes.
pub fn order_and_classes(g: GroupName) -> (usize, usize) {
    match g {
        GroupName::I => (16, 7),
        GroupName::II => (192, 32),
        GroupName::III => (48, 14),
        GroupName::IV => (12, 6),
    }
}

/// Class sizes in the published listing order.
pub fn class_sizes(g: GroupName) -> Vec<usize> {
    match g {
        GroupName::I => vec![1, 4, 2, 1, 4, 2, 2],
        GroupName::II => vec![
            1, 6, 6, 6, 6, 12, 12, 6, 12, 12, 6, 1, 6, 6, 8, 8, 8, 1, 1, 8, 1, 6, 6, 8, 8, 8, 1, 6,
            1, 6, 8, 1,
        ],
        GroupName::III => vec![1, 4, 4, 1, 4, 4, 6, 1, 4, 4, 1, 4, 4, 6],
        GroupName::IV => vec![1, 3, 3, 2, 2, 1],
    }
}

/// Published dimension of T(G).
pub fn dimension(g: GroupName) -> usize {
    match g {
        GroupName::I => 64,
        GroupName::II => 2808,
        GroupName::III => 300,
        GroupName::IV => 44,
    }
}

/// Published dimension of the center of T(G).
pub fn center_dimension(g: GroupName) -> usize {
    match g {
        GroupName::I => 5,
        GroupName::II => 6,
        GroupName::III => 3,
        GroupName::IV => 3,
    }
}

/// Published degrees of the primitive central idempotents.
pub fn degrees(g: GroupName) -> Vec<usize> {
    match g {
        GroupName::I => vec![1, 1, 2, 3, 7],
        GroupName::II => vec![4, 8, 12, 16, 24, 32],
        GroupName::III => vec![2, 10, 16],
        GroupName::IV => vec![2, 2, 6],
    }
}

/// Depth at which the published basis argument closes.
pub const CLOSURE_DEPTH: usize = 2;

/// Published block-count matrix, rows and columns in the listing order of [`class_sizes`].
pub fn block_counts(g: GroupName) -> Vec<Vec<usize>> {
    match g {
        GroupName::I => vec![
            vec![1, 1, 1, 1, 1, 1, 1],
            vec![1, 3, 1, 1, 2, 1, 1],
            vec![1, 1, 2, 1, 1, 2, 2],
            vec![1, 1, 1, 1, 1, 1, 1],
            vec![1, 2, 1, 1, 3, 1, 1],
            vec![1, 1, 2, 1, 1, 2, 2],
            vec![1, 1, 2, 1, 1, 2, 2],
        ],
        GroupName::II => g2_block_counts(),
        GroupName::III => {
            let a = vec![1; 14];
            let b = vec![1, 2, 2, 1, 2, 2, 2, 1, 2, 2, 1, 2, 2, 2];
            let c = vec![1, 2, 2, 1, 2, 2, 3, 1, 2, 2, 1, 2, 2, 3];
            "abbabbcabbabbc"
                .chars()
                .map(|t| match t {
                    'a' => a.clone(),
                    'b' => b.clone(),
                    _ => c.clone(),
                })
                .collect()
        }
        GroupName::IV => vec![
            vec![1, 1, 1, 1, 1, 1],
            vec![1, 2, 2, 1, 1, 1],
            vec![1, 2, 2, 1, 1, 1],
            vec![1, 1, 1, 2, 2, 1],
            vec![1, 1, 1, 2, 2, 1],
            vec![1, 1, 1, 1, 1, 1],
        ],
    }
}

/// The 32×32 table has only four distinct rows; `ROW_TYPES` selects one per class.
fn g2_block_counts() -> Vec<Vec<usize>> {
    const ROW_TYPES: &str = "abbbbccbccbabbdddaadabbdddababda";
    let a = vec![1; 32];
    let b = vec![
        1, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 1, 3, 3, 2, 2, 2, 1, 1, 2, 1, 3, 3, 2, 2, 2, 1, 3, 1, 3,
        2, 1,
    ];
    let c = vec![
        1, 3, 3, 3, 3, 5, 5, 3, 5, 5, 3, 1, 3, 3, 3, 3, 3, 1, 1, 3, 1, 3, 3, 3, 3, 3, 1, 3, 1, 3,
        3, 1,
    ];
    let d = vec![
        1, 2, 2, 2, 2, 3, 3, 2, 3, 3, 2, 1, 2, 2, 4, 4, 4, 1, 1, 4, 1, 2, 2, 4, 4, 4, 1, 2, 1, 2,
        4, 1,
    ];
    ROW_TYPES
        .chars()
        .map(|t| match t {
            'a' => a.clone(),
            'b' => b.clone(),
            'c' => c.clone(),
            _ => d.clone(),
        })
        .collect()
}

/// Degrees (a, b) of the published Molien product 1/((1-t^a)(1-t^b)).
pub fn molien_degrees(g: GroupName) -> (u32, u32) {
    match g {
        GroupName::I => (2, 8),
        GroupName::II => (8, 24),
        GroupName::III => (4, 12),
        GroupName::IV => (2, 6),
    }
}

/// Generators f, g of the invariant ring as printed.
pub fn invariant_generators(g: GroupName) -> (BivarPoly, BivarPoly) {
    let one = || rat(1, 1);
    match g {
        GroupName::I => (
            BivarPoly::from_integer_terms(one(), &[(1, 2, 0), (1, 0, 2)]),
            // x²y²(x² − y²)²
            BivarPoly::from_integer_terms(one(), &[(1, 6, 2), (-2, 4, 4), (1, 2, 6)]),
        ),
        GroupName::II => (
            BivarPoly::from_integer_terms(one(), &[(1, 8, 0), (14, 4, 4), (1, 0, 8)]),
            // x⁴y⁴(x⁴ − y⁴)⁴
            BivarPoly::from_integer_terms(
                one(),
                &[
                    (1, 20, 4),
                    (-4, 16, 8),
                    (6, 12, 12),
                    (-4, 8, 16),
                    (1, 4, 20),
                ],
            ),
        ),
        GroupName::III => (
            BivarPoly::from_integer_terms(one(), &[(1, 4, 0), (8, 1, 3)]),
            // y³(x³ − y³)³
            BivarPoly::from_integer_terms(one(), &[(1, 9, 3), (-3, 6, 6), (3, 3, 9), (-1, 0, 12)]),
        ),
        GroupName::IV => (
            BivarPoly::from_integer_terms(one(), &[(1, 2, 0), (3, 0, 2)]),
            // y²(x² − y²)²
            BivarPoly::from_integer_terms(one(), &[(1, 4, 2), (-2, 2, 4), (1, 0, 6)]),
        ),
    }
}

/// A printed E-polynomial: its label index, as printed, and its polynomial.
#[derive(Clone, Debug)]
pub struct PrintedForm {
    pub label_degree: u32,
    pub poly: BivarPoly,
}

/// The explicit E-polynomial forms as printed, in printed order.
pub fn printed_e_polynomials(g: GroupName) -> Vec<PrintedForm> {
    let form = |label_degree, factor, terms: &[(i64, u32, u32)]| PrintedForm {
        label_degree,
        poly: BivarPoly::from_integer_terms(factor, terms),
    };
    match g {
        GroupName::I => vec![
            form(2, rat(1, 2), &[(1, 2, 0), (1, 0, 2)]),
            form(
                8,
                rat(1, 32),
                &[(9, 8, 0), (28, 6, 2), (70, 4, 4), (28, 2, 6), (9, 0, 8)],
            ),
        ],
        GroupName::II => vec![
            form(8, rat(1, 24), &[(5, 8, 0), (70, 4, 4), (5, 0, 8)]),
            form(
                24,
                rat(1, 6144),
                &[
                    (1, 24, 0),
                    (10626, 20, 4),
                    (735471, 16, 8),
                    (2704156, 12, 12),
                    (735471, 8, 16),
                    (10626, 4, 20),
                    (1025, 0, 24),
                ],
            ),
        ],
        GroupName::III => vec![
            form(4, rat(1, 3), &[(1, 4, 0), (8, 1, 3)]),
            form(
                12,
                rat(243, 1),
                &[
                    (61, 12, 0),
                    (440, 9, 3),
                    (14784, 6, 6),
                    (28160, 3, 9),
                    (1024, 0, 12),
                ],
            ),
        ],
        GroupName::IV => vec![
            form(8, rat(1, 2), &[(1, 2, 0), (3, 0, 2)]),
            form(
                24,
                rat(1, 32),
                &[(11, 6, 0), (45, 4, 2), (405, 2, 4), (243, 0, 6)],
            ),
        ],
    }
}

/// Terms (m, n, c) of Σ c φ_a^m φ_b^n.
pub type ExpressionTerms = Vec<(u32, u32, Rational)>;

/// Printed expressions of f and g in the E-polynomial generators, as
/// (name, [(m, n, c)]) meaning Σ c φ_a^m φ_b^n.
pub fn printed_generator_expressions(g: GroupName) -> Vec<(&'static str, ExpressionTerms)> {
    match g {
        GroupName::III => vec![
            ("f = 3 phi_4", vec![(1, 0, rat(3, 1))]),
            (
                "g = (1647 phi_4^3 - 243 phi_12)/1024",
                vec![(3, 0, rat(1647, 1024)), (0, 1, rat(-243, 1024))],
            ),
        ],
        _ => Vec::new(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn transcriptions_are_consistent() {
        for g in GroupName::ALL {
            let sizes = class_sizes(g);
            let (order, count) = order_and_classes(g);
            assert_eq!(sizes.len(), count);
            assert_eq!(sizes.iter().sum::<usize>(), order);
            let m = block_counts(g);
            assert_eq!(m.len(), count);
            for (i, row) in m.iter().enumerate() {
                assert_eq!(row.len(), count);
                for (k, &v) in row.iter().enumerate() {
                    assert_eq!(v, m[k][i]);
                }
            }
        }
    }

    #[test]
    fn printed_block_totals() {
        let total = |g| block_counts(g).iter().flatten().sum::<usize>();
        assert_eq!(total(GroupName::I), 64);
        assert_eq!(total(GroupName::II), 2080);
        assert_eq!(total(GroupName::III), 300);
        assert_eq!(total(GroupName::IV), 44);
    }
}
