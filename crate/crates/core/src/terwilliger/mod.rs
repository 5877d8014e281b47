//! Terwilliger algebra T(G) = ⟨A_i, E_i*⟩ of a group association scheme: basis
//! closure, block counts, center, primitive central idempotents and degrees.

mod block;
mod center;
mod closure;
mod compare;
mod idempotents;

pub use block::{BlockDiagonal, BlockElement, BlockLayout, GeneratorBlock};
pub use center::{center_basis, generating_weights, CenterData};
pub use closure::{all_generators, basis_closure, BasisElement, Closure};
pub use compare::{match_block_counts, MatchOutcome};
pub use idempotents::{
    central_idempotents, structure_constants, verify_idempotents, wedderburn_degrees, Idempotents,
};

use thiserror::Error;

use crate::exactnum::{int, Rational};
use crate::linalg::{LinalgError, SparseMatrix, SparseVec};
use crate::scheme::AssociationScheme;

pub const DEFAULT_MAX_DEPTH: usize = 4;

#[derive(Debug, Error)]
pub enum TerwilligerError {
    #[error("maxDepth must be at least 2, got {0}")]
    BadDepth(usize),
    #[error("span still growing at depth {depth} (rank {rank})")]
    DepthExceeded { depth: usize, rank: usize },
    #[error("basis product entry overflowed i64")]
    EntryOverflow,
    #[error("central idempotents could not be split exactly: {0}")]
    SplittingFailure(String),
    #[error("dim Tε = {rank} is not a perfect square (idempotent {index})")]
    NonSquareRank { index: usize, rank: usize },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Diagonal 0/1 projections E_0*..E_d* onto the classes.
pub fn dual_idempotents(scheme: &AssociationScheme) -> Vec<SparseMatrix<Rational>> {
    let data = scheme.classes();
    let n = scheme.order();
    (0..data.len())
        .map(|i| SparseMatrix {
            rows: n,
            cols: n,
            row_data: (0..n)
                .map(|x| {
                    if data.class_of[x] == i {
                        SparseVec::from_pairs([(x, int(1))])
                    } else {
                        SparseVec::new()
                    }
                })
                .collect(),
        })
        .collect()
}

/// Fully decomposed Terwilliger algebra.
#[derive(Clone, Debug)]
pub struct TAlgebra {
    pub layout: BlockLayout,
    pub closure: Closure,
    pub block_counts: Vec<Vec<usize>>,
    pub center: CenterData,
    pub idempotents: Idempotents,
    /// Ascending, aligned with `idempotents`.
    pub degrees: Vec<usize>,
}

impl TAlgebra {
    pub fn build(scheme: &AssociationScheme, max_depth: usize) -> Result<Self, TerwilligerError> {
        let layout = BlockLayout::new(scheme);
        let generators = all_generators(scheme, &layout);
        let closure = basis_closure(&layout, &generators, max_depth)?;
        let block_counts = block_counts(&layout, &closure.basis);
        let center = center_basis(scheme, &layout, &closure.basis)?;
        let mut idempotents = central_idempotents(&layout, &center)?;
        let degrees = wedderburn_degrees(&layout, &closure.basis, &mut idempotents)?;
        Ok(Self {
            layout,
            closure,
            block_counts,
            center,
            idempotents,
            degrees,
        })
    }

    pub fn dim(&self) -> usize {
        self.closure.basis.len()
    }

    pub fn basis(&self) -> &[BasisElement] {
        &self.closure.basis
    }

    pub fn stabilization_depth(&self) -> usize {
        self.closure.stabilization_depth
    }

    pub fn center_dim(&self) -> usize {
        self.center.elements.len()
    }
}

/// Number of basis elements on each C_i × C_k block.
pub fn block_counts(layout: &BlockLayout, basis: &[BasisElement]) -> Vec<Vec<usize>> {
    let d1 = layout.class_count();
    let mut counts = vec![vec![0; d1]; d1];
    for b in basis {
        counts[b.element.source][b.element.target] += 1;
    }
    counts
}
