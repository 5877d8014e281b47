//! Basis closure of T(G), one independent span per C_i × C_k block.
//!
//! Round 1 inserts the nonzero E_i*A_jE_k*. Round r+1 multiplies every element
//! that entered in round r on the left by the generators ending in its source
//! class. A span containing the generators and closed under left multiplication
//! by them is the generated algebra, so the first round that adds nothing
//! certifies closure; its number is the stabilization depth.

use std::collections::HashSet;

use rayon::prelude::*;

use super::block::{block_generators, BlockElement, BlockLayout, GeneratorBlock};
use super::TerwilligerError;
use crate::linalg::IntegerSpan;
use crate::scheme::AssociationScheme;

#[derive(Clone, Debug)]
pub struct BasisElement {
    pub element: BlockElement,
    /// Length of the word in the E_i*A_jE_k* that first produced it.
    pub depth: usize,
}

#[derive(Clone, Debug)]
pub struct Closure {
    pub basis: Vec<BasisElement>,
    /// First word length whose products add nothing.
    pub stabilization_depth: usize,
    /// Largest word length that contributed a basis element.
    pub spanning_depth: usize,
    /// Rank after each round.
    pub rank_by_round: Vec<usize>,
}

/// Generators of every block, indexed `i * (d+1) + k`.
pub fn all_generators(
    scheme: &AssociationScheme,
    layout: &BlockLayout,
) -> Vec<Vec<GeneratorBlock>> {
    let d1 = layout.class_count();
    (0..d1 * d1)
        .into_par_iter()
        .map(|b| block_generators(scheme, layout, b / d1, b % d1))
        .collect()
}

pub fn basis_closure(
    layout: &BlockLayout,
    generators: &[Vec<GeneratorBlock>],
    max_depth: usize,
) -> Result<Closure, TerwilligerError> {
    if max_depth < 2 {
        return Err(TerwilligerError::BadDepth(max_depth));
    }
    let d1 = layout.class_count();
    let mut spans: Vec<IntegerSpan> = (0..d1 * d1)
        .map(|b| IntegerSpan::new(layout.size(b / d1) * layout.size(b % d1)))
        .collect();

    let mut basis = Vec::new();
    let mut frontier: Vec<Vec<BlockElement>> = Vec::with_capacity(d1 * d1);
    for (span, gens) in spans.iter_mut().zip(generators) {
        let mut fresh = Vec::new();
        for g in gens {
            let e = g.to_element();
            if span.add(&e.entries)? {
                fresh.push(e);
            }
        }
        frontier.push(fresh);
    }
    push_round(&mut basis, &frontier, 1);
    let mut rank_by_round = vec![basis.len()];

    for round in 2..=max_depth {
        let next: Vec<Vec<BlockElement>> = spans
            .par_iter_mut()
            .enumerate()
            .map(|(b, span)| extend_block(b / d1, b % d1, d1, span, generators, &frontier))
            .collect::<Result<_, _>>()?;
        let added: usize = next.iter().map(Vec::len).sum();
        if added == 0 {
            return Ok(Closure {
                basis,
                stabilization_depth: round,
                spanning_depth: round - 1,
                rank_by_round,
            });
        }
        push_round(&mut basis, &next, round);
        rank_by_round.push(basis.len());
        if round == max_depth {
            return Err(TerwilligerError::DepthExceeded {
                depth: max_depth,
                rank: basis.len(),
            });
        }
        frontier = next;
    }
    unreachable!("loop returns on its last round")
}

fn push_round(basis: &mut Vec<BasisElement>, fresh: &[Vec<BlockElement>], depth: usize) {
    for block in fresh {
        basis.extend(block.iter().map(|e| BasisElement {
            element: e.clone(),
            depth,
        }));
    }
}

/// Candidates g·f for g on (i, k) and f a frontier element on (k, m), in (g, f) order.
fn extend_block(
    i: usize,
    m: usize,
    d1: usize,
    span: &mut IntegerSpan,
    generators: &[Vec<GeneratorBlock>],
    frontier: &[Vec<BlockElement>],
) -> Result<Vec<BlockElement>, TerwilligerError> {
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut fresh = Vec::new();
    for k in 0..d1 {
        let right = &frontier[k * d1 + m];
        if right.is_empty() {
            continue;
        }
        for g in &generators[i * d1 + k] {
            for f in right {
                let p = g.mul(f).ok_or(TerwilligerError::EntryOverflow)?;
                if p.entries.iter().all(|&v| v == 0) || !seen.insert(p.entries.clone()) {
                    continue;
                }
                if span.add(&p.entries)? {
                    fresh.push(p);
                }
            }
        }
    }
    Ok(fresh)
}
