//! Matching a computed block-count table against a published one whose class
//! order is unknown: find one permutation π with sizes[π(p)] = published_sizes[p]
//! and counts[π(p)][π(q)] = published[p][q].

/// Search budget in visited nodes; exhaustion reports no match.
const NODE_BUDGET: usize = 2_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MatchOutcome {
    /// `perm[p]` is the computed class matched to published class `p`.
    Matched(Vec<usize>),
    /// The tables are provably different (row signatures or totals disagree).
    Mismatch(String),
    /// Signatures agree but the search budget ran out.
    Inconclusive,
}

fn signature(
    sizes: &[usize],
    counts: &[Vec<usize>],
    p: usize,
) -> (usize, usize, Vec<(usize, usize)>) {
    let mut row: Vec<(usize, usize)> = counts[p].iter().zip(sizes).map(|(&c, &s)| (s, c)).collect();
    row.sort_unstable();
    (sizes[p], counts[p][p], row)
}

pub fn match_block_counts(
    sizes: &[usize],
    counts: &[Vec<usize>],
    published_sizes: &[usize],
    published: &[Vec<usize>],
) -> MatchOutcome {
    let n = sizes.len();
    if published_sizes.len() != n || published.len() != n || counts.len() != n {
        return MatchOutcome::Mismatch(format!(
            "{} classes computed, {} published",
            n,
            published_sizes.len()
        ));
    }
    let total = |m: &[Vec<usize>]| m.iter().flatten().sum::<usize>();
    if total(counts) != total(published) {
        return MatchOutcome::Mismatch(format!(
            "totals {} and {}",
            total(counts),
            total(published)
        ));
    }
    let sig: Vec<_> = (0..n).map(|p| signature(sizes, counts, p)).collect();
    let pub_sig: Vec<_> = (0..n)
        .map(|p| signature(published_sizes, published, p))
        .collect();
    let (mut a, mut b) = (sig.clone(), pub_sig.clone());
    a.sort();
    b.sort();
    if a != b {
        return MatchOutcome::Mismatch("row signatures differ".into());
    }
    let candidates: Vec<Vec<usize>> = (0..n)
        .map(|p| (0..n).filter(|&q| sig[q] == pub_sig[p]).collect())
        .collect();
    let mut perm = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let mut nodes = 0usize;
    match search(
        0,
        &candidates,
        counts,
        published,
        &mut perm,
        &mut used,
        &mut nodes,
    ) {
        Some(true) => MatchOutcome::Matched(perm),
        Some(false) => MatchOutcome::Mismatch("no consistent permutation".into()),
        None => MatchOutcome::Inconclusive,
    }
}

/// Some(found) when the subtree was fully decided, None on budget exhaustion.
fn search(
    p: usize,
    candidates: &[Vec<usize>],
    counts: &[Vec<usize>],
    published: &[Vec<usize>],
    perm: &mut [usize],
    used: &mut [bool],
    nodes: &mut usize,
) -> Option<bool> {
    if p == perm.len() {
        return Some(true);
    }
    for &q in &candidates[p] {
        if used[q] {
            continue;
        }
        *nodes += 1;
        if *nodes > NODE_BUDGET {
            return None;
        }
        if (0..p).any(|r| counts[q][perm[r]] != published[p][r]) {
            continue;
        }
        perm[p] = q;
        used[q] = true;
        if search(p + 1, candidates, counts, published, perm, used, nodes)? {
            return Some(true);
        }
        used[q] = false;
    }
    perm[p] = usize::MAX;
    Some(false)
}
