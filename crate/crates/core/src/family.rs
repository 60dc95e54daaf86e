//! All numerical semigroups up to a Frobenius bound, by recursion on gap sets.
//!
//! Every `H ≠ N` has the parent `H ∪ {F(H)}`, so the tree rooted at `N` whose
//! children remove one minimal generator larger than the Frobenius number
//! reaches each semigroup exactly once. Removing `g` makes `g` the new
//! Frobenius number, so branches past the bound are cut immediately.

use std::sync::Arc;

use crate::semigroup::{NumericalSemigroup, SemigroupError};

/// Gap sets of every `H ≠ N` with `F(H) <= max_frobenius`.
pub fn gap_sets_with_max_frobenius(max_frobenius: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    if max_frobenius < 1 {
        return out;
    }
    let limit = 2 * max_frobenius as usize + 2;
    let mut membership = vec![true; limit + 1];
    walk(&mut membership, -1, max_frobenius, &mut Vec::new(), &mut out);
    out
}

fn walk(
    membership: &mut [bool],
    frobenius: i64,
    max_frobenius: i64,
    gaps: &mut Vec<i64>,
    out: &mut Vec<Vec<i64>>,
) {
    for g in (frobenius + 1).max(1)..=max_frobenius {
        if !is_minimal_generator(membership, g as usize) {
            continue;
        }
        membership[g as usize] = false;
        gaps.push(g);
        out.push(gaps.clone());
        walk(membership, g, max_frobenius, gaps, out);
        gaps.pop();
        membership[g as usize] = true;
    }
}

/// `g ∈ H \ {0}` is minimal iff it is not a sum of two nonzero elements.
fn is_minimal_generator(membership: &[bool], g: usize) -> bool {
    membership[g] && (1..=g / 2).all(|x| !(membership[x] && membership[g - x]))
}

/// Minimal generators of the semigroup with the given (complete) gap set.
pub fn generators_from_gaps(gaps: &[i64]) -> Vec<i64> {
    let f = gaps.iter().copied().max().unwrap_or(0) as usize;
    let limit = 2 * f + 2;
    let mut membership = vec![true; limit + 1];
    for &g in gaps {
        membership[g as usize] = false;
    }
    (1..=limit).filter(|&g| is_minimal_generator(&membership, g)).map(|g| g as i64).collect()
}

/// Every `H ≠ N` with `F(H) <= max_frobenius`, sorted by generators.
pub fn semigroups_with_max_frobenius(
    max_frobenius: i64,
) -> Result<Vec<Arc<NumericalSemigroup>>, SemigroupError> {
    let mut out = gap_sets_with_max_frobenius(max_frobenius)
        .iter()
        .map(|gaps| NumericalSemigroup::from_generators(&generators_from_gaps(gaps)).map(Arc::new))
        .collect::<Result<Vec<_>, _>>()?;
    out.sort_by(|a, b| a.generators().cmp(b.generators()));
    Ok(out)
}
