//! Exhaustive generators for small instances.

use std::sync::Arc;

use crate::rel::{Carrier, Entourage};
use crate::space::FiniteEntourageSpace;

/// Off-diagonal pairs of `0..n` in row-major order.
pub fn off_diagonal(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|a| (0..n).filter(move |&b| b != a).map(move |b| (a, b)))
        .collect()
}

/// Every entourage structure on `carrier`, one per reflexive relation, in
/// order of the off-diagonal bitmask.
///
/// There are `2^(n²-n)` of them; `n ≤ 4` is the practical limit.
pub fn all_structures(carrier: &Arc<Carrier>) -> Vec<FiniteEntourageSpace> {
    let off = off_diagonal(carrier.size());
    assert!(off.len() <= 20, "structure enumeration limited to 5 points");
    (0u32..1 << off.len())
        .map(|mask| {
            let e = Entourage::from_pairs(
                carrier,
                off.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &p)| p),
            );
            FiniteEntourageSpace::principal(e)
        })
        .collect()
}

/// Every structure on `n` numbered points.
pub fn all_structures_on(n: usize) -> Vec<FiniteEntourageSpace> {
    all_structures(&Carrier::numbered(n).expect("n ≥ 1").shared())
}

/// Quasi-coarse structures (reflexive transitive relations) on `n` points.
pub fn quasi_coarse_on(n: usize) -> Vec<FiniteEntourageSpace> {
    all_structures_on(n)
        .into_iter()
        .filter(|s| s.max_ent().is_transitive())
        .collect()
}

/// Every function `0..n → 0..m` as a table, lexicographic in the table.
pub fn all_tables(n: usize, m: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = (m as u128).pow(n as u32);
    (0..total).map(move |mut code| {
        let mut t = vec![0; n];
        for slot in t.iter_mut().rev() {
            *slot = (code % m as u128) as usize;
            code /= m as u128;
        }
        t
    })
}

/// Every surjection `0..n → 0..m`.
pub fn surjections(n: usize, m: usize) -> impl Iterator<Item = Vec<usize>> {
    all_tables(n, m).filter(move |t| {
        let mut hit = vec![false; m];
        t.iter().for_each(|&y| hit[y] = true);
        hit.into_iter().all(|h| h)
    })
}

/// Every subset of `0..n` as a bitmask, in increasing order.
pub fn subsets(n: usize) -> impl Iterator<Item = u64> {
    assert!(n < 64);
    0..1u64 << n
}
