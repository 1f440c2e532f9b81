//! Exhaustive search over all vertex subsets.

use super::{check_k, AlphaError, AlphaResult};
use crate::graph::{Graph, VertexSet};

pub const DEFAULT_BRUTEFORCE_CAP: usize = 24;
const HARD_CAP: usize = 40;

fn masks(g: &Graph) -> Vec<u64> {
    g.vertices()
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w))
        .collect()
}

// Every component of the subgraph induced by `set` has fewer than k vertices.
fn feasible(adj: &[u64], set: u64, k: usize) -> bool {
    let mut rest = set;
    while rest != 0 {
        let seed = rest & rest.wrapping_neg();
        let mut comp = seed;
        let mut frontier = seed;
        while frontier != 0 {
            let mut reach = 0u64;
            let mut f = frontier;
            while f != 0 {
                reach |= adj[f.trailing_zeros() as usize];
                f &= f - 1;
            }
            frontier = reach & set & !comp;
            comp |= frontier;
            if comp.count_ones() as usize >= k {
                return false;
            }
        }
        rest &= !comp;
    }
    true
}

// `a` precedes `b` when the smallest vertex in exactly one of them is in `a`.
fn lex_before(a: u64, b: u64) -> bool {
    let diff = a ^ b;
    diff != 0 && a & diff & diff.wrapping_neg() != 0
}

fn to_set(g: &Graph, mask: u64) -> VertexSet {
    VertexSet::new(g, (0..g.n()).filter(|&v| mask >> v & 1 == 1)).expect("mask within range")
}

fn guard(g: &Graph, k: usize, cap: usize) -> Result<(), AlphaError> {
    check_k(k)?;
    let cap = cap.min(HARD_CAP);
    if g.n() > cap {
        return Err(AlphaError::BruteForceCap { n: g.n(), cap });
    }
    Ok(())
}

/// `alpha_k` by scanning all `2^n` subsets; refuses graphs above
/// [`DEFAULT_BRUTEFORCE_CAP`] vertices.
pub fn alpha_bruteforce(g: &Graph, k: usize) -> Result<AlphaResult, AlphaError> {
    alpha_bruteforce_capped(g, k, DEFAULT_BRUTEFORCE_CAP)
}

pub fn alpha_bruteforce_capped(g: &Graph, k: usize, cap: usize) -> Result<AlphaResult, AlphaError> {
    guard(g, k, cap)?;
    let adj = masks(g);
    let mut best = 0u64;
    let mut best_size = 0;
    for set in 0u64..1 << g.n() {
        let size = set.count_ones();
        if size < best_size || (size == best_size && !lex_before(set, best)) {
            continue;
        }
        if feasible(&adj, set, k) {
            best = set;
            best_size = size;
        }
    }
    Ok(AlphaResult {
        k,
        value: best_size as usize,
        witness: to_set(g, best),
    })
}

/// Every maximum generalized k-independent set, in lexicographic order.
pub fn maximum_sets_bruteforce(g: &Graph, k: usize) -> Result<Vec<VertexSet>, AlphaError> {
    guard(g, k, DEFAULT_BRUTEFORCE_CAP)?;
    let adj = masks(g);
    let mut best_size = 0;
    let mut found: Vec<u64> = Vec::new();
    for set in 0u64..1 << g.n() {
        let size = set.count_ones();
        if size < best_size || !feasible(&adj, set, k) {
            continue;
        }
        if size > best_size {
            best_size = size;
            found.clear();
        }
        found.push(set);
    }
    let mut sets: Vec<VertexSet> = found.into_iter().map(|m| to_set(g, m)).collect();
    sets.sort();
    Ok(sets)
}
