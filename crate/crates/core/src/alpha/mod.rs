//! Exact generalized k-independence numbers.
//!
//! A vertex set `S` is generalized k-independent when `G[S]` contains no
//! tree on `k` vertices as a subgraph. A connected graph on at least `k`
//! vertices always contains such a tree (grow a subtree of a spanning tree),
//! so the check reduces to "every component of `G[S]` has fewer than `k`
//! vertices". Tests cross-check this against literal subtree containment.
//!
//! Every solver returns the lexicographically smallest maximum witness.

mod brute;
mod exact;
mod tree;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, VertexSet};

pub use brute::{alpha_bruteforce, alpha_bruteforce_capped, maximum_sets_bruteforce, DEFAULT_BRUTEFORCE_CAP};
pub use exact::{alpha_exact, alpha_number};
pub use tree::alpha_tree;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlphaError {
    #[error("order parameter k must be at least 2, got {0}")]
    InvalidK(usize),
    #[error("brute force is capped at {cap} vertices (graph has {n}); use alpha_exact")]
    BruteForceCap { n: usize, cap: usize },
    #[error("tree solver needs an acyclic graph (omega = {omega})")]
    NotAcyclic { omega: usize },
}

/// Maximum generalized k-independent set with its size.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AlphaResult {
    pub k: usize,
    pub value: usize,
    pub witness: VertexSet,
}

impl AlphaResult {
    /// Re-checks the witness against `g`.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        self.witness.len() == self.value
            && self.witness.host_size() == g.n()
            && is_gen_k_independent(g, &self.witness, self.k).unwrap_or(false)
    }
}

pub(crate) fn check_k(k: usize) -> Result<(), AlphaError> {
    if k < 2 {
        Err(AlphaError::InvalidK(k))
    } else {
        Ok(())
    }
}

/// Size of the largest connected component of `G[members]`.
pub fn largest_induced_component(g: &Graph, members: &[usize]) -> usize {
    let mut inside = vec![false; g.n()];
    for &v in members {
        inside[v] = true;
    }
    let mut seen = vec![false; g.n()];
    let mut largest = 0;
    for &s in members {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut stack = vec![s];
        let mut size = 0;
        while let Some(u) = stack.pop() {
            size += 1;
            for &w in g.neighbors(u) {
                if inside[w] && !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        largest = largest.max(size);
    }
    largest
}

/// Whether `G[s]` is free of `k`-vertex trees.
pub fn is_gen_k_independent(g: &Graph, s: &VertexSet, k: usize) -> Result<bool, AlphaError> {
    check_k(k)?;
    Ok(largest_induced_component(g, s.members()) < k)
}

/// Greedy lexicographic witness extraction.
///
/// `value_with(forced_in, forced_out)` must return the optimum over sets
/// containing every `forced_in` vertex and avoiding every `forced_out`
/// vertex (or `None` when no feasible set exists). `target` is the
/// unconstrained optimum.
pub(crate) fn lexmin_witness(
    n: usize,
    target: usize,
    mut value_with: impl FnMut(&[bool], &[bool]) -> Option<usize>,
) -> Vec<usize> {
    let mut forced_in = vec![false; n];
    let mut forced_out = vec![false; n];
    for v in 0..n {
        forced_in[v] = true;
        if value_with(&forced_in, &forced_out) != Some(target) {
            forced_in[v] = false;
            forced_out[v] = true;
        }
    }
    (0..n).filter(|&v| forced_in[v]).collect()
}
