//! Branch-and-reduce solver for general graphs.
//!
//! Subproblems are induced subgraphs (vertex masks) plus a set of vertices
//! that must be selected. Each subproblem splits into connected components;
//! components smaller than `k` are taken whole, acyclic components go to the
//! tree dynamic program, and the rest branch on one vertex `v`:
//!
//! * out: solve `C - v`;
//! * in: for every connected `F ∋ v` with `|F| < k`, take `F` as the
//!   selected fragment through `v`, exclude `N(F)`, and solve the remainder.
//!
//! A branch is skipped when its size plus the remaining vertex count cannot
//! beat the incumbent.

use std::collections::{HashMap, HashSet};

use fixedbitset::FixedBitSet;

use super::tree::forest_value;
use super::{check_k, lexmin_witness, AlphaError, AlphaResult};
use crate::graph::{Graph, VertexSet};

struct Solver<'a> {
    g: &'a Graph,
    k: usize,
    adj: Vec<FixedBitSet>,
    memo: HashMap<(FixedBitSet, FixedBitSet), Option<usize>>,
}

impl<'a> Solver<'a> {
    fn new(g: &'a Graph, k: usize) -> Self {
        let n = g.n();
        let adj = g
            .vertices()
            .map(|v| {
                let mut b = FixedBitSet::with_capacity(n);
                for &w in g.neighbors(v) {
                    b.insert(w);
                }
                b
            })
            .collect();
        Solver {
            g,
            k,
            adj,
            memo: HashMap::new(),
        }
    }

    fn components(&self, mask: &FixedBitSet) -> Vec<FixedBitSet> {
        let mut left = mask.clone();
        let mut out = Vec::new();
        while let Some(s) = left.ones().next() {
            let mut comp = FixedBitSet::with_capacity(self.g.n());
            comp.insert(s);
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for w in self.adj[u].ones() {
                    if mask.contains(w) && !comp.contains(w) {
                        comp.insert(w);
                        stack.push(w);
                    }
                }
            }
            left.difference_with(&comp);
            out.push(comp);
        }
        out
    }

    fn solve(&mut self, mask: &FixedBitSet, forced: &FixedBitSet) -> Option<usize> {
        let mut total = 0;
        for comp in self.components(mask) {
            let mut f = forced.clone();
            f.intersect_with(&comp);
            total += self.solve_component(comp, f)?;
        }
        Some(total)
    }

    fn solve_component(&mut self, comp: FixedBitSet, forced: FixedBitSet) -> Option<usize> {
        let size = comp.count_ones(..);
        if size < self.k {
            return Some(size);
        }
        let key = (comp, forced);
        if let Some(&hit) = self.memo.get(&key) {
            return hit;
        }
        let (comp, forced) = &key;
        let degree = |v: usize| self.adj[v].intersection(comp).count();
        let edges: usize = comp.ones().map(degree).sum::<usize>() / 2;
        let result = if edges + 1 == size {
            self.tree_component(comp, forced)
        } else {
            self.branch(comp, forced)
        };
        self.memo.insert(key, result);
        result
    }

    fn tree_component(&self, comp: &FixedBitSet, forced: &FixedBitSet) -> Option<usize> {
        let vs: Vec<usize> = comp.ones().collect();
        let sub = self.g.induced(&vs).expect("mask within range");
        let fin: Vec<bool> = vs.iter().map(|&v| forced.contains(v)).collect();
        let fout = vec![false; vs.len()];
        forest_value(&sub.graph, self.k, &fin, &fout)
    }

    fn branch(&mut self, comp: &FixedBitSet, forced: &FixedBitSet) -> Option<usize> {
        let v = match forced.ones().next() {
            Some(f) => f,
            None => comp
                .ones()
                .max_by_key(|&u| (self.adj[u].intersection(comp).count(), std::cmp::Reverse(u)))
                .expect("component is non-empty"),
        };
        let size = comp.count_ones(..);
        let mut best: Option<usize> = None;

        for frag in self.fragments(v, comp) {
            let mut removed = FixedBitSet::with_capacity(self.g.n());
            for &u in &frag {
                removed.insert(u);
                removed.union_with(&self.adj[u]);
            }
            removed.intersect_with(comp);
            let mut boundary = removed.clone();
            for &u in &frag {
                boundary.set(u, false);
            }
            if boundary.intersection(forced).next().is_some() {
                continue;
            }
            let rest_len = size - removed.count_ones(..);
            if best.is_some_and(|b| frag.len() + rest_len <= b) {
                continue;
            }
            let mut rest = comp.clone();
            rest.difference_with(&removed);
            let mut rest_forced = forced.clone();
            rest_forced.intersect_with(&rest);
            if let Some(x) = self.solve(&rest, &rest_forced) {
                best = best.max(Some(frag.len() + x));
            }
        }

        if !forced.contains(v) && !best.is_some_and(|b| size - 1 <= b) {
            let mut rest = comp.clone();
            rest.set(v, false);
            if let Some(x) = self.solve(&rest, forced) {
                best = best.max(Some(x));
            }
        }
        best
    }

    // Connected vertex sets inside `comp` that contain `v` and have fewer
    // than k vertices.
    fn fragments(&self, v: usize, comp: &FixedBitSet) -> Vec<Vec<usize>> {
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        let mut layer = vec![vec![v]];
        seen.insert(vec![v]);
        let mut out = vec![vec![v]];
        for _ in 1..self.k - 1 {
            let mut next = Vec::new();
            for set in &layer {
                for &u in set {
                    for w in self.adj[u].ones() {
                        if !comp.contains(w) || set.contains(&w) {
                            continue;
                        }
                        let mut grown = set.clone();
                        grown.push(w);
                        grown.sort_unstable();
                        if seen.insert(grown.clone()) {
                            next.push(grown);
                        }
                    }
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        // Larger fragments first tend to find strong incumbents early.
        out.reverse();
        out
    }

    fn value_with(&mut self, forced_in: &[bool], forced_out: &[bool]) -> Option<usize> {
        let n = self.g.n();
        let mut mask = FixedBitSet::with_capacity(n);
        let mut forced = FixedBitSet::with_capacity(n);
        for v in 0..n {
            mask.set(v, !forced_out[v]);
            forced.set(v, forced_in[v]);
        }
        self.solve(&mask, &forced)
    }
}

/// `alpha_k(G)` without a witness.
pub fn alpha_number(g: &Graph, k: usize) -> Result<usize, AlphaError> {
    check_k(k)?;
    let n = g.n();
    let mut solver = Solver::new(g, k);
    let none = vec![false; n];
    Ok(solver
        .value_with(&none, &none)
        .expect("unconstrained problem is feasible"))
}

/// Exact `alpha_k(G)` for any graph, with the lexicographically smallest
/// maximum witness.
pub fn alpha_exact(g: &Graph, k: usize) -> Result<AlphaResult, AlphaError> {
    check_k(k)?;
    let n = g.n();
    let mut solver = Solver::new(g, k);
    let none = vec![false; n];
    let value = solver
        .value_with(&none, &none)
        .expect("unconstrained problem is feasible");
    let witness = lexmin_witness(n, value, |fin, fout| solver.value_with(fin, fout));
    Ok(AlphaResult {
        k,
        value,
        witness: VertexSet::new(g, witness).expect("in range"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alpha::alpha_bruteforce;
    use crate::families::{complete, cycle, path, three_cycle_example};

    #[test]
    fn worked_example_value() {
        let g = three_cycle_example();
        let r = alpha_exact(&g, 4).unwrap();
        assert_eq!(r.value, 18);
        assert!(r.is_valid_for(&g));
    }

    #[test]
    fn disjoint_union_and_complete() {
        let g = cycle(5).disjoint_union(&path(4));
        let brute = alpha_bruteforce(&cycle(5), 4).unwrap().value + alpha_bruteforce(&path(4), 4).unwrap().value;
        assert_eq!(alpha_exact(&g, 4).unwrap().value, brute);
        assert_eq!(brute, 6);
        assert_eq!(alpha_exact(&complete(4), 4).unwrap().value, 3);
        assert_eq!(alpha_exact(&complete(6), 2).unwrap().value, 1);
    }

    #[test]
    fn witness_matches_bruteforce_tie_break() {
        let first_cycles: Vec<usize> = (0..=13).collect();
        let part = three_cycle_example().induced(&first_cycles).unwrap().graph;
        for g in [path(4), cycle(7), complete(5), part] {
            for k in 2..=5 {
                let a = alpha_exact(&g, k).unwrap();
                let b = alpha_bruteforce(&g, k).unwrap();
                assert_eq!(a, b);
            }
        }
    }
}
