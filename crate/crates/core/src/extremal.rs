//! The extremal tree families `R_i` and related constructions.
//!
//! `R_1` is the set of trees on `k` vertices (for `k = 4`: `P_4` and `S_4`);
//! a member of `R_i` is a member of `R_{i-1}` joined by one new edge to a
//! fresh copy of an `R_1` tree. Recognition uses the equivalent criterion
//! that the vertex set splits into connected blocks of exactly `k`
//! vertices; the equivalence with the generative definition is checked
//! exhaustively in the test suites.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::canon::{bfs_order, canonical_form, enumerate_trees, tree_code, CanonicalForm, CanonicalTreeCode};
use crate::families::{cycle, path, star};
use crate::graph::Graph;

/// Default vertex cap for [`generate_r`].
pub const DEFAULT_R_CAP: usize = 20;
/// Default vertex cap for [`generate_good_graphs`].
pub const DEFAULT_GOOD_CAP: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtremalError {
    #[error("k must be at least 2, got {0}")]
    InvalidK(usize),
    #[error("index i must be at least 1")]
    InvalidIndex,
    #[error("requested order {n} exceeds the cap of {cap} vertices")]
    CapExceeded { n: usize, cap: usize },
    #[error("input must be a tree (connected = {connected}, omega = {omega})")]
    NotATree { connected: bool, omega: usize },
    #[error("gadget needs at least one arm")]
    NoArms,
    #[error("star arms need at least 2 vertices, got S_{0}")]
    InvalidStar(usize),
}

/// Witness that a tree belongs to `R_{n/k}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RCertificate {
    pub k: usize,
    /// Connected blocks of exactly `k` vertices, each sorted, ordered by
    /// smallest vertex.
    pub blocks: Vec<Vec<usize>>,
    /// Indices into `blocks`; each block after the first meets the union of
    /// the earlier ones in exactly one edge.
    pub attach_order: Vec<usize>,
    /// For each entry of `attach_order` after the first, the joining edge
    /// `(earlier vertex, new-block vertex)`.
    pub attach_edges: Vec<(usize, usize)>,
}

impl RCertificate {
    /// Independent re-check of every certificate invariant against `t`.
    pub fn verify(&self, t: &Graph) -> Result<(), String> {
        let n = t.n();
        let mut owner = vec![usize::MAX; n];
        for (bi, block) in self.blocks.iter().enumerate() {
            if block.len() != self.k {
                return Err(format!("block {bi} has {} vertices, expected {}", block.len(), self.k));
            }
            for &v in block {
                if v >= n || owner[v] != usize::MAX {
                    return Err(format!("vertex {v} is out of range or in two blocks"));
                }
                owner[v] = bi;
            }
            let sub = t.induced(block).map_err(|e| e.to_string())?;
            if !sub.graph.is_connected() {
                return Err(format!("block {bi} is not connected"));
            }
        }
        if owner.contains(&usize::MAX) {
            return Err("blocks do not cover every vertex".into());
        }
        let mut order = self.attach_order.clone();
        order.sort_unstable();
        if order != (0..self.blocks.len()).collect::<Vec<_>>() {
            return Err("attach order is not a permutation of the blocks".into());
        }
        let mut placed = vec![false; self.blocks.len()];
        for (step, &bi) in self.attach_order.iter().enumerate() {
            if step > 0 {
                let joins: Vec<(usize, usize)> = self.blocks[bi]
                    .iter()
                    .flat_map(|&v| t.neighbors(v).iter().map(move |&w| (w, v)))
                    .filter(|&(w, _)| placed[owner[w]])
                    .collect();
                if joins.len() != 1 {
                    return Err(format!("block {bi} meets earlier blocks in {} edges", joins.len()));
                }
                if self.attach_edges.get(step - 1) != Some(&joins[0]) {
                    return Err(format!("attach edge for block {bi} does not match"));
                }
            }
            placed[bi] = true;
        }
        let internal: usize = t.edges().iter().filter(|&&(u, v)| owner[u] == owner[v]).count();
        if t.m() - internal + 1 != self.blocks.len().max(1) {
            return Err("blocks are joined by extra edges".into());
        }
        Ok(())
    }
}

fn check_tree(t: &Graph) -> Result<(), ExtremalError> {
    if t.is_tree() {
        Ok(())
    } else {
        Err(ExtremalError::NotATree {
            connected: t.is_connected(),
            omega: t.omega(),
        })
    }
}

/// Decides `t ∈ R_{n/k}`; returns a certificate for members.
///
/// Rooted at vertex 0, the open fragment hanging below a vertex has a
/// forced size: one plus the open fragments of its children. A fragment of
/// size `k` closes into a block; anything larger means no partition exists.
pub fn is_in_r(t: &Graph, k: usize) -> Result<Option<RCertificate>, ExtremalError> {
    if k < 2 {
        return Err(ExtremalError::InvalidK(k));
    }
    check_tree(t)?;
    let n = t.n();
    if !n.is_multiple_of(k) {
        return Ok(None);
    }
    let (order, parent) = bfs_order(t, 0);
    let mut open = vec![1usize; n];
    let mut closed = vec![false; n];
    for &v in order.iter().rev() {
        if open[v] > k {
            return Ok(None);
        }
        if open[v] == k {
            closed[v] = true;
        } else if let Some(p) = parent[v] {
            open[p] += open[v];
        }
    }
    if !closed[0] {
        return Ok(None);
    }
    let mut block_of = vec![usize::MAX; n];
    let mut tops = Vec::new();
    for &v in &order {
        block_of[v] = if closed[v] {
            tops.push(v);
            tops.len() - 1
        } else {
            block_of[parent[v].expect("root is closed")]
        };
    }
    let mut raw: Vec<Vec<usize>> = vec![Vec::new(); tops.len()];
    for v in 0..n {
        raw[block_of[v]].push(v);
    }
    // Renumber blocks by smallest vertex; BFS order of tops is an attach order.
    let mut by_min: Vec<usize> = (0..raw.len()).collect();
    by_min.sort_by_key(|&b| raw[b][0]);
    let mut new_id = vec![0; raw.len()];
    for (new, &old) in by_min.iter().enumerate() {
        new_id[old] = new;
    }
    let blocks: Vec<Vec<usize>> = by_min.iter().map(|&b| raw[b].clone()).collect();
    let attach_order: Vec<usize> = (0..tops.len()).map(|b| new_id[b]).collect();
    let attach_edges: Vec<(usize, usize)> = tops[1..]
        .iter()
        .map(|&top| (parent[top].expect("non-root top has a parent"), top))
        .collect();
    Ok(Some(RCertificate {
        k,
        blocks,
        attach_order,
        attach_edges,
    }))
}

/// Every member of `R_i` (built from `k`-vertex trees) up to isomorphism,
/// in canonical tree-code order, capped at [`DEFAULT_R_CAP`] vertices.
pub fn generate_r(i: usize, k: usize) -> Result<Vec<Graph>, ExtremalError> {
    generate_r_capped(i, k, DEFAULT_R_CAP)
}

pub fn generate_r_capped(i: usize, k: usize, cap: usize) -> Result<Vec<Graph>, ExtremalError> {
    if k < 2 {
        return Err(ExtremalError::InvalidK(k));
    }
    if i == 0 {
        return Err(ExtremalError::InvalidIndex);
    }
    if i * k > cap {
        return Err(ExtremalError::CapExceeded { n: i * k, cap });
    }
    let base = enumerate_trees(k);
    let mut level: BTreeSet<CanonicalTreeCode> = base.iter().map(|t| tree_code(t).expect("tree")).collect();
    for _ in 1..i {
        let grown: Vec<CanonicalTreeCode> = level
            .par_iter()
            .flat_map_iter(|code| {
                let member = code.to_graph();
                let off = member.n();
                let mut out = Vec::new();
                for piece in &base {
                    let joined = member.disjoint_union(piece);
                    for a in 0..off {
                        for b in 0..piece.n() {
                            let mut edges = joined.edges().to_vec();
                            edges.push((a, off + b));
                            out.push(tree_code(&Graph::from_edges_lossy(joined.n(), edges)).expect("tree"));
                        }
                    }
                }
                out
            })
            .collect();
        level = grown.into_iter().collect();
    }
    Ok(level.into_iter().map(|c| c.to_graph()).collect())
}

/// Hub with `b` pendant `P_4` arms and `star_counts[s]` arms of `S_s`, each
/// arm attached by identifying one of its leaves with the hub (vertex 0).
pub fn build_o_gadget(b: usize, star_counts: &BTreeMap<usize, usize>) -> Result<Graph, ExtremalError> {
    if let Some((&s, _)) = star_counts.iter().find(|(&s, &c)| s < 2 && c > 0) {
        return Err(ExtremalError::InvalidStar(s));
    }
    if b + star_counts.values().sum::<usize>() == 0 {
        return Err(ExtremalError::NoArms);
    }
    let mut edges = Vec::new();
    let mut next = 1;
    let mut fresh = || {
        next += 1;
        next - 1
    };
    for _ in 0..b {
        let (x, y, z) = (fresh(), fresh(), fresh());
        edges.extend([(0, x), (x, y), (y, z)]);
    }
    for (&s, &count) in star_counts {
        for _ in 0..count {
            if s == 2 {
                let x = fresh();
                edges.push((0, x));
                continue;
            }
            let center = fresh();
            edges.push((0, center));
            for _ in 0..s - 2 {
                let leaf = fresh();
                edges.push((center, leaf));
            }
        }
    }
    Ok(Graph::from_edges_lossy(next, edges))
}

/// All connected graphs on `n` vertices, up to isomorphism, whose cycles
/// are vertex-disjoint with lengths `≡ 1 (mod 4)` and whose off-cycle parts
/// are `R`-family trees. Sorted by canonical form, canonical labeling.
///
/// Candidates are trees of pieces (`C_q` with `q ≡ 1 mod 4`, `P_4`, `S_4`)
/// joined by single edges, then confirmed by the structural checker.
pub fn generate_good_graphs(n: usize) -> Result<Vec<Graph>, ExtremalError> {
    generate_good_graphs_capped(n, DEFAULT_GOOD_CAP)
}

pub fn generate_good_graphs_capped(n: usize, cap: usize) -> Result<Vec<Graph>, ExtremalError> {
    if n > cap {
        return Err(ExtremalError::CapExceeded { n, cap });
    }
    // (piece, attachment vertices covering its orbits)
    let mut pieces: Vec<(Graph, Vec<usize>)> = vec![(path(4), vec![0, 1]), (star(4), vec![0, 1])];
    pieces.extend((5..=n).step_by(4).map(|q| (cycle(q), vec![0])));

    let mut by_size: Vec<BTreeSet<CanonicalForm>> = vec![BTreeSet::new(); n + 1];
    for (p, _) in &pieces {
        if p.n() <= n {
            by_size[p.n()].insert(canonical_form(p));
        }
    }
    for size in 1..=n {
        let current: Vec<Graph> = by_size[size].iter().map(CanonicalForm::to_graph).collect();
        for (piece, anchors) in &pieces {
            let target = size + piece.n();
            if target > n {
                continue;
            }
            let grown: Vec<CanonicalForm> = current
                .par_iter()
                .flat_map_iter(|g| {
                    let joined = g.disjoint_union(piece);
                    let off = g.n();
                    let mut out = Vec::new();
                    for a in 0..off {
                        for &b in anchors {
                            let mut edges = joined.edges().to_vec();
                            edges.push((a, off + b));
                            out.push(canonical_form(&Graph::from_edges_lossy(joined.n(), edges)));
                        }
                    }
                    out
                })
                .collect();
            by_size[target].extend(grown);
        }
    }
    Ok(std::mem::take(&mut by_size[n])
        .into_iter()
        .map(|f| f.to_graph())
        .filter(|g| crate::characterization::evaluate_structure(g, 4).holds())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::spider;

    #[test]
    fn r1_members() {
        let r1 = generate_r(1, 4).unwrap();
        assert_eq!(r1.len(), 2);
        assert!(r1.iter().any(|g| g.is_isomorphic(&path(4))));
        assert!(r1.iter().any(|g| g.is_isomorphic(&star(4))));
        let r1 = generate_r(1, 2).unwrap();
        assert_eq!(r1, vec![path(2)]);
        assert!(generate_r(6, 4).is_err());
        assert!(generate_r(0, 4).is_err());
    }

    #[test]
    fn path8_certificate() {
        let cert = is_in_r(&path(8), 4).unwrap().unwrap();
        assert_eq!(cert.blocks, vec![vec![0, 1, 2, 3], vec![4, 5, 6, 7]]);
        assert_eq!(cert.attach_edges, vec![(3, 4)]);
        cert.verify(&path(8)).unwrap();
    }

    #[test]
    fn non_members() {
        assert_eq!(is_in_r(&path(5), 4).unwrap(), None);
        assert_eq!(is_in_r(&spider(3, 2), 4).unwrap(), None);
        assert_eq!(is_in_r(&star(8), 4).unwrap(), None);
        assert!(matches!(is_in_r(&cycle(4), 4), Err(ExtremalError::NotATree { .. })));
        assert!(is_in_r(&path(4).disjoint_union(&path(4)), 4).is_err());
    }

    #[test]
    fn certificate_verification_catches_tampering() {
        let t = path(8);
        let mut cert = is_in_r(&t, 4).unwrap().unwrap();
        cert.blocks = vec![vec![0, 1, 2, 4], vec![3, 5, 6, 7]];
        assert!(cert.verify(&t).is_err());
    }

    #[test]
    fn gadget_shapes() {
        let none = BTreeMap::new();
        assert!(build_o_gadget(1, &none).unwrap().is_isomorphic(&path(4)));
        assert!(build_o_gadget(0, &BTreeMap::from([(2, 1)]))
            .unwrap()
            .is_isomorphic(&path(2)));
        let g = build_o_gadget(1, &BTreeMap::from([(5, 1)])).unwrap();
        assert_eq!(g.n(), 8);
        assert!(g.is_tree());
        assert_eq!(build_o_gadget(0, &none), Err(ExtremalError::NoArms));
        assert_eq!(
            build_o_gadget(0, &BTreeMap::from([(1, 1)])),
            Err(ExtremalError::InvalidStar(1))
        );
    }

    #[test]
    fn small_good_graphs() {
        let four = generate_good_graphs(4).unwrap();
        assert_eq!(four.len(), 2);
        assert!(four.iter().any(|g| g.is_isomorphic(&path(4))));
        assert!(four.iter().any(|g| g.is_isomorphic(&star(4))));
        let five = generate_good_graphs(5).unwrap();
        assert_eq!(five.len(), 1);
        assert!(five[0].is_isomorphic(&cycle(5)));
        assert!(generate_good_graphs(3).unwrap().is_empty());
        assert!(generate_good_graphs(17).is_err());
    }
}
