//! Canonical forms and isomorph-free enumeration of small graphs and trees.
//!
//! General graphs are canonicalized by partition refinement with
//! individualization: every leaf of the search tree gives a vertex ordering,
//! and the canonical form is the smallest permuted adjacency matrix among
//! those leaves. Trees use AHU parenthesis codes rooted at a centroid.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;

/// Largest order accepted by [`canonical_form`].
pub const MAX_CANON_ORDER: usize = 64;
/// Largest order accepted by [`enumerate_graphs`].
pub const MAX_ENUMERATION_ORDER: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("exhaustive enumeration is capped at n = {cap} (asked for {n}); supply larger corpora as graph6 files")]
    OrderTooLarge { n: usize, cap: usize },
}

/// Canonical adjacency matrix; equal for two graphs iff they are isomorphic.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    n: usize,
    rows: Vec<u64>,
}

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.n
    }

    /// The graph in canonical labeling.
    pub fn to_graph(&self) -> Graph {
        let mut edges = Vec::new();
        for (u, &row) in self.rows.iter().enumerate() {
            for v in u + 1..self.n {
                if row >> v & 1 == 1 {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_sorted_unique(self.n, edges)
    }
}

fn adjacency_masks(g: &Graph) -> Vec<u64> {
    assert!(
        g.n() <= MAX_CANON_ORDER,
        "canonical forms support at most {MAX_CANON_ORDER} vertices"
    );
    g.vertices()
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w))
        .collect()
}

// Splits cells by neighbor counts into each splitter cell until stable.
fn refine(adj: &[u64], cells: &mut Vec<Vec<usize>>) {
    loop {
        let mut changed = false;
        let mut si = 0;
        while si < cells.len() {
            let splitter = cells[si].iter().fold(0u64, |m, &v| m | 1 << v);
            let mut next = Vec::with_capacity(cells.len());
            for cell in cells.iter() {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut groups: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
                for &v in cell {
                    groups.entry((adj[v] & splitter).count_ones()).or_default().push(v);
                }
                changed |= groups.len() > 1;
                next.extend(groups.into_values());
            }
            *cells = next;
            si += 1;
        }
        if !changed {
            break;
        }
    }
}

struct Search<'a> {
    adj: &'a [u64],
    best: Option<(Vec<u64>, Vec<usize>)>,
}

impl Search<'_> {
    fn visit(&mut self, mut cells: Vec<Vec<usize>>) {
        refine(self.adj, &mut cells);
        let Some(ci) = cells.iter().position(|c| c.len() > 1) else {
            let order: Vec<usize> = cells.into_iter().map(|c| c[0]).collect();
            self.leaf(order);
            return;
        };
        let cell = cells[ci].clone();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &cell {
            // Swapping twins is an automorphism that fixes the current
            // partition, so their subtrees produce identical leaves.
            let twin = tried
                .iter()
                .any(|&u| (self.adj[u] & !(1u64 << v)) == (self.adj[v] & !(1u64 << u)));
            if twin {
                continue;
            }
            tried.push(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend(cells[..ci].iter().cloned());
            child.push(vec![v]);
            child.push(cell.iter().copied().filter(|&w| w != v).collect());
            child.extend(cells[ci + 1..].iter().cloned());
            self.visit(child);
        }
    }

    fn leaf(&mut self, order: Vec<usize>) {
        let mut pos = vec![0; order.len()];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let rows: Vec<u64> = order
            .iter()
            .map(|&v| {
                let mut row = 0u64;
                let mut m = self.adj[v];
                while m != 0 {
                    let w = m.trailing_zeros() as usize;
                    row |= 1 << pos[w];
                    m &= m - 1;
                }
                row
            })
            .collect();
        match &self.best {
            Some((b, _)) if *b <= rows => {}
            _ => self.best = Some((rows, pos)),
        }
    }
}

/// Canonical labeling `perm[old] = new` together with the canonical form.
pub fn canonical_labeling(g: &Graph) -> (Vec<usize>, CanonicalForm) {
    let adj = adjacency_masks(g);
    if g.n() == 0 {
        return (Vec::new(), CanonicalForm { n: 0, rows: Vec::new() });
    }
    let mut search = Search { adj: &adj, best: None };
    search.visit(vec![g.vertices().collect()]);
    let (rows, pos) = search.best.expect("search visits at least one leaf");
    (pos, CanonicalForm { n: g.n(), rows })
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonical_labeling(g).1
}

/// Every graph on `n` vertices up to isomorphism, in canonical labeling,
/// sorted by canonical form.
pub fn enumerate_graphs(n: usize, connected_only: bool) -> Result<Vec<Graph>, EnumerationError> {
    if n > MAX_ENUMERATION_ORDER {
        return Err(EnumerationError::OrderTooLarge {
            n,
            cap: MAX_ENUMERATION_ORDER,
        });
    }
    let mut level: Vec<CanonicalForm> = vec![canonical_form(&Graph::empty(0))];
    for order in 1..=n {
        let prev = order - 1;
        let mut next: Vec<CanonicalForm> = level
            .par_iter()
            .flat_map_iter(|form| {
                (0u64..1 << prev).map(move |nbrs| {
                    let mut rows = form.rows.clone();
                    for (u, row) in rows.iter_mut().enumerate() {
                        *row |= (nbrs >> u & 1) << prev;
                    }
                    rows.push(nbrs);
                    let g = CanonicalForm { n: order, rows }.to_graph();
                    canonical_form(&g)
                })
            })
            .collect();
        next.par_sort_unstable();
        next.dedup();
        level = next;
    }
    Ok(level
        .into_iter()
        .map(|f| f.to_graph())
        .filter(|g| !connected_only || g.is_connected())
        .collect())
}

/// AHU code of a tree: the smallest rooted parenthesis code over its
/// centroids. Two trees have equal codes iff they are isomorphic.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct CanonicalTreeCode(String);

impl CanonicalTreeCode {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// Rebuilds the tree, numbering vertices in preorder of the code.
    pub fn to_graph(&self) -> Graph {
        let mut stack: Vec<usize> = Vec::new();
        let mut edges = Vec::new();
        let mut n = 0;
        for ch in self.0.chars() {
            if ch == '(' {
                if let Some(&p) = stack.last() {
                    edges.push((p, n));
                }
                stack.push(n);
                n += 1;
            } else {
                stack.pop();
            }
        }
        Graph::from_edges_lossy(n, edges)
    }
}

/// Centroid vertices of a tree (one or two).
pub fn centroids(t: &Graph) -> Vec<usize> {
    let n = t.n();
    let (order, parent) = bfs_order(t, 0);
    let mut size = vec![1usize; n];
    for &v in order.iter().rev() {
        if let Some(p) = parent[v] {
            size[p] += size[v];
        }
    }
    let mut out = Vec::new();
    for v in 0..n {
        let mut heaviest = n - size[v];
        for &w in t.neighbors(v) {
            if parent[w] == Some(v) {
                heaviest = heaviest.max(size[w]);
            }
        }
        if 2 * heaviest <= n {
            out.push(v);
        }
    }
    out
}

pub(crate) fn bfs_order(t: &Graph, root: usize) -> (Vec<usize>, Vec<Option<usize>>) {
    let mut parent = vec![None; t.n()];
    let mut seen = vec![false; t.n()];
    let mut order = vec![root];
    seen[root] = true;
    let mut i = 0;
    while i < order.len() {
        let v = order[i];
        for &w in t.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                parent[w] = Some(v);
                order.push(w);
            }
        }
        i += 1;
    }
    (order, parent)
}

/// Parenthesis code of `t` rooted at `root`.
pub fn rooted_code(t: &Graph, root: usize) -> String {
    let (order, parent) = bfs_order(t, root);
    let mut codes: Vec<Option<String>> = vec![None; t.n()];
    let mut children: Vec<Vec<String>> = vec![Vec::new(); t.n()];
    for &v in order.iter().rev() {
        let mut kids = std::mem::take(&mut children[v]);
        kids.sort_unstable();
        let code = format!("({})", kids.concat());
        match parent[v] {
            Some(p) => children[p].push(code),
            None => codes[v] = Some(code),
        }
    }
    codes[root].take().unwrap_or_default()
}

/// AHU code of a tree; `None` if `t` is not a tree.
pub fn tree_code(t: &Graph) -> Option<CanonicalTreeCode> {
    if !t.is_tree() {
        return None;
    }
    centroids(t)
        .into_iter()
        .map(|c| rooted_code(t, c))
        .min()
        .map(CanonicalTreeCode)
}

/// Every tree on `n >= 1` vertices up to isomorphism, in code order and
/// code labeling.
pub fn enumerate_trees(n: usize) -> Vec<Graph> {
    if n == 0 {
        return Vec::new();
    }
    let mut level: BTreeSet<CanonicalTreeCode> = BTreeSet::from([CanonicalTreeCode("()".into())]);
    for order in 2..=n {
        let grown: Vec<CanonicalTreeCode> = level
            .par_iter()
            .flat_map_iter(|code| {
                let t = code.to_graph();
                (0..order - 1).map(move |v| {
                    let mut edges = t.edges().to_vec();
                    edges.push((v, order - 1));
                    tree_code(&Graph::from_edges_lossy(order, edges)).expect("leaf extension of a tree")
                })
            })
            .collect();
        level = grown.into_iter().collect();
    }
    level.into_iter().map(|c| c.to_graph()).collect()
}
