//! Finite simple undirected graphs with stable vertex indices.

use std::collections::{BTreeSet, VecDeque};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("edge {{{u}, {v}}} has an endpoint outside 0..{n}")]
    EdgeOutOfRange { u: usize, v: usize, n: usize },
    #[error("vertex {v} is outside 0..{n}")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("edge {{{0}, {1}}} is not present")]
    MissingEdge(usize, usize),
}

/// A validated simple undirected graph on vertices `0..n`.
///
/// Edges are stored normalized as `(u, v)` with `u < v`, sorted. Neighbor
/// lists are sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Validates an edge list and builds the graph.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        let mut seen = BTreeSet::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::EdgeOutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            let e = (u.min(v), u.max(v));
            if !seen.insert(e) {
                return Err(GraphError::DuplicateEdge(u, v));
            }
        }
        Ok(Self::from_sorted_unique(n, seen.into_iter().collect()))
    }

    /// Empty graph (no edges) on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Self::from_sorted_unique(n, Vec::new())
    }

    // Caller guarantees normalized, sorted, deduplicated, in-range edges.
    pub(crate) fn from_sorted_unique(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    // Normalizes and deduplicates; endpoints must be in range and distinct.
    pub(crate) fn from_edges_lossy(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let set: BTreeSet<(usize, usize)> = edges
            .into_iter()
            .map(|(u, v)| {
                debug_assert!(u != v && u < n && v < n);
                (u.min(v), u.max(v))
            })
            .collect();
        Self::from_sorted_unique(n, set.into_iter().collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Connected components, each sorted ascending, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut label = vec![usize::MAX; self.n];
        let mut parts = Vec::new();
        for s in 0..self.n {
            if label[s] != usize::MAX {
                continue;
            }
            let id = parts.len();
            let mut part = vec![s];
            label[s] = id;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if label[w] == usize::MAX {
                        label[w] = id;
                        part.push(w);
                        queue.push_back(w);
                    }
                }
            }
            part.sort_unstable();
            parts.push(part);
        }
        parts
    }

    pub fn component_count(&self) -> usize {
        self.components().len()
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// Dimension of the cycle space: `|E| - |V| + c(G)`.
    pub fn omega(&self) -> usize {
        self.m() + self.component_count() - self.n
    }

    pub fn is_acyclic(&self) -> bool {
        self.omega() == 0
    }

    pub fn is_tree(&self) -> bool {
        self.n > 0 && self.is_connected() && self.is_acyclic()
    }

    /// Subgraph induced by `keep`, re-indexed densely in ascending order.
    pub fn induced(&self, keep: &[usize]) -> Result<Induced, GraphError> {
        let mut old_to_new = vec![None; self.n];
        let mut sorted: Vec<usize> = keep.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        for &v in &sorted {
            if v >= self.n {
                return Err(GraphError::VertexOutOfRange { v, n: self.n });
            }
        }
        for (i, &v) in sorted.iter().enumerate() {
            old_to_new[v] = Some(i);
        }
        let edges = self
            .edges
            .iter()
            .filter_map(|&(u, v)| Some((old_to_new[u]?, old_to_new[v]?)))
            .collect();
        Ok(Induced {
            graph: Graph::from_sorted_unique(sorted.len(), edges),
            old_to_new,
            new_to_old: sorted,
        })
    }

    /// `G - W`: deletes the given vertices and their incident edges.
    pub fn delete_vertices(&self, remove: &[usize]) -> Result<Induced, GraphError> {
        let mut gone = vec![false; self.n];
        for &v in remove {
            if v >= self.n {
                return Err(GraphError::VertexOutOfRange { v, n: self.n });
            }
            gone[v] = true;
        }
        let keep: Vec<usize> = (0..self.n).filter(|&v| !gone[v]).collect();
        self.induced(&keep)
    }

    /// `G - uv`. Vertex indices are unchanged.
    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        let e = (u.min(v), u.max(v));
        match self.edges.binary_search(&e) {
            Ok(pos) => {
                let mut edges = self.edges.clone();
                edges.remove(pos);
                Ok(Graph::from_sorted_unique(self.n, edges))
            }
            Err(_) => Err(GraphError::MissingEdge(u, v)),
        }
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(u, v)| (u + off, v + off)));
        Graph::from_sorted_unique(self.n + other.n, edges)
    }

    /// Applies a vertex relabeling `perm[old] = new`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        Graph::from_edges_lossy(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
    }

    pub fn classes(&self) -> VertexClasses {
        VertexClasses::of(self)
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        for v in 0..self.n {
            let _ = writeln!(out, "  {v};");
        }
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "  {u} -- {v};");
        }
        out.push_str("}\n");
        out
    }

    /// Structural isomorphism test via canonical forms. Small graphs only.
    pub fn is_isomorphic(&self, other: &Graph) -> bool {
        self.n == other.n
            && self.m() == other.m()
            && crate::canon::canonical_form(self) == crate::canon::canonical_form(other)
    }
}

/// An induced subgraph together with the index maps back to its host.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Induced {
    pub graph: Graph,
    pub old_to_new: Vec<Option<usize>>,
    pub new_to_old: Vec<usize>,
}

impl Induced {
    pub fn lift(&self, vertices: impl IntoIterator<Item = usize>) -> Vec<usize> {
        let mut out: Vec<usize> = vertices.into_iter().map(|v| self.new_to_old[v]).collect();
        out.sort_unstable();
        out
    }
}

/// A subset of a graph's vertices. Members are kept sorted and unique.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct VertexSet {
    host_n: usize,
    members: Vec<usize>,
}

impl VertexSet {
    pub fn new(host: &Graph, members: impl IntoIterator<Item = usize>) -> Result<Self, GraphError> {
        Self::with_host_size(host.n(), members)
    }

    pub fn with_host_size(host_n: usize, members: impl IntoIterator<Item = usize>) -> Result<Self, GraphError> {
        let mut members: Vec<usize> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        if let Some(&v) = members.last() {
            if v >= host_n {
                return Err(GraphError::VertexOutOfRange { v, n: host_n });
            }
        }
        Ok(VertexSet { host_n, members })
    }

    pub fn empty(host: &Graph) -> Self {
        VertexSet {
            host_n: host.n(),
            members: Vec::new(),
        }
    }

    pub fn host_size(&self) -> usize {
        self.host_n
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.members
    }
}

/// Pendant and quasi-pendant vertex classes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexClasses {
    /// Degree-1 vertices.
    pub pendant: VertexSet,
    /// Vertices adjacent to a pendant vertex.
    pub quasi_pendant: VertexSet,
    /// Quasi-pendant vertices of degree 2.
    pub q2: VertexSet,
    /// Quasi-pendant vertices of degree 3 with exactly two pendant neighbors.
    pub q3: VertexSet,
    /// Degree-2 vertices with exactly one neighbor in `q2`.
    pub q2_prime: VertexSet,
}

impl VertexClasses {
    pub fn of(g: &Graph) -> Self {
        let n = g.n();
        let is_pendant: Vec<bool> = g.vertices().map(|v| g.degree(v) == 1).collect();
        let pendant_nbrs = |v: usize| g.neighbors(v).iter().filter(|&&w| is_pendant[w]).count();
        let is_quasi: Vec<bool> = g.vertices().map(|v| pendant_nbrs(v) > 0).collect();
        let is_q2: Vec<bool> = g.vertices().map(|v| is_quasi[v] && g.degree(v) == 2).collect();

        let set = |pred: &dyn Fn(usize) -> bool| VertexSet {
            host_n: n,
            members: g.vertices().filter(|&v| pred(v)).collect(),
        };
        VertexClasses {
            pendant: set(&|v| is_pendant[v]),
            quasi_pendant: set(&|v| is_quasi[v]),
            q2: set(&|v| is_q2[v]),
            q3: set(&|v| is_quasi[v] && g.degree(v) == 3 && pendant_nbrs(v) == 2),
            q2_prime: set(&|v| g.degree(v) == 2 && g.neighbors(v).iter().filter(|&&w| is_q2[w]).count() == 1),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{cycle, path, star};

    #[test]
    fn build_rejects_bad_edges() {
        assert_eq!(Graph::new(3, [(0, 0)]), Err(GraphError::SelfLoop(0)));
        assert_eq!(Graph::new(3, [(0, 1), (1, 0)]), Err(GraphError::DuplicateEdge(1, 0)));
        assert_eq!(
            Graph::new(3, [(0, 3)]),
            Err(GraphError::EdgeOutOfRange { u: 0, v: 3, n: 3 })
        );
    }

    #[test]
    fn build_path_and_single_vertex() {
        let p4 = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(p4.m(), 3);
        assert_eq!(p4.neighbors(1), &[0, 2]);
        let p1 = Graph::new(1, []).unwrap();
        assert_eq!((p1.n(), p1.m()), (1, 0));
    }

    #[test]
    fn components_examples() {
        assert_eq!(path(4).components(), vec![vec![0, 1, 2, 3]]);
        let two_p2 = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(two_p2.components().len(), 2);
        assert_eq!(Graph::empty(5).components().len(), 5);
        assert!(Graph::empty(0).components().is_empty());
    }

    #[test]
    fn omega_examples() {
        assert_eq!(path(10).omega(), 0);
        assert_eq!(cycle(5).omega(), 1);
        assert_eq!(Graph::empty(0).omega(), 0);
        assert_eq!(crate::families::complete(4).omega(), 3);
    }

    #[test]
    fn classes_on_path_star_cycle() {
        let c = path(4).classes();
        assert_eq!(c.pendant.members(), &[0, 3]);
        assert_eq!(c.quasi_pendant.members(), &[1, 2]);
        assert_eq!(c.q2.members(), &[1, 2]);
        assert!(c.q3.is_empty());
        assert_eq!(c.q2_prime.members(), &[1, 2]);

        let c = star(4).classes();
        assert_eq!(c.pendant.members(), &[1, 2, 3]);
        assert_eq!(c.quasi_pendant.members(), &[0]);
        assert!(c.q2.is_empty() && c.q3.is_empty() && c.q2_prime.is_empty());

        let c = cycle(5).classes();
        assert!(c.pendant.is_empty() && c.quasi_pendant.is_empty() && c.q2_prime.is_empty());
    }

    #[test]
    fn q3_requires_two_pendant_neighbours() {
        // 0 has pendants 1, 2 and continues to 3-4.
        let g = Graph::new(5, [(0, 1), (0, 2), (0, 3), (3, 4)]).unwrap();
        let c = g.classes();
        assert_eq!(c.q3.members(), &[0]);
        assert_eq!(c.q2.members(), &[3]);
    }

    #[test]
    fn deletions() {
        let p = cycle(5).delete_vertices(&[2]).unwrap();
        assert!(p.graph.is_isomorphic(&path(4)));
        assert_eq!(p.new_to_old, vec![0, 1, 3, 4]);
        assert_eq!(p.old_to_new[2], None);

        let split = path(4).delete_edge(1, 2).unwrap();
        assert_eq!(split.components().len(), 2);
        assert_eq!(path(4).delete_edge(0, 2), Err(GraphError::MissingEdge(0, 2)));
        assert!(path(4).delete_vertices(&[9]).is_err());
    }

    #[test]
    fn vertex_set_range_checked() {
        let g = path(3);
        assert!(VertexSet::new(&g, [0, 2]).is_ok());
        assert!(VertexSet::new(&g, [3]).is_err());
        assert_eq!(VertexSet::new(&g, [2, 0, 2]).unwrap().members(), &[0, 2]);
    }
}
