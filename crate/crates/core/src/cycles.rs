//! Biconnected blocks, vertex-disjoint cycle detection, pendant cycles and
//! the cycle-shrinking construction.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, Induced};

/// A list of simple cycles, each a vertex sequence.
///
/// Each sequence starts at its smallest vertex and continues toward the
/// smaller of that vertex's two cycle neighbors.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
#[serde(transparent)]
pub struct CycleList {
    pub cycles: Vec<Vec<usize>>,
}

impl CycleList {
    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Vec<usize>> {
        self.cycles.iter()
    }

    pub fn lengths(&self) -> Vec<usize> {
        self.cycles.iter().map(Vec::len).collect()
    }

    /// All vertices lying on some listed cycle, ascending.
    pub fn vertices(&self) -> Vec<usize> {
        let mut vs: Vec<usize> = self.cycles.iter().flatten().copied().collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize)]
pub enum NotDisjoint {
    #[error("block on vertices {0:?} is neither a single edge nor a cycle")]
    DenseBlock(Vec<usize>),
    #[error("vertex {0} lies on two different cycles")]
    SharedVertex(usize),
}

/// Rotates and orients a cycle given as a closed vertex sequence.
pub fn normalize_cycle(seq: &[usize]) -> Vec<usize> {
    let len = seq.len();
    if len == 0 {
        return Vec::new();
    }
    let (start, _) = seq.iter().enumerate().min_by_key(|&(_, &v)| v).unwrap();
    let fwd = seq[(start + 1) % len];
    let back = seq[(start + len - 1) % len];
    if fwd <= back {
        (0..len).map(|i| seq[(start + i) % len]).collect()
    } else {
        (0..len).map(|i| seq[(start + len - i) % len]).collect()
    }
}

/// Biconnected blocks of `g`, each as a sorted edge list. Isolated vertices
/// belong to no block.
pub fn biconnected_blocks(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    const UNSET: usize = usize::MAX;
    let n = g.n();
    let mut disc = vec![UNSET; n];
    let mut low = vec![0; n];
    let mut time = 0;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut blocks = Vec::new();
    // (vertex, parent, next neighbor index)
    let mut stack: Vec<(usize, usize, usize)> = Vec::new();

    for root in 0..n {
        if disc[root] != UNSET {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        stack.push((root, UNSET, 0));
        while let Some(frame) = stack.last_mut() {
            let (v, parent) = (frame.0, frame.1);
            if frame.2 < g.degree(v) {
                let w = g.neighbors(v)[frame.2];
                frame.2 += 1;
                if disc[w] == UNSET {
                    edge_stack.push((v, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, v, 0));
                } else if w != parent && disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if parent != UNSET {
                    low[parent] = low[parent].min(low[v]);
                    if low[v] >= disc[parent] {
                        let mut block = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            block.push((e.0.min(e.1), e.0.max(e.1)));
                            if e == (parent, v) {
                                break;
                            }
                        }
                        block.sort_unstable();
                        blocks.push(block);
                    }
                }
            }
        }
    }
    blocks.sort();
    blocks
}

fn block_vertices(block: &[(usize, usize)]) -> Vec<usize> {
    let mut vs: Vec<usize> = block.iter().flat_map(|&(u, v)| [u, v]).collect();
    vs.sort_unstable();
    vs.dedup();
    vs
}

// Walks a block known to be a single cycle.
fn cycle_from_block(block: &[(usize, usize)]) -> Vec<usize> {
    let vs = block_vertices(block);
    let local = |v: usize| vs.binary_search(&v).unwrap();
    let mut nbrs = vec![Vec::with_capacity(2); vs.len()];
    for &(u, v) in block {
        nbrs[local(u)].push(v);
        nbrs[local(v)].push(u);
    }
    let mut seq = vec![vs[0]];
    let mut prev = vs[0];
    let mut cur = nbrs[0][0];
    while cur != vs[0] {
        seq.push(cur);
        let nb = &nbrs[local(cur)];
        let next = if nb[0] == prev { nb[1] } else { nb[0] };
        prev = cur;
        cur = next;
    }
    normalize_cycle(&seq)
}

/// Returns every cycle of `g` when the cycles are pairwise vertex-disjoint.
///
/// A graph qualifies iff each biconnected block is a single edge or a cycle
/// and no vertex lies in two cycle blocks.
pub fn disjoint_cycles(g: &Graph) -> Result<CycleList, NotDisjoint> {
    let mut on_cycle = vec![false; g.n()];
    let mut cycles = Vec::new();
    for block in biconnected_blocks(g) {
        if block.len() == 1 {
            continue;
        }
        let vs = block_vertices(&block);
        if vs.len() != block.len() {
            return Err(NotDisjoint::DenseBlock(vs));
        }
        for &v in &vs {
            if on_cycle[v] {
                return Err(NotDisjoint::SharedVertex(v));
            }
            on_cycle[v] = true;
        }
        cycles.push(cycle_from_block(&block));
    }
    cycles.sort();
    Ok(CycleList { cycles })
}

/// Induced cycles with exactly one vertex of degree 3, all other vertices
/// of degree 2.
pub fn pendant_cycles(g: &Graph) -> CycleList {
    let n = g.n();
    let deg2: Vec<bool> = g.vertices().map(|v| g.degree(v) == 2).collect();
    let mut seen = vec![false; n];
    let mut cycles = Vec::new();
    // Removing the degree-3 vertex leaves a path made of degree-2 vertices
    // that is a whole component of the degree-2 subgraph.
    for s in 0..n {
        if !deg2[s] || seen[s] {
            continue;
        }
        let mut comp = vec![s];
        seen[s] = true;
        let mut i = 0;
        while i < comp.len() {
            for &w in g.neighbors(comp[i]) {
                if deg2[w] && !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                }
            }
            i += 1;
        }
        if comp.len() < 2 {
            continue;
        }
        let outside = |v: usize| -> Vec<usize> { g.neighbors(v).iter().copied().filter(|&w| !deg2[w]).collect() };
        let ends: Vec<usize> = comp.iter().copied().filter(|&v| !outside(v).is_empty()).collect();
        if ends.len() != 2 {
            continue;
        }
        let (a, b) = (ends[0], ends[1]);
        let (oa, ob) = (outside(a), outside(b));
        if oa.len() != 1 || ob.len() != 1 || oa[0] != ob[0] || g.degree(oa[0]) != 3 {
            continue;
        }
        let hub = oa[0];
        let mut seq = vec![hub];
        let (mut prev, mut cur) = (hub, a);
        loop {
            seq.push(cur);
            if cur == b {
                break;
            }
            let nb = g.neighbors(cur);
            let next = if nb[0] == prev { nb[1] } else { nb[0] };
            prev = cur;
            cur = next;
        }
        cycles.push(normalize_cycle(&seq));
    }
    cycles.sort();
    CycleList { cycles }
}

/// Where a vertex of the host graph ends up after shrinking.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "index", rename_all = "snake_case")]
pub enum ShrinkImage {
    /// Off every cycle; index of its image in `t_graph`.
    Vertex(usize),
    /// On cycle `i` of `cycles`; contracted to `t_graph` vertex `off + i`.
    Cycle(usize),
}

/// Output of contracting each vertex-disjoint cycle to a single vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShrinkResult {
    /// Acyclic graph: off-cycle vertices first (ascending), then one vertex
    /// per cycle in `cycles` order.
    pub t_graph: Graph,
    /// Host minus all cycle vertices, with index maps to the host.
    pub gamma: Induced,
    pub cycles: CycleList,
    pub vertex_map: Vec<ShrinkImage>,
}

impl ShrinkResult {
    pub fn gamma_graph(&self) -> &Graph {
        &self.gamma.graph
    }

    /// Number of off-cycle vertices; cycle `i` maps to `t_graph` vertex
    /// `off_cycle_count() + i`.
    pub fn off_cycle_count(&self) -> usize {
        self.gamma.graph.n()
    }

    pub fn t_index(&self, v: usize) -> usize {
        match self.vertex_map[v] {
            ShrinkImage::Vertex(i) => i,
            ShrinkImage::Cycle(c) => self.off_cycle_count() + c,
        }
    }
}

/// Contracts every cycle of a cycle-disjoint graph.
pub fn shrink(g: &Graph) -> Result<ShrinkResult, NotDisjoint> {
    let cycles = disjoint_cycles(g)?;
    let mut vertex_map = vec![ShrinkImage::Vertex(usize::MAX); g.n()];
    for (ci, c) in cycles.iter().enumerate() {
        for &v in c {
            vertex_map[v] = ShrinkImage::Cycle(ci);
        }
    }
    let gamma = g
        .delete_vertices(&cycles.vertices())
        .expect("cycle vertices are in range");
    for (new, &old) in gamma.new_to_old.iter().enumerate() {
        vertex_map[old] = ShrinkImage::Vertex(new);
    }
    let off = gamma.graph.n();
    let image = |v: usize| match vertex_map[v] {
        ShrinkImage::Vertex(i) => i,
        ShrinkImage::Cycle(c) => off + c,
    };
    // Edges inside one cycle vanish; parallel adjacencies collapse.
    let edges = g.edges().iter().filter_map(|&(u, v)| {
        let (a, b) = (image(u), image(v));
        (a != b).then_some((a, b))
    });
    let t_graph = Graph::from_edges_lossy(off + cycles.len(), edges);
    Ok(ShrinkResult {
        t_graph,
        gamma,
        cycles,
        vertex_map,
    })
}
