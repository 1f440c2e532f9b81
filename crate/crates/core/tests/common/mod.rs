//! Independent reference implementations. Each one follows a definition
//! literally and shares no code with the library beyond `Graph`.

#![allow(dead_code)]

use std::collections::BTreeSet;

use kindep::Graph;

/// Iterates over the `r`-subsets of `items`.
pub fn subsets<T: Copy>(items: &[T], r: usize, mut f: impl FnMut(&[T])) {
    fn go<T: Copy>(items: &[T], r: usize, start: usize, cur: &mut Vec<T>, f: &mut impl FnMut(&[T])) {
        if cur.len() == r {
            f(cur);
            return;
        }
        for i in start..items.len() {
            if items.len() - i < r - cur.len() {
                break;
            }
            cur.push(items[i]);
            go(items, r, i + 1, cur, f);
            cur.pop();
        }
    }
    go(items, r, 0, &mut Vec::new(), &mut f);
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    r
}

/// True when the `k - 1` edges span `vertices` without a cycle.
fn spans_tree(vertices: &[usize], edges: &[(usize, usize)]) -> bool {
    let mut parent: Vec<usize> = (0..=vertices.iter().max().copied().unwrap_or(0)).collect();
    for &(u, v) in edges {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a == b {
            return false;
        }
        parent[a] = b;
    }
    edges.len() + 1 == vertices.len()
}

/// Literal definition: `set` induces a subgraph containing some tree on `k`
/// vertices, found by trying every k-subset and every (k-1)-edge subset.
pub fn contains_k_subtree(g: &Graph, set: &[usize], k: usize) -> bool {
    if k == 1 {
        return !set.is_empty();
    }
    let mut found = false;
    subsets(set, k, |xs| {
        if found {
            return;
        }
        let inner: Vec<(usize, usize)> = g
            .edges()
            .iter()
            .copied()
            .filter(|&(u, v)| xs.contains(&u) && xs.contains(&v))
            .collect();
        subsets(&inner, k - 1, |es| {
            if !found && spans_tree(xs, es) {
                found = true;
            }
        });
    });
    found
}

/// `alpha_k` by the literal definition, for tiny graphs.
pub fn alpha_literal(g: &Graph, k: usize) -> usize {
    let n = g.n();
    let mut best = 0;
    for mask in 0u32..(1 << n) {
        let set: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        if set.len() > best && !contains_k_subtree(g, &set, k) {
            best = set.len();
        }
    }
    best
}

/// Classical independence number by exhaustive search.
pub fn independence_number(g: &Graph) -> usize {
    let n = g.n();
    (0u64..(1 << n))
        .filter(|&mask| g.edges().iter().all(|&(u, v)| mask >> u & 1 == 0 || mask >> v & 1 == 0))
        .map(|mask| mask.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Every cycle of `g` as a vertex set, by DFS over simple paths from the
/// smallest vertex of each cycle.
pub fn all_cycles(g: &Graph) -> BTreeSet<Vec<usize>> {
    let mut out = BTreeSet::new();
    fn walk(g: &Graph, start: usize, path: &mut Vec<usize>, out: &mut BTreeSet<Vec<usize>>) {
        let last = *path.last().expect("non-empty");
        for &w in g.neighbors(last) {
            if w == start && path.len() >= 3 {
                let mut c = path.clone();
                c.sort_unstable();
                out.insert(c);
            } else if w > start && !path.contains(&w) {
                path.push(w);
                walk(g, start, path, out);
                path.pop();
            }
        }
    }
    for s in g.vertices() {
        walk(g, s, &mut vec![s], &mut out);
    }
    out
}

/// Minimal adjacency bitstring over all vertex permutations.
pub fn permutation_canon(g: &Graph) -> Vec<bool> {
    let n = g.n();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<bool>> = None;
    loop {
        let mut bits = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for j in 1..n {
            for i in 0..j {
                bits.push(g.has_edge(perm[i], perm[j]));
            }
        }
        if best.as_ref().is_none_or(|b| bits < *b) {
            best = Some(bits);
        }
        // Next permutation in lexicographic order.
        let Some(i) = (1..n).rev().find(|&i| perm[i - 1] < perm[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| perm[j] > perm[i - 1]).expect("successor exists");
        perm.swap(i - 1, j);
        perm[i..].reverse();
    }
    best.unwrap_or_default()
}

/// Membership in `R_i` by replaying the generative definition backwards:
/// some edge splits off a `k`-vertex subtree leaving a member of `R_{i-1}`.
pub fn in_r_generative(t: &Graph, k: usize) -> bool {
    let n = t.n();
    if n == k {
        return t.is_tree();
    }
    if n < k || !n.is_multiple_of(k) || !t.is_tree() {
        return false;
    }
    t.edges().iter().any(|&(u, v)| {
        let cut = t.delete_edge(u, v).expect("edge exists");
        let parts = cut.components();
        let (small, big) = if parts[0].len() == k {
            (&parts[0], &parts[1])
        } else {
            (&parts[1], &parts[0])
        };
        small.len() == k && in_r_generative(&t.induced(big).expect("in range").graph, k)
    })
}

/// Graph families used across suites.
pub fn graphs_up_to(n_max: usize, connected_only: bool) -> Vec<Graph> {
    (0..=n_max)
        .flat_map(|n| kindep::enumerate_graphs(n, connected_only).expect("within cap"))
        .collect()
}
