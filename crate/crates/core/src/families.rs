//! Named graph constructors used throughout tests, examples and the CLI.

use crate::graph::Graph;

/// `P_n`: path `0 - 1 - ... - (n-1)`.
pub fn path(n: usize) -> Graph {
    Graph::from_sorted_unique(n, (1..n).map(|v| (v - 1, v)).collect())
}

/// `C_n` for `n >= 3`, vertices in cyclic order.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "a simple cycle needs at least three vertices");
    Graph::from_edges_lossy(n, (0..n).map(|v| (v, (v + 1) % n)))
}

/// `S_n`: star on `n` vertices with center 0.
pub fn star(n: usize) -> Graph {
    Graph::from_sorted_unique(n, (1..n).map(|v| (0, v)).collect())
}

/// `K_n`.
pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::from_sorted_unique(n, edges)
}

/// Triangle with one pendant edge (`C_3^+`): triangle 0-1-2, pendant 3 on 0.
pub fn triangle_with_pendant() -> Graph {
    Graph::from_edges_lossy(4, [(0, 1), (1, 2), (0, 2), (0, 3)])
}

/// `K_4` minus the edge {2, 3}.
pub fn k4_minus_edge() -> Graph {
    Graph::from_edges_lossy(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
}

/// Spider: a center with `legs` paths of `leg_len` vertices each.
pub fn spider(legs: usize, leg_len: usize) -> Graph {
    let mut edges = Vec::new();
    let mut next = 1;
    for _ in 0..legs {
        let mut prev = 0;
        for _ in 0..leg_len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    Graph::from_edges_lossy(next, edges)
}

/// A 27-vertex connected graph with three vertex-disjoint cycles of lengths
/// 5, 5 and 9 attached around a `P_4` and an `S_4`.
///
/// Layout:
/// * `0-1-2-3` is a path; 3 is joined to the 5-cycle `4..=8` at vertex 4.
/// * 0 is joined to the 5-cycle `9..=13` at vertex 9.
/// * 0 is joined to the 9-cycle `14..=22` at vertex 14.
/// * 14 is joined to 23; `24` is the center of the star `{23, 24, 25, 26}`.
///
/// `alpha_4 = 18`, `omega = 3`, and deleting the 19 cycle vertices leaves
/// `P_4 ∪ S_4`.
pub fn three_cycle_example() -> Graph {
    let mut edges = vec![
        (0, 1),
        (1, 2),
        (2, 3),
        (3, 4),
        (0, 9),
        (0, 14),
        (14, 23),
        (23, 24),
        (24, 25),
        (24, 26),
    ];
    let mut ring = |start: usize, len: usize| {
        for i in 0..len {
            edges.push((start + i, start + (i + 1) % len));
        }
    };
    ring(4, 5);
    ring(9, 5);
    ring(14, 9);
    Graph::new(27, edges).expect("fixture is a simple graph")
}
