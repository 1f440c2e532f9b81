//! Rooted dynamic program for forests.
//!
//! State of a vertex `v` within its subtree: 0 means `v` is not selected,
//! `s` in `1..k` means `v` is selected and the selected fragment containing
//! `v` (restricted to the subtree) has `s` vertices.

use super::{check_k, lexmin_witness, AlphaError, AlphaResult};
use crate::canon::bfs_order;
use crate::graph::{Graph, VertexSet};

const NEG: i64 = i64::MIN / 4;

/// Best value over a forest with per-vertex forcing, `None` if infeasible.
pub(crate) fn forest_value(g: &Graph, k: usize, forced_in: &[bool], forced_out: &[bool]) -> Option<usize> {
    let n = g.n();
    let mut visited = vec![false; n];
    let mut dp = vec![vec![NEG; k]; n];
    let mut total: i64 = 0;
    for root in 0..n {
        if visited[root] {
            continue;
        }
        let (order, parent) = bfs_order(g, root);
        for &v in &order {
            visited[v] = true;
        }
        for &v in order.iter().rev() {
            let mut cur = vec![NEG; k];
            if !forced_in[v] {
                cur[0] = 0;
            }
            if !forced_out[v] {
                cur[1] = 1;
            }
            for &c in g.neighbors(v) {
                if parent[c] != Some(v) {
                    continue;
                }
                let child = &dp[c];
                let child_best = child.iter().copied().max().unwrap();
                let mut next = vec![NEG; k];
                if cur[0] > NEG {
                    next[0] = cur[0] + child_best;
                }
                for a in 1..k {
                    if cur[a] <= NEG {
                        continue;
                    }
                    if child[0] > NEG {
                        next[a] = next[a].max(cur[a] + child[0]);
                    }
                    for b in 1..k - a {
                        if child[b] > NEG {
                            next[a + b] = next[a + b].max(cur[a] + child[b]);
                        }
                    }
                }
                cur = next;
            }
            dp[v] = cur;
        }
        let best = dp[root].iter().copied().max().unwrap();
        if best <= NEG {
            return None;
        }
        total += best;
    }
    Some(total as usize)
}

/// `alpha_k` of an acyclic graph in `O(n k^2)` per evaluation.
pub fn alpha_tree(t: &Graph, k: usize) -> Result<AlphaResult, AlphaError> {
    check_k(k)?;
    let omega = t.omega();
    if omega != 0 {
        return Err(AlphaError::NotAcyclic { omega });
    }
    let n = t.n();
    let none = vec![false; n];
    let value = forest_value(t, k, &none, &none).expect("unconstrained forest is feasible");
    let witness = lexmin_witness(n, value, |fin, fout| forest_value(t, k, fin, fout));
    Ok(AlphaResult {
        k,
        value,
        witness: VertexSet::new(t, witness).expect("in range"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{path, spider, star};

    #[test]
    fn path_values() {
        assert_eq!(alpha_tree(&path(8), 4).unwrap().value, 6);
        assert_eq!(alpha_tree(&path(1), 7).unwrap().value, 1);
        let two_p4 = Graph::new(8, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7)]).unwrap();
        assert_eq!(alpha_tree(&two_p4, 4).unwrap().value, 6);
        assert_eq!(alpha_tree(&Graph::empty(0), 4).unwrap().value, 0);
    }

    #[test]
    fn rejects_cycles() {
        let c = crate::families::cycle(4);
        assert_eq!(alpha_tree(&c, 4), Err(AlphaError::NotAcyclic { omega: 1 }));
    }

    #[test]
    fn forest_and_witness() {
        let f = path(4).disjoint_union(&star(5));
        let r = alpha_tree(&f, 4).unwrap();
        assert_eq!(r.value, 3 + 4);
        assert!(r.is_valid_for(&f));
        let s = spider(3, 2);
        let r = alpha_tree(&s, 3).unwrap();
        assert_eq!(r.value, crate::alpha::alpha_bruteforce(&s, 3).unwrap().value);
        assert_eq!(r.witness, crate::alpha::alpha_bruteforce(&s, 3).unwrap().witness);
    }

    #[test]
    fn forcing_is_respected() {
        let p = path(4);
        let mut fin = vec![false; 4];
        let mut fout = vec![false; 4];
        fin[0] = true;
        fin[1] = true;
        fin[2] = true;
        fin[3] = true;
        assert_eq!(forest_value(&p, 4, &fin, &fout), None);
        fin = vec![false; 4];
        fout[1] = true;
        assert_eq!(forest_value(&p, 4, &fin, &fout), Some(3));
    }
}
