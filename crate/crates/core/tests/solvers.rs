mod common;

use common::graphs_up_to;
use kindep::{alpha_bruteforce, alpha_exact, alpha_number, alpha_tree, enumerate_trees, Graph};
use proptest::prelude::*;

#[test]
fn exact_matches_bruteforce_on_small_graphs() {
    for g in graphs_up_to(7, false) {
        for k in 2..=5 {
            let brute = alpha_bruteforce(&g, k).unwrap();
            let exact = alpha_exact(&g, k).unwrap();
            assert_eq!(exact, brute, "{g:?} k={k}");
        }
    }
}

#[test]
fn tree_dp_matches_bruteforce() {
    for n in 1..=12 {
        for t in enumerate_trees(n) {
            for k in [2, 3, 4, 5] {
                assert_eq!(
                    alpha_tree(&t, k).unwrap(),
                    alpha_bruteforce(&t, k).unwrap(),
                    "{t:?} k={k}"
                );
            }
        }
    }
}

#[test]
fn tree_dp_rejects_cycles() {
    assert!(alpha_tree(&kindep::families::cycle(4), 4).is_err());
}

#[test]
fn invalid_k_is_rejected() {
    let g = kindep::families::path(3);
    assert!(alpha_exact(&g, 1).is_err());
    assert!(alpha_bruteforce(&g, 0).is_err());
    assert!(alpha_tree(&g, 1).is_err());
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let len = pairs.len();
        proptest::collection::vec(any::<bool>(), len).prop_map(move |keep| {
            let edges = pairs.iter().zip(&keep).filter(|(_, &k)| k).map(|(&e, _)| e);
            Graph::new(n, edges).unwrap()
        })
    })
}

fn arb_forest(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec((any::<prop::sample::Index>(), any::<bool>()), n.saturating_sub(1)).prop_map(
            move |picks| {
                let edges = picks
                    .iter()
                    .enumerate()
                    .filter(|(_, (_, keep))| *keep)
                    .map(|(i, (p, _))| (p.index(i + 1), i + 1));
                Graph::new(n, edges).unwrap()
            },
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn exact_agrees_with_bruteforce(g in arb_graph(14), k in 2usize..=5) {
        prop_assert_eq!(alpha_exact(&g, k).unwrap(), alpha_bruteforce(&g, k).unwrap());
    }

    #[test]
    fn tree_dp_agrees_with_bruteforce_on_forests(f in arb_forest(18), k in 2usize..=6) {
        prop_assert_eq!(alpha_tree(&f, k).unwrap(), alpha_bruteforce(&f, k).unwrap());
    }

    #[test]
    fn witness_is_valid_and_alpha_monotone_in_k(g in arb_graph(16), k in 2usize..=5) {
        let r = alpha_exact(&g, k).unwrap();
        prop_assert!(r.is_valid_for(&g));
        prop_assert!(alpha_number(&g, k + 1).unwrap() >= r.value);
    }

    #[test]
    fn forest_bound_holds(f in arb_forest(24)) {
        // alpha_4 of an acyclic graph is at least 3n/4.
        let a = alpha_tree(&f, 4).unwrap().value;
        prop_assert!(4 * a >= 3 * f.n());
    }
}
