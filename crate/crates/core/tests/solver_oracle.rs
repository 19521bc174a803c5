mod common;

use common::*;
use pebbling::pebbling::{
    is_k_solvable, pebbling_number, rooted_pebbling_number, Distribution, RootedSolver,
    SearchBudget,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn agrees_with_naive_search_on_all_small_graphs() {
    let mut compared = 0;
    for n in 1..=4 {
        for g in connected_graphs(n) {
            for root in g.vertices() {
                for k in 1..=2 {
                    let mut solver = RootedSolver::new(&g, root, k);
                    for size in 0..=8 {
                        for d in all_distributions(n, size) {
                            let dist = Distribution::new(d.clone());
                            let expected = naive_k_solvable(&g, &d, root, k);
                            assert_eq!(solver.is_solvable(&dist).unwrap(), expected, "{g:?} {d:?} root {root} k {k}");
                            let cert = is_k_solvable(&g, &dist, root, k);
                            assert_eq!(cert.is_some(), expected);
                            if let Some(seq) = cert {
                                assert!(seq.achieves(&g, &dist, root, k));
                            }
                            compared += 1;
                        }
                    }
                }
            }
        }
    }
    assert!(compared > 100_000);
}

#[test]
fn agrees_with_naive_search_on_random_five_vertex_triples() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..1000 {
        let g = random_connected_graph(&mut rng, 5);
        let size = rng.gen_range(0..=16);
        let d = random_distribution(&mut rng, 5, size);
        let root = rng.gen_range(0..5);
        let k = rng.gen_range(1..=2);
        let cert = is_k_solvable(&g, &Distribution::new(d.clone()), root, k);
        assert_eq!(cert.is_some(), naive_k_solvable(&g, &d, root, k), "{g:?} {d:?} {root} {k}");
    }
}

#[test]
fn exact_numbers_match_naive_enumeration() {
    let budget = SearchBudget::default();
    for n in 1..=4 {
        for g in connected_graphs(n) {
            let exact = pebbling_number(&g, 1, &budget).unwrap();
            let per_root: Vec<u32> = g.vertices().map(|r| naive_rooted_number(&g, r, 1)).collect();
            assert_eq!(exact.per_root.as_deref(), Some(&per_root[..]), "{g:?}");
            assert_eq!(exact.value, *per_root.iter().max().unwrap());
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..6 {
        let g = random_connected_graph(&mut rng, 5);
        let root = rng.gen_range(0..5);
        let exact = rooted_pebbling_number(&g, root, 1, &budget).unwrap();
        assert_eq!(exact.value, naive_rooted_number(&g, root, 1), "{g:?} root {root}");
    }
}

#[test]
fn k_pebbling_numbers_match_naive_enumeration() {
    let budget = SearchBudget::default();
    for g in connected_graphs(3) {
        for k in 2..=3 {
            assert_eq!(pebbling_number(&g, k, &budget).unwrap().value, naive_pebbling_number(&g, k));
        }
    }
}

#[test]
fn witnesses_are_maximal_unsolvable() {
    let budget = SearchBudget::default();
    for g in connected_graphs(4) {
        let r = pebbling_number(&g, 1, &budget).unwrap();
        let w = r.witness.counts().to_vec();
        assert!(!naive_k_solvable(&g, &w, r.root, 1));
        for v in g.vertices() {
            let mut up = w.clone();
            up[v] += 1;
            assert!(naive_k_solvable(&g, &up, r.root, 1));
        }
        assert!(r.spot_checks.iter().all(|c| c.replays(&g)));
    }
}
