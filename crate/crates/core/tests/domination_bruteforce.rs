mod common;

use common::*;
use pebbling::domination::{
    domination_number, find_efficient_dominating_set, is_dominating, is_efficient,
    is_independent, is_perfect, min_dominating_set,
};
use pebbling::family::generate;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn check(g: &pebbling::Graph) {
    let n = g.n();
    let gamma = subsets(n).filter(|s| brute_dominating(g, s)).map(|s| s.len()).min().unwrap();
    let first_min = subsets(n)
        .filter(|s| s.len() == gamma && brute_dominating(g, s))
        .min()
        .unwrap();
    let dom = min_dominating_set(g);
    assert_eq!(dom.size, gamma, "{g:?}");
    assert_eq!(domination_number(g), gamma);
    assert_eq!(dom.set, first_min, "lexicographically first minimum set");
    assert!(dom.holds(g));

    let eff = subsets(n)
        .filter(|s| brute_efficient(g, s))
        .min_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    let found = find_efficient_dominating_set(g).map(|c| c.set);
    assert_eq!(found, eff, "{g:?}");

    for s in subsets(n) {
        assert_eq!(is_dominating(g, &s), brute_dominating(g, &s));
        assert_eq!(is_efficient(g, &s), brute_efficient(g, &s));
        assert_eq!(is_efficient(g, &s), is_perfect(g, &s) && is_independent(g, &s) && is_dominating(g, &s));
    }
}

#[test]
fn all_small_graphs() {
    for n in 1..=5 {
        for g in connected_graphs(n) {
            check(&g);
        }
    }
}

#[test]
fn random_graphs_up_to_ten_vertices() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for n in 6..=10 {
        for _ in 0..20 {
            check(&random_connected_graph(&mut rng, n));
        }
    }
}

#[test]
fn family_graphs() {
    for spec in ["path:7", "cycle:7", "cycle:9", "star:6", "doublestar:6", "corona:path:4", "corona:cycle:5"] {
        check(&generate(spec).unwrap());
    }
}
