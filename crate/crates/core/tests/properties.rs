mod common;

use common::*;
use pebbling::bounds::all_bounds;
use pebbling::domination::{find_efficient_dominating_set, min_dominating_set};
use pebbling::family::Family;
use pebbling::pebbling::{compositions, is_k_solvable, pebbling_number, Distribution, SearchBudget};
use pebbling::{Graph, GraphMetrics};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, any::<u64>())
        .prop_map(|(n, seed)| random_connected_graph(&mut ChaCha8Rng::seed_from_u64(seed), n))
}

fn graph_and_distribution(max_n: usize, max_size: u32) -> impl Strategy<Value = (Graph, Vec<u32>, usize)> {
    graph(max_n).prop_flat_map(move |g| {
        let n = g.n();
        (Just(g), proptest::collection::vec(0..=max_size / n as u32 + 1, n), 0..n)
    })
}

fn family() -> impl Strategy<Value = Family> {
    let base = prop_oneof![
        (2usize..12).prop_map(Family::Path),
        (3usize..12).prop_map(Family::Cycle),
        (1usize..12).prop_map(Family::Complete),
        (1usize..12).prop_map(Family::Star),
        (1usize..6).prop_map(|h| Family::DoubleStar(2 * h)),
    ];
    prop_oneof![base.clone(), base.prop_map(|b| Family::Corona(Box::new(b)))]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn adding_a_pebble_keeps_solvability((g, d, root) in graph_and_distribution(6, 24), v in 0usize..6, k in 1u32..=2) {
        let v = v % g.n();
        let dist = Distribution::new(d);
        let up = dist.with_extra(v);
        if is_k_solvable(&g, &dist, root, k).is_some() {
            prop_assert!(is_k_solvable(&g, &up, root, k).is_some());
        } else {
            // Unsolvable sets are closed downward: every reduction is unsolvable too.
            for u in g.vertices().filter(|&u| dist.get(u) > 0) {
                let mut c = dist.counts().to_vec();
                c[u] -= 1;
                prop_assert!(is_k_solvable(&g, &Distribution::new(c), root, k).is_none());
            }
        }
    }

    #[test]
    fn certificates_replay((g, d, root) in graph_and_distribution(7, 40), k in 1u32..=3) {
        let dist = Distribution::new(d);
        if let Some(seq) = is_k_solvable(&g, &dist, root, k) {
            prop_assert!(seq.achieves(&g, &dist, root, k));
        }
    }

    #[test]
    fn exact_value_within_trivial_bounds(g in graph(5)) {
        let r = pebbling_number(&g, 1, &SearchBudget::default()).unwrap();
        let m = g.metrics();
        let gamma = min_dominating_set(&g).size as u32;
        let eff = find_efficient_dominating_set(&g).map(|c| c.size as u32);
        let bounds = all_bounds(g.n() as u32, m.diameter() as u32, gamma, eff).unwrap();
        let f = r.value as u128;
        prop_assert!(bounds[0].value.unwrap() <= f);
        for b in bounds.iter().filter(|b| b.is_upper()) {
            if let Some(v) = b.value {
                prop_assert!(f <= v, "{} = {} < {}", b.name, v, f);
            }
        }
    }

    #[test]
    fn metrics_match_reference_bfs(g in graph(12)) {
        let m = g.metrics();
        prop_assert_eq!(m.distances(), &distances(&g)[..]);
        prop_assert_eq!(&GraphMetrics::floyd_warshall(&g), &m);
        for u in g.vertices() {
            prop_assert_eq!(m.eccentricity(u), *distances(&g)[u].iter().max().unwrap());
            for v in g.vertices() {
                prop_assert_eq!(m.dist(u, v), m.dist(v, u));
                for w in g.vertices() {
                    prop_assert!(m.dist(u, w) <= m.dist(u, v) + m.dist(v, w));
                }
            }
        }
        prop_assert_eq!(m.diameter(), *m.eccentricities().iter().max().unwrap());
    }

    #[test]
    fn shortest_paths_are_shortest(g in graph(10), a in 0usize..10, b in 0usize..10) {
        let (a, b) = (a % g.n(), b % g.n());
        let m = g.metrics();
        let p = g.shortest_path(&m, a, b);
        prop_assert_eq!(p.len(), m.dist(a, b) + 1);
        prop_assert_eq!((p[0], *p.last().unwrap()), (a, b));
        prop_assert!(p.windows(2).all(|w| g.is_adjacent(w[0], w[1])));
        let all = g.all_shortest_paths(&m, a, b);
        prop_assert_eq!(all.iter().min(), Some(&p));
    }

    #[test]
    fn edge_list_round_trip(g in graph(12)) {
        prop_assert_eq!(Graph::parse_edge_list(&g.to_edge_list()).unwrap(), g);
    }

    #[test]
    fn family_spec_round_trip(f in family()) {
        let text = f.to_string();
        prop_assert_eq!(text.parse::<Family>().unwrap(), f.clone());
        prop_assert_eq!(f.generate().unwrap().n(), f.vertex_count());
    }

    #[test]
    fn compositions_are_complete_and_ordered(total in 0u32..8, parts in 1usize..5) {
        let all: Vec<Vec<u32>> = compositions(total, parts).map(|d| d.counts().to_vec()).collect();
        let mut expected: Vec<Vec<u32>> = all_distributions(parts, total).collect();
        expected.sort();
        prop_assert_eq!(all, expected);
    }
}
