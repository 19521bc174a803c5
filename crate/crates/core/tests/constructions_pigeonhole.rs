mod common;

use common::*;
use pebbling::constructions::*;
use pebbling::domination::{find_efficient_dominating_set, min_dominating_set};
use pebbling::family::generate;
use pebbling::pebbling::{is_k_solvable, Distribution};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const GRAPHS: &[&str] = &[
    "path:5", "path:6", "cycle:5", "cycle:6", "complete:5", "star:4", "doublestar:4",
    "doublestar:6", "corona:cycle:4", "corona:path:3",
];

#[test]
fn some_path_delivers_at_the_path_set_threshold() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for spec in GRAPHS {
        let g = generate(spec).unwrap();
        let m = g.metrics();
        for root in g.vertices() {
            let ps = build_path_set(&g, &m, root);
            ps.verify(&g, &m).unwrap();
            let size = ps.pigeonhole_bound() as u32;
            for _ in 0..200 {
                let d = Distribution::new(random_distribution(&mut rng, g.n(), size));
                if d.get(root) > 0 {
                    continue;
                }
                let seq = ps
                    .paths
                    .iter()
                    .find_map(|p| path_transport(&g, &d, p))
                    .unwrap_or_else(|| panic!("{spec} root {root}: {:?}", d.counts()));
                assert!(seq.achieves(&g, &d, root, 1));
            }
        }
    }
}

#[test]
fn cell_strategies_deliver_at_their_threshold() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for spec in GRAPHS {
        let g = generate(spec).unwrap();
        let m = g.metrics();
        let dom = min_dominating_set(&g);
        let eff = find_efficient_dominating_set(&g).map(|c| build_efficient_decomposition(&g, &c).unwrap());
        for root in g.vertices() {
            let dec = build_dominating_decomposition(&g, root, &dom).unwrap();
            for dec in std::iter::once(&dec).chain(eff.as_ref()) {
                let size = dec.pigeonhole_bound(m.diameter()) as u32;
                for _ in 0..100 {
                    let d = Distribution::new(random_distribution(&mut rng, g.n(), size));
                    let seq = decomposition_strategy(&g, &m, dec, &d, root)
                        .unwrap_or_else(|| panic!("{spec} root {root} {:?}: {:?}", dec.kind, d.counts()));
                    assert!(seq.achieves(&g, &d, root, 1));
                }
            }
        }
    }
}

#[test]
fn path_transport_is_optimal_on_paths() {
    let g = generate("path:4").unwrap();
    for size in 0..=12 {
        for d in all_distributions(4, size) {
            let dist = Distribution::new(d.clone());
            for k in 1..=2 {
                let greedy = path_transport_k(&g, &dist, &[0, 1, 2, 3], k);
                assert_eq!(greedy.is_some(), naive_k_solvable(&g, &d, 3, k), "{d:?} k {k}");
                if let Some(seq) = greedy {
                    assert!(seq.achieves(&g, &dist, 3, k));
                }
            }
        }
    }
}

#[test]
fn star_greedy_is_optimal() {
    let g = generate("star:3").unwrap();
    for size in 0..=12 {
        for d in all_distributions(4, size) {
            let dist = Distribution::new(d.clone());
            for target in [0, 1] {
                for k in 1..=3 {
                    let greedy = star_k_pebble(&g, &dist, 0, &[1, 2, 3], target, k);
                    assert_eq!(greedy.is_some(), is_k_solvable(&g, &dist, target, k).is_some(), "{d:?} {target} {k}");
                    if let Some(seq) = greedy {
                        assert!(seq.achieves(&g, &dist, target, k));
                    }
                }
            }
        }
    }
}

#[test]
fn disjoint_systems_are_maximum() {
    for spec in GRAPHS {
        let g = generate(spec).unwrap();
        let m = g.metrics();
        let dist = distances(&g);
        for root in g.vertices() {
            let sys = build_root_disjoint_system(&g, &m, root);
            sys.verify(&g, &m).unwrap();
            let e = m.eccentricity(root);
            assert!(sys.k() >= 1 && sys.k() <= (g.n() - 1) / e);
            for (w, p) in sys.terminals.iter().zip(&sys.paths) {
                assert_eq!(dist[*w][root], e);
                assert_eq!(p.len(), e + 1);
            }
            assert_eq!(sys.k(), brute_max_system(&g, &dist, root, e), "{spec} root {root}");
        }
    }
}

#[test]
fn decomposition_cell_counts() {
    for spec in GRAPHS {
        let g = generate(spec).unwrap();
        let n = g.n();
        if let Some(c) = find_efficient_dominating_set(&g) {
            let dec = build_efficient_decomposition(&g, &c).unwrap();
            assert_eq!(dec.cell_sizes().iter().sum::<usize>(), n);
        }
        let dom = min_dominating_set(&g);
        for root in g.vertices() {
            let dec = build_dominating_decomposition(&g, root, &dom).unwrap();
            let total: usize = dec.cell_sizes().iter().sum();
            assert!(total <= n + dom.size, "{spec} root {root}");
            let covered: std::collections::BTreeSet<usize> = dec.cells.iter().flatten().copied().collect();
            assert_eq!(covered.len(), n);
        }
    }
}

/// Shortest paths from `w` to `root`, as vertex masks without `root`.
fn path_masks(g: &pebbling::Graph, dist: &[Vec<usize>], w: usize, root: usize) -> Vec<u64> {
    if w == root {
        return vec![0];
    }
    g.neighbors(w)
        .iter()
        .filter(|&&u| dist[u][root] + 1 == dist[w][root])
        .flat_map(|&u| path_masks(g, dist, u, root))
        .map(|m| m | 1 << w)
        .collect()
}

/// Largest number of shortest paths from distinct far vertices that share only `root`.
fn brute_max_system(g: &pebbling::Graph, dist: &[Vec<usize>], root: usize, e: usize) -> usize {
    if e == 0 {
        return 1;
    }
    let options: Vec<Vec<u64>> = g
        .vertices()
        .filter(|&w| dist[w][root] == e)
        .map(|w| path_masks(g, dist, w, root))
        .collect();
    fn best(options: &[Vec<u64>], used: u64) -> usize {
        match options.split_first() {
            None => 0,
            Some((first, rest)) => {
                let skip = best(rest, used);
                first
                    .iter()
                    .filter(|&&m| m & used == 0)
                    .map(|&m| 1 + best(rest, used | m))
                    .max()
                    .unwrap_or(0)
                    .max(skip)
            }
        }
    }
    best(&options, 0)
}
