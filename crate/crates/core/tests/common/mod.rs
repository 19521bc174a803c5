//! Reference implementations shared by the integration tests. Nothing here
//! calls into the solver, the domination search or the bound formulas.

#![allow(dead_code)]

use std::collections::{HashSet, VecDeque};

use pebbling::Graph;
use rand::Rng;

/// Breadth-first search over every configuration reachable from `start`.
pub fn naive_k_solvable(g: &Graph, start: &[u32], root: usize, k: u32) -> bool {
    let mut seen = HashSet::new();
    let mut queue = VecDeque::from([start.to_vec()]);
    seen.insert(start.to_vec());
    while let Some(c) = queue.pop_front() {
        if c[root] >= k {
            return true;
        }
        for &(a, b) in g.edges() {
            for (from, to) in [(a, b), (b, a)] {
                if c[from] >= 2 {
                    let mut next = c.clone();
                    next[from] -= 2;
                    next[to] += 1;
                    if seen.insert(next.clone()) {
                        queue.push_back(next);
                    }
                }
            }
        }
    }
    false
}

/// Least `N` such that every size-`N` distribution is `k`-solvable at `root`,
/// by enumerating every distribution of every size.
pub fn naive_rooted_number(g: &Graph, root: usize, k: u32) -> u32 {
    (0..)
        .find(|&size| all_distributions(g.n(), size).all(|d| naive_k_solvable(g, &d, root, k)))
        .unwrap()
}

pub fn naive_pebbling_number(g: &Graph, k: u32) -> u32 {
    g.vertices().map(|r| naive_rooted_number(g, r, k)).max().unwrap()
}

/// Every way to put `size` pebbles on `n` vertices.
pub fn all_distributions(n: usize, size: u32) -> impl Iterator<Item = Vec<u32>> {
    let mut out = Vec::new();
    fn rec(n: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() + 1 == n {
            cur.push(left);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for x in 0..=left {
            cur.push(x);
            rec(n, left - x, cur, out);
            cur.pop();
        }
    }
    if n > 0 {
        rec(n, size, &mut Vec::new(), &mut out);
    }
    out.into_iter()
}

/// Every connected labeled graph on `n` vertices.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    (0u32..1 << pairs.len())
        .filter_map(|mask| {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            Graph::new(n, &edges).ok()
        })
        .collect()
}

/// A uniformly random edge subset, resampled until connected.
pub fn random_connected_graph(rng: &mut impl Rng, n: usize) -> Graph {
    loop {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(0.5) {
                    edges.push((u, v));
                }
            }
        }
        if let Ok(g) = Graph::new(n, &edges) {
            return g;
        }
    }
}

pub fn random_distribution(rng: &mut impl Rng, n: usize, size: u32) -> Vec<u32> {
    let mut d = vec![0; n];
    for _ in 0..size {
        d[rng.gen_range(0..n)] += 1;
    }
    d
}

/// Subsets of `0..n` as sorted vectors.
pub fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u64..1 << n).map(move |m| (0..n).filter(|&v| m >> v & 1 == 1).collect())
}

/// Breadth-first distances, written independently of the library.
pub fn distances(g: &Graph) -> Vec<Vec<usize>> {
    g.vertices()
        .map(|s| {
            let mut dist = vec![usize::MAX; g.n()];
            dist[s] = 0;
            let mut q = VecDeque::from([s]);
            while let Some(u) = q.pop_front() {
                for &(a, b) in g.edges() {
                    for (x, y) in [(a, b), (b, a)] {
                        if x == u && dist[y] == usize::MAX {
                            dist[y] = dist[u] + 1;
                            q.push_back(y);
                        }
                    }
                }
            }
            dist
        })
        .collect()
}

pub fn closed_neighborhood(g: &Graph, v: usize) -> Vec<usize> {
    let mut out: Vec<usize> = std::iter::once(v).chain(g.neighbors(v).iter().copied()).collect();
    out.sort_unstable();
    out
}

pub fn brute_dominating(g: &Graph, s: &[usize]) -> bool {
    g.vertices()
        .all(|v| s.contains(&v) || g.neighbors(v).iter().any(|u| s.contains(u)))
}

/// Closed neighborhoods of `s` partition the vertex set.
pub fn brute_efficient(g: &Graph, s: &[usize]) -> bool {
    let mut hits = vec![0; g.n()];
    for &x in s {
        for v in closed_neighborhood(g, x) {
            hits[v] += 1;
        }
    }
    hits.iter().all(|&h| h == 1)
}
