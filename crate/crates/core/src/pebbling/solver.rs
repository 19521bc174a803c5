use rustc_hash::FxHashMap;

use super::{Distribution, MoveSequence};
use crate::graph::{Graph, Vertex};

pub(crate) type Counts = Box<[u16]>;

/// Largest distribution size the `u16` counters accept, leaving headroom for
/// the one-pebble-above lookup.
pub(crate) const MAX_COUNT: u32 = u16::MAX as u32 - 1;

const DEFAULT_MEMO_CAPACITY: usize = 4_000_000;

pub(crate) fn to_counts(d: &Distribution) -> Option<Counts> {
    if d.size() > MAX_COUNT {
        return None;
    }
    Some(d.counts().iter().map(|&c| c as u16).collect())
}

pub(crate) fn to_distribution(c: &[u16]) -> Distribution {
    Distribution::new(c.iter().map(|&x| x as u32).collect())
}

#[derive(Debug, Clone, Copy)]
enum Entry {
    Unsolvable,
    /// Solvable; the first step is `moves[i]`.
    Step(u32),
    /// Solvable because the configuration with one pebble fewer on this vertex is.
    Drop(u32),
}

/// The configuration budget ran out mid-search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Exhausted;

/// Decides `k`-solvability for one fixed root, memoizing across queries.
///
/// Search is a depth-first walk over configurations. Every step removes a
/// pebble, so the walk is acyclic and a configuration's verdict never changes.
/// Three prunes apply before expanding a node:
///
/// * weight: `Σ D(u) / 2^dist(u, root)` never increases under a step and is at
///   least `k` once the root holds `k` pebbles, so weight `< k` is unsolvable;
/// * memo hit on the configuration itself;
/// * one-pebble dominance: a known-solvable configuration one pebble below, or a
///   known-unsolvable one one pebble above.
pub struct RootedSolver<'g> {
    graph: &'g Graph,
    root: Vertex,
    k: u32,
    weights: Vec<u128>,
    target: u128,
    moves: Vec<(Vertex, Vertex)>,
    memo: FxHashMap<Counts, Entry>,
    memo_capacity: usize,
    explored: u64,
    max_configs: u64,
}

impl<'g> RootedSolver<'g> {
    pub fn new(graph: &'g Graph, root: Vertex, k: u32) -> Self {
        assert!(root < graph.n(), "root out of range");
        assert!(k >= 1, "k must be positive");
        let dist = graph.bfs(root);
        let ecc = *dist.iter().max().unwrap() as u32;
        let weights = dist.iter().map(|&d| 1u128 << (ecc - d as u32)).collect();
        let target = k as u128 * (1u128 << ecc);

        let mut moves: Vec<(Vertex, Vertex)> = graph
            .edges()
            .iter()
            .flat_map(|&(u, v)| [(u, v), (v, u)])
            .collect();
        // Toward the root first, far sources first.
        moves.sort_by_key(|&(u, w)| {
            (
                dist[w] as isize - dist[u] as isize,
                std::cmp::Reverse(dist[u]),
                u,
                w,
            )
        });

        RootedSolver {
            graph,
            root,
            k,
            weights,
            target,
            moves,
            memo: FxHashMap::default(),
            memo_capacity: DEFAULT_MEMO_CAPACITY,
            explored: 0,
            max_configs: u64::MAX,
        }
    }

    /// Caps the number of expanded configurations over the solver's lifetime.
    pub fn with_max_configs(mut self, max_configs: u64) -> Self {
        self.max_configs = max_configs;
        self
    }

    pub fn with_memo_capacity(mut self, cap: usize) -> Self {
        self.memo_capacity = cap;
        self
    }

    pub fn root(&self) -> Vertex {
        self.root
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    /// Configurations expanded so far.
    pub fn explored(&self) -> u64 {
        self.explored
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    pub fn is_solvable(&mut self, d: &Distribution) -> Result<bool, Exhausted> {
        let c = to_counts(d).expect("distribution too large for the solver");
        self.solve(&c)
    }

    /// Solves and, when solvable, returns a replayable certificate.
    pub fn solve_with_certificate(
        &mut self,
        d: &Distribution,
    ) -> Result<Option<MoveSequence>, Exhausted> {
        let c = to_counts(d).expect("distribution too large for the solver");
        Ok(if self.solve(&c)? {
            self.certificate(&c)
        } else {
            None
        })
    }

    pub(crate) fn solve(&mut self, counts: &[u16]) -> Result<bool, Exhausted> {
        debug_assert_eq!(counts.len(), self.graph.n());
        if self.memo.len() > self.memo_capacity {
            self.memo.clear();
        }
        let mut c = counts.to_vec();
        self.dfs(&mut c)
    }

    /// Follows memo entries from `counts` to a configuration with `k` pebbles
    /// on the root. Valid right after a successful [`Self::solve`] on `counts`.
    pub(crate) fn certificate(&self, counts: &[u16]) -> Option<MoveSequence> {
        // `virt` is pointwise below the real configuration at all times, so
        // every step legal on it is legal on the real one.
        let mut virt = counts.to_vec();
        let mut seq = MoveSequence::new();
        loop {
            if virt[self.root] as u32 >= self.k {
                return Some(seq);
            }
            match self.memo.get(virt.as_slice())? {
                Entry::Unsolvable => return None,
                Entry::Step(i) => {
                    let (u, w) = self.moves[*i as usize];
                    virt[u] -= 2;
                    virt[w] += 1;
                    seq.push(u, w);
                }
                Entry::Drop(u) => virt[*u as usize] -= 1,
            }
        }
    }

    fn weight(&self, c: &[u16]) -> u128 {
        c.iter()
            .zip(&self.weights)
            .map(|(&x, &w)| x as u128 * w)
            .sum()
    }

    fn dfs(&mut self, c: &mut Vec<u16>) -> Result<bool, Exhausted> {
        if c[self.root] as u32 >= self.k {
            return Ok(true);
        }
        if self.weight(c) < self.target {
            return Ok(false);
        }
        if let Some(e) = self.memo.get(c.as_slice()) {
            return Ok(!matches!(e, Entry::Unsolvable));
        }
        for u in 0..c.len() {
            if c[u] > 0 {
                c[u] -= 1;
                let below_solvable = matches!(
                    self.memo.get(c.as_slice()),
                    Some(Entry::Step(_) | Entry::Drop(_))
                );
                c[u] += 1;
                if below_solvable {
                    self.memo.insert(c.as_slice().into(), Entry::Drop(u as u32));
                    return Ok(true);
                }
            }
            c[u] += 1;
            let above_unsolvable = matches!(self.memo.get(c.as_slice()), Some(Entry::Unsolvable));
            c[u] -= 1;
            if above_unsolvable {
                self.memo.insert(c.as_slice().into(), Entry::Unsolvable);
                return Ok(false);
            }
        }

        self.explored += 1;
        if self.explored > self.max_configs {
            return Err(Exhausted);
        }
        for i in 0..self.moves.len() {
            let (u, w) = self.moves[i];
            if c[u] < 2 {
                continue;
            }
            c[u] -= 2;
            c[w] += 1;
            let solved = self.dfs(c);
            c[u] += 2;
            c[w] -= 1;
            if solved? {
                self.memo.insert(c.as_slice().into(), Entry::Step(i as u32));
                return Ok(true);
            }
        }
        self.memo.insert(c.as_slice().into(), Entry::Unsolvable);
        Ok(false)
    }
}
