//! Pebbling distributions, move sequences, solvability and exact pebbling numbers.

mod exact;
mod solver;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, Vertex};

pub use exact::{pebbling_number, rooted_pebbling_number, Certificate, ExactResult};
pub use solver::RootedSolver;

/// Pebble counts per vertex.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Distribution(Vec<u32>);

impl Distribution {
    pub fn new(counts: Vec<u32>) -> Self {
        Distribution(counts)
    }

    pub fn zeros(n: usize) -> Self {
        Distribution(vec![0; n])
    }

    /// All `size` pebbles on vertex `v`.
    pub fn single(n: usize, v: Vertex, size: u32) -> Self {
        let mut d = Self::zeros(n);
        d.0[v] = size;
        d
    }

    pub fn counts(&self) -> &[u32] {
        &self.0
    }

    pub fn get(&self, v: Vertex) -> u32 {
        self.0[v]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Total number of pebbles, |D|.
    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Copy with one extra pebble on `v`.
    pub fn with_extra(&self, v: Vertex) -> Self {
        let mut d = self.clone();
        d.0[v] += 1;
        d
    }

    /// Pointwise `self <= other`.
    pub fn is_below(&self, other: &Distribution) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

impl fmt::Debug for Distribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl From<Vec<u32>> for Distribution {
    fn from(v: Vec<u32>) -> Self {
        Distribution(v)
    }
}

/// One pebbling step: two pebbles leave `from`, one arrives at `to`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "(Vertex, Vertex)", into = "(Vertex, Vertex)")]
pub struct Move {
    pub from: Vertex,
    pub to: Vertex,
}

impl From<(Vertex, Vertex)> for Move {
    fn from((from, to): (Vertex, Vertex)) -> Self {
        Move { from, to }
    }
}

impl From<Move> for (Vertex, Vertex) {
    fn from(m: Move) -> Self {
        (m.from, m.to)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReplayError {
    #[error("step {step}: ({from}, {to}) is not an edge")]
    NotAnEdge { step: usize, from: Vertex, to: Vertex },
    #[error("step {step}: vertex {from} holds {have} pebble(s), needs 2")]
    Insufficient { step: usize, from: Vertex, have: u32 },
    #[error("distribution has {have} entries, graph has {want} vertices")]
    WrongLength { have: usize, want: usize },
}

/// An ordered list of pebbling steps, serialized as `[[from, to], ...]`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MoveSequence(pub Vec<Move>);

impl MoveSequence {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, from: Vertex, to: Vertex) {
        self.0.push(Move { from, to });
    }

    pub fn steps(&self) -> &[Move] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Applies every step to `start`, failing on the first illegal one.
    pub fn replay(&self, g: &Graph, start: &Distribution) -> Result<Distribution, ReplayError> {
        if start.len() != g.n() {
            return Err(ReplayError::WrongLength {
                have: start.len(),
                want: g.n(),
            });
        }
        let mut d = start.clone();
        for (step, m) in self.0.iter().enumerate() {
            if m.from >= g.n() || m.to >= g.n() || !g.is_adjacent(m.from, m.to) {
                return Err(ReplayError::NotAnEdge {
                    step,
                    from: m.from,
                    to: m.to,
                });
            }
            let have = d.0[m.from];
            if have < 2 {
                return Err(ReplayError::Insufficient {
                    step,
                    from: m.from,
                    have,
                });
            }
            d.0[m.from] -= 2;
            d.0[m.to] += 1;
        }
        Ok(d)
    }

    /// Replays legally and leaves at least `k` pebbles on `root`.
    pub fn achieves(&self, g: &Graph, start: &Distribution, root: Vertex, k: u32) -> bool {
        self.replay(g, start).is_ok_and(|end| end.get(root) >= k)
    }
}

/// Search caps. Exceeding any of them aborts an exact computation with a
/// partial bracket instead of running unbounded.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchBudget {
    pub max_vertices: usize,
    pub max_pebbles: u32,
    pub max_configs: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_vertices: 16,
            max_pebbles: 256,
            max_configs: 200_000_000,
        }
    }
}

impl SearchBudget {
    pub fn unlimited() -> Self {
        SearchBudget {
            max_vertices: crate::graph::MAX_VERTICES,
            max_pebbles: u16::MAX as u32,
            max_configs: u64::MAX,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolverError {
    #[error("search budget exceeded ({reason}); value lies in [{lower}, {upper}]")]
    BudgetExceeded {
        reason: String,
        lower: u32,
        upper: u128,
    },
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

/// Whether some sequence of steps puts `k` pebbles on `root`; returns the
/// sequence when it does.
pub fn is_k_solvable(g: &Graph, d: &Distribution, root: Vertex, k: u32) -> Option<MoveSequence> {
    let mut solver = RootedSolver::new(g, root, k);
    let counts = solver::to_counts(d).expect("distribution fits in the solver's counters");
    match solver.solve(&counts) {
        Ok(true) => Some(solver.certificate(&counts).expect("solved configuration has a certificate")),
        Ok(false) => None,
        Err(_) => unreachable!("unbudgeted solver"),
    }
}

/// `root`-solvability, i.e. [`is_k_solvable`] with `k = 1`.
pub fn is_rooted_solvable(g: &Graph, d: &Distribution, root: Vertex) -> bool {
    is_k_solvable(g, d, root, 1).is_some()
}

/// Solvable for every root.
pub fn is_solvable(g: &Graph, d: &Distribution) -> bool {
    g.vertices().all(|r| is_rooted_solvable(g, d, r))
}

/// The two standard unsolvable distributions for `root`: one pebble on every
/// other vertex, and `2^e - 1` pebbles on the first vertex at distance `e(root)`.
pub fn witness_distributions(g: &Graph, root: Vertex) -> Vec<Distribution> {
    let metrics = g.metrics();
    let mut spread = Distribution::new(vec![1; g.n()]);
    spread.0[root] = 0;
    let far = metrics.farthest_from(root);
    let e = metrics.eccentricity(root) as u32;
    let stacked = Distribution::single(g.n(), far, (1u32 << e) - 1);
    vec![spread, stacked]
}

/// All compositions of `total` into `parts` nonnegative parts, in
/// lexicographic order from `(0, .., 0, total)` to `(total, 0, .., 0)`.
pub fn compositions(total: u32, parts: usize) -> Compositions {
    Compositions {
        next: (parts > 0).then(|| {
            let mut v = vec![0; parts];
            v[parts - 1] = total;
            v
        }),
    }
}

pub struct Compositions {
    next: Option<Vec<u32>>,
}

impl Iterator for Compositions {
    type Item = Distribution;

    fn next(&mut self) -> Option<Distribution> {
        let cur = self.next.take()?;
        let n = cur.len();
        // Successor: find the rightmost position i < n-1 whose suffix holds a
        // pebble, bump it, and dump the rest of the suffix on the last slot.
        let mut succ = cur.clone();
        let mut tail = succ[n - 1];
        succ[n - 1] = 0;
        let mut i = n - 1;
        while i > 0 {
            i -= 1;
            if tail > 0 {
                succ[i] += 1;
                succ[n - 1] = tail - 1;
                self.next = Some(succ);
                break;
            }
            tail += succ[i];
            succ[i] = 0;
        }
        Some(Distribution(cur))
    }
}
