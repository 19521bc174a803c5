//! Simple connected undirected graphs and their metric invariants.
//!
//! A [`Graph`] is validated once at construction and never mutated afterwards,
//! so it can be shared freely between threads. Vertices are `0..n`.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest vertex count a [`Graph`] accepts. Vertex sets are stored as `u64` masks.
pub const MAX_VERTICES: usize = 64;

pub type Vertex = usize;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("malformed edge ({0}, {1}): vertex out of range for n = {2}")]
    MalformedEdge(usize, usize, usize),
    #[error("loop or repeated edge ({0}, {1})")]
    LoopOrMultiedge(usize, usize),
    #[error("graph is disconnected: vertex {0} is unreachable from vertex 0")]
    Disconnected(usize),
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("graph has {0} vertices; at most {MAX_VERTICES} are supported")]
    TooLarge(usize),
    #[error("edge list parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// Immutable simple connected graph.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    adjacency: Vec<Vec<Vertex>>,
    masks: Vec<u64>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges)
            .finish()
    }
}

impl Graph {
    /// Validates an edge list and builds the graph.
    ///
    /// Rejects out-of-range endpoints, loops, repeated edges (in either
    /// orientation) and disconnected inputs.
    pub fn new(n: usize, edge_list: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        if n > MAX_VERTICES {
            return Err(GraphError::TooLarge(n));
        }
        let mut masks = vec![0u64; n];
        let mut edges = Vec::with_capacity(edge_list.len());
        for &(u, v) in edge_list {
            if u >= n || v >= n {
                return Err(GraphError::MalformedEdge(u, v, n));
            }
            if u == v || masks[u] & (1 << v) != 0 {
                return Err(GraphError::LoopOrMultiedge(u, v));
            }
            masks[u] |= 1 << v;
            masks[v] |= 1 << u;
            edges.push((u.min(v), u.max(v)));
        }
        edges.sort_unstable();
        let adjacency = masks.iter().map(|&m| mask_to_vec(m)).collect();
        let g = Graph {
            n,
            edges,
            adjacency,
            masks,
        };
        if let Some(v) = g.first_unreachable() {
            return Err(GraphError::Disconnected(v));
        }
        Ok(g)
    }

    /// Parses the edge-list text format: a header `n m`, then `m` lines `u v`.
    /// Lines starting with `#` and blank lines are ignored.
    pub fn parse_edge_list(text: &str) -> Result<Self, GraphError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (hline, header) = lines.next().ok_or(GraphError::Parse {
            line: 0,
            msg: "missing `n m` header".into(),
        })?;
        let (n, m) = parse_pair(hline, header)?;
        let mut edge_list = Vec::with_capacity(m);
        for (line, l) in lines {
            if edge_list.len() == m {
                return Err(GraphError::Parse {
                    line,
                    msg: format!("more than the {m} declared edges"),
                });
            }
            edge_list.push(parse_pair(line, l)?);
        }
        if edge_list.len() != m {
            return Err(GraphError::Parse {
                line: 0,
                msg: format!("declared {m} edges, found {}", edge_list.len()),
            });
        }
        Graph::new(n, &edge_list)
    }

    /// Renders the graph in the edge-list text format.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edges.len());
        for (u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Sorted neighbors of `v`.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    pub fn is_adjacent(&self, u: Vertex, v: Vertex) -> bool {
        self.masks[u] & (1 << v) != 0
    }

    /// Open neighborhood of `v` as a bit mask.
    pub fn neighbor_mask(&self, v: Vertex) -> u64 {
        self.masks[v]
    }

    /// Closed neighborhood `N[v]` as a bit mask.
    pub fn closed_mask(&self, v: Vertex) -> u64 {
        self.masks[v] | (1 << v)
    }

    /// Mask with every vertex set.
    pub fn full_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n
    }

    /// Hop distances from `source` by breadth-first search.
    pub fn bfs(&self, source: Vertex) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        let mut queue = VecDeque::new();
        dist[source] = 0;
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adjacency[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// All-pairs distances, eccentricities and diameter.
    pub fn metrics(&self) -> GraphMetrics {
        let dist: Vec<Vec<usize>> = self.vertices().map(|s| self.bfs(s)).collect();
        GraphMetrics::from_distances(dist)
    }

    /// Lexicographically smallest shortest path from `from` to `to`, both ends included.
    pub fn shortest_path(&self, metrics: &GraphMetrics, from: Vertex, to: Vertex) -> Vec<Vertex> {
        let mut path = vec![from];
        let mut cur = from;
        while cur != to {
            let next = self.adjacency[cur]
                .iter()
                .copied()
                .find(|&w| metrics.dist(w, to) + 1 == metrics.dist(cur, to))
                .expect("connected graph has a next hop");
            path.push(next);
            cur = next;
        }
        path
    }

    /// Every shortest path from `from` to `to`, in lexicographic order.
    pub fn all_shortest_paths(
        &self,
        metrics: &GraphMetrics,
        from: Vertex,
        to: Vertex,
    ) -> Vec<Vec<Vertex>> {
        let mut out = Vec::new();
        let mut path = vec![from];
        self.extend_shortest(metrics, to, &mut path, &mut out);
        out
    }

    fn extend_shortest(
        &self,
        metrics: &GraphMetrics,
        to: Vertex,
        path: &mut Vec<Vertex>,
        out: &mut Vec<Vec<Vertex>>,
    ) {
        let cur = *path.last().unwrap();
        if cur == to {
            out.push(path.clone());
            return;
        }
        for &w in &self.adjacency[cur] {
            if metrics.dist(w, to) + 1 == metrics.dist(cur, to) {
                path.push(w);
                self.extend_shortest(metrics, to, path, out);
                path.pop();
            }
        }
    }

    fn first_unreachable(&self) -> Option<Vertex> {
        self.bfs(0).iter().position(|&d| d == usize::MAX)
    }
}

/// All-pairs hop distances with derived eccentricities and diameter.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphMetrics {
    dist: Vec<Vec<usize>>,
    ecc: Vec<usize>,
    diameter: usize,
}

impl GraphMetrics {
    fn from_distances(dist: Vec<Vec<usize>>) -> Self {
        let ecc: Vec<usize> = dist
            .iter()
            .map(|row| row.iter().copied().max().unwrap_or(0))
            .collect();
        let diameter = ecc.iter().copied().max().unwrap_or(0);
        GraphMetrics {
            dist,
            ecc,
            diameter,
        }
    }

    /// Floyd–Warshall over the adjacency relation. Kept as an independent
    /// cross-check of the BFS route used by [`Graph::metrics`].
    pub fn floyd_warshall(g: &Graph) -> Self {
        let n = g.n();
        let inf = usize::MAX / 4;
        let mut dist = vec![vec![inf; n]; n];
        for (v, row) in dist.iter_mut().enumerate() {
            row[v] = 0;
        }
        for &(u, v) in g.edges() {
            dist[u][v] = 1;
            dist[v][u] = 1;
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    let through = dist[i][k] + dist[k][j];
                    if through < dist[i][j] {
                        dist[i][j] = through;
                    }
                }
            }
        }
        Self::from_distances(dist)
    }

    pub fn dist(&self, u: Vertex, v: Vertex) -> usize {
        self.dist[u][v]
    }

    pub fn distances(&self) -> &[Vec<usize>] {
        &self.dist
    }

    pub fn eccentricity(&self, v: Vertex) -> usize {
        self.ecc[v]
    }

    pub fn eccentricities(&self) -> &[usize] {
        &self.ecc
    }

    pub fn diameter(&self) -> usize {
        self.diameter
    }

    /// Smallest-index vertex at maximum distance from `v`.
    pub fn farthest_from(&self, v: Vertex) -> Vertex {
        let e = self.ecc[v];
        self.dist[v].iter().position(|&d| d == e).unwrap()
    }
}

pub(crate) fn mask_to_vec(mut m: u64) -> Vec<Vertex> {
    let mut out = Vec::with_capacity(m.count_ones() as usize);
    while m != 0 {
        out.push(m.trailing_zeros() as usize);
        m &= m - 1;
    }
    out
}

pub(crate) fn vec_to_mask(vs: &[Vertex]) -> u64 {
    vs.iter().fold(0, |m, &v| m | (1 << v))
}

fn parse_pair(line: usize, text: &str) -> Result<(usize, usize), GraphError> {
    let mut it = text.split_whitespace();
    let mut next = || -> Result<usize, GraphError> {
        let tok = it.next().ok_or_else(|| GraphError::Parse {
            line,
            msg: "expected two integers".into(),
        })?;
        tok.parse().map_err(|_| GraphError::Parse {
            line,
            msg: format!("not a vertex index: {tok:?}"),
        })
    };
    let a = next()?;
    let b = next()?;
    if it.next().is_some() {
        return Err(GraphError::Parse {
            line,
            msg: "trailing tokens".into(),
        });
    }
    Ok((a, b))
}
