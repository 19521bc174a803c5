//! Executable versions of the covering arguments behind the upper bounds:
//! path covers rooted at a vertex, root-disjoint shortest-path systems, and
//! decompositions of V into diameter-2 cells around a dominating set.
//!
//! Every construction checks its own invariants and every move sequence it
//! produces can be replayed with [`MoveSequence::replay`].

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::domination::{is_dominating, is_efficient, DominationCertificate};
use crate::graph::{vec_to_mask, Graph, GraphMetrics, Vertex};
use crate::pebbling::{Distribution, MoveSequence};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("vertex set {0:?} is not an efficient dominating set")]
    NotEfficient(Vec<Vertex>),
    #[error("vertex set {0:?} is not a dominating set")]
    NotDominating(Vec<Vertex>),
    #[error("construction invariant violated: {0}")]
    Invariant(String),
}

fn invariant(ok: bool, msg: impl FnOnce() -> String) -> Result<(), ConstructionError> {
    if ok {
        Ok(())
    } else {
        Err(ConstructionError::Invariant(msg()))
    }
}

fn is_graph_path(g: &Graph, path: &[Vertex]) -> bool {
    let simple = vec_to_mask(path).count_ones() as usize == path.len();
    simple && path.windows(2).all(|w| g.is_adjacent(w[0], w[1]))
}

/// Paths that all end at `root` and together cover every vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathSet {
    pub root: Vertex,
    /// Each path runs from its far endpoint to `root`.
    pub paths: Vec<Vec<Vertex>>,
    pub lengths: Vec<usize>,
}

impl PathSet {
    /// `Σ (2^q_i - 1) + 1`: any distribution this large puts `2^q_i`
    /// pebbles on some path `i`, and that path alone reaches the root.
    pub fn pigeonhole_bound(&self) -> u128 {
        self.lengths
            .iter()
            .map(|&q| (1u128 << q) - 1)
            .sum::<u128>()
            + 1
    }

    pub fn verify(&self, g: &Graph, metrics: &GraphMetrics) -> Result<(), ConstructionError> {
        let e = metrics.eccentricity(self.root);
        let mut covered = 0u64;
        for (p, &q) in self.paths.iter().zip(&self.lengths) {
            invariant(is_graph_path(g, p), || format!("{p:?} is not a simple path"))?;
            invariant(p.last() == Some(&self.root), || {
                format!("{p:?} does not end at root {}", self.root)
            })?;
            invariant(q + 1 == p.len() && q <= e, || {
                format!("{p:?} has length {q}, eccentricity {e}")
            })?;
            covered |= vec_to_mask(p);
        }
        invariant(covered == g.full_mask(), || "paths miss a vertex".into())?;
        invariant(self.paths.len() <= g.n() - e, || {
            format!("{} paths, more than n - e = {}", self.paths.len(), g.n() - e)
        })
    }
}

/// First path: to the smallest vertex at distance `e(root)`. Then, farthest
/// uncovered vertex first, one shortest path per still-uncovered vertex.
pub fn build_path_set(g: &Graph, metrics: &GraphMetrics, root: Vertex) -> PathSet {
    let far = metrics.farthest_from(root);
    let mut paths = vec![g.shortest_path(metrics, far, root)];
    let mut covered = vec_to_mask(&paths[0]);

    let mut rest: Vec<Vertex> = g.vertices().filter(|&v| covered & (1 << v) == 0).collect();
    rest.sort_by_key(|&v| (std::cmp::Reverse(metrics.dist(v, root)), v));
    for v in rest {
        if covered & (1 << v) != 0 {
            continue;
        }
        let p = g.shortest_path(metrics, v, root);
        covered |= vec_to_mask(&p);
        paths.push(p);
    }
    let lengths = paths.iter().map(|p| p.len() - 1).collect();
    PathSet {
        root,
        paths,
        lengths,
    }
}

/// Pushes pebbles along `path` toward its last vertex, halving from the far
/// end. Returns the steps if the last vertex ends up with a pebble.
///
/// Along a path this greedy cascade is optimal: the end receives
/// `⌊Σ D(p_i) / 2^(L - i)⌋` pebbles, so it succeeds whenever the path holds
/// at least `2^L` pebbles.
pub fn path_transport(g: &Graph, d: &Distribution, path: &[Vertex]) -> Option<MoveSequence> {
    path_transport_k(g, d, path, 1)
}

/// [`path_transport`] for `k` pebbles at the end.
pub fn path_transport_k(
    g: &Graph,
    d: &Distribution,
    path: &[Vertex],
    k: u32,
) -> Option<MoveSequence> {
    if path.is_empty() || !is_graph_path(g, path) {
        return None;
    }
    let last = path.len() - 1;
    let mut carried = 0u32;
    let mut seq = MoveSequence::new();
    for i in 0..last {
        let here = d.get(path[i]) + carried;
        carried = here / 2;
        for _ in 0..carried {
            seq.push(path[i], path[i + 1]);
        }
    }
    (d.get(path[last]) + carried >= k).then_some(seq)
}

/// Shortest paths of length `e(root)` from distinct far vertices to `root`,
/// pairwise sharing only `root`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootDisjointPathSystem {
    pub root: Vertex,
    pub eccentricity: usize,
    /// `⌊(n - 1) / e(root)⌋`; 1 by convention on the singleton graph.
    pub capacity: usize,
    pub terminals: Vec<Vertex>,
    /// Each path runs from its terminal to `root`.
    pub paths: Vec<Vec<Vertex>>,
}

impl RootDisjointPathSystem {
    pub fn k(&self) -> usize {
        self.paths.len()
    }

    pub fn verify(&self, g: &Graph, metrics: &GraphMetrics) -> Result<(), ConstructionError> {
        let e = self.eccentricity;
        invariant(!self.paths.is_empty(), || "empty path system".into())?;
        invariant(self.k() <= self.capacity, || {
            format!("k = {} exceeds capacity {}", self.k(), self.capacity)
        })?;
        let mut used = 0u64;
        for (t, p) in self.terminals.iter().zip(&self.paths) {
            invariant(metrics.dist(*t, self.root) == e, || {
                format!("terminal {t} not at distance {e}")
            })?;
            invariant(
                is_graph_path(g, p) && p.len() == e + 1 && p[0] == *t && p[e] == self.root,
                || format!("{p:?} is not a length-{e} path from {t} to the root"),
            )?;
            let inner = vec_to_mask(&p[..e]);
            invariant(used & inner == 0, || format!("{p:?} overlaps another path"))?;
            used |= inner;
        }
        Ok(())
    }
}

/// A far terminal with its shortest paths to the root, each paired with the
/// mask of its vertices other than the root.
type TerminalPaths = (Vertex, Vec<(Vec<Vertex>, u64)>);

/// Exhaustive search for the largest system. Among maximum systems the one
/// found first in (terminal ascending, path lexicographic, take-before-skip)
/// order is returned.
pub fn build_root_disjoint_system(
    g: &Graph,
    metrics: &GraphMetrics,
    root: Vertex,
) -> RootDisjointPathSystem {
    let e = metrics.eccentricity(root);
    if e == 0 {
        return RootDisjointPathSystem {
            root,
            eccentricity: 0,
            capacity: 1,
            terminals: vec![root],
            paths: vec![vec![root]],
        };
    }
    let capacity = (g.n() - 1) / e;
    let options: Vec<TerminalPaths> = g
        .vertices()
        .filter(|&t| metrics.dist(t, root) == e)
        .map(|t| {
            let paths = g
                .all_shortest_paths(metrics, t, root)
                .into_iter()
                .map(|p| {
                    let inner = vec_to_mask(&p[..e]);
                    (p, inner)
                })
                .collect();
            (t, paths)
        })
        .collect();

    struct Search<'a> {
        options: &'a [TerminalPaths],
        capacity: usize,
        chosen: Vec<(usize, usize)>,
        best: Vec<(usize, usize)>,
    }
    impl Search<'_> {
        fn run(&mut self, idx: usize, used: u64) {
            if self.chosen.len() > self.best.len() {
                self.best = self.chosen.clone();
            }
            if self.best.len() == self.capacity
                || idx == self.options.len()
                || self.chosen.len() + (self.options.len() - idx) <= self.best.len()
            {
                return;
            }
            for (j, (_, inner)) in self.options[idx].1.iter().enumerate() {
                if used & inner == 0 {
                    self.chosen.push((idx, j));
                    self.run(idx + 1, used | inner);
                    self.chosen.pop();
                }
            }
            self.run(idx + 1, used);
        }
    }
    let mut search = Search {
        options: &options,
        capacity,
        chosen: Vec::new(),
        best: Vec::new(),
    };
    search.run(0, 0);

    let (terminals, paths) = search
        .best
        .iter()
        .map(|&(i, j)| (options[i].0, options[i].1[j].0.clone()))
        .unzip();
    RootDisjointPathSystem {
        root,
        eccentricity: e,
        capacity,
        terminals,
        paths,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DecompositionKind {
    /// Closed neighborhoods of an efficient dominating set.
    Efficient,
    /// Cells around a general dominating set, each with a connector toward a root.
    Dominating,
}

/// Cells `A_i` around centers `s_i`; every cell lies inside `N[s_i]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub kind: DecompositionKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub root: Option<Vertex>,
    pub centers: Vec<Vertex>,
    /// `w_i`: the vertex before `s_i` on the chosen shortest path from the root.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub connectors: Option<Vec<Vertex>>,
    pub cells: Vec<Vec<Vertex>>,
}

impl Decomposition {
    /// `Σ (2^(d+1) + |A_i| - 4) + 1`: past this size some cell holds
    /// `2^(d+1) + |A_i| - 3` pebbles, enough for `2^(d-1)` anywhere in it.
    pub fn pigeonhole_bound(&self, diameter: usize) -> u128 {
        if diameter == 0 {
            return 1;
        }
        let p = 1u128 << (diameter + 1);
        self.cells
            .iter()
            .map(|c| p + c.len() as u128 - 4)
            .sum::<u128>()
            + 1
    }

    pub fn cell_sizes(&self) -> Vec<usize> {
        self.cells.iter().map(Vec::len).collect()
    }

    pub fn verify(&self, g: &Graph, metrics: &GraphMetrics) -> Result<(), ConstructionError> {
        let mut union = 0u64;
        for (s, cell) in self.centers.iter().zip(&self.cells) {
            invariant(cell.contains(s), || format!("center {s} missing from {cell:?}"))?;
            invariant(cell.iter().all(|&v| v == *s || g.is_adjacent(v, *s)), || {
                format!("{cell:?} is not inside N[{s}]")
            })?;
            invariant(induced_diameter_at_most_two(g, cell), || {
                format!("{cell:?} has diameter above 2")
            })?;
            union |= vec_to_mask(cell);
        }
        invariant(union == g.full_mask(), || "cells do not cover V".into())?;
        let total: usize = self.cells.iter().map(Vec::len).sum();
        match self.kind {
            DecompositionKind::Efficient => {
                invariant(total == g.n(), || format!("cell sizes sum to {total}, not n"))
            }
            DecompositionKind::Dominating => {
                let gamma = self.centers.len();
                invariant(total <= g.n() + gamma, || {
                    format!("cell sizes sum to {total} > n + γ = {}", g.n() + gamma)
                })?;
                let root = self.root.ok_or_else(|| {
                    ConstructionError::Invariant("dominating decomposition without root".into())
                })?;
                let d = metrics.diameter();
                let conn = self.connectors.as_deref().unwrap_or(&[]);
                invariant(conn.len() == gamma, || "one connector per center".into())?;
                for (&s, &w) in self.centers.iter().zip(conn) {
                    let ok = if metrics.dist(root, s) >= 2 {
                        g.is_adjacent(w, s)
                            && metrics.dist(root, w) + 1 == metrics.dist(root, s)
                            && metrics.dist(root, w) < d
                    } else {
                        w == s
                    };
                    invariant(ok, || format!("connector {w} for center {s} is misplaced"))?;
                }
                Ok(())
            }
        }
    }
}

fn induced_diameter_at_most_two(g: &Graph, cell: &[Vertex]) -> bool {
    let m = vec_to_mask(cell);
    cell.iter().enumerate().all(|(i, &u)| {
        cell[i + 1..].iter().all(|&v| {
            g.is_adjacent(u, v) || g.neighbor_mask(u) & g.neighbor_mask(v) & m != 0
        })
    })
}

/// Cells are the closed neighborhoods of the members of an efficient dominating set.
pub fn build_efficient_decomposition(
    g: &Graph,
    cert: &DominationCertificate,
) -> Result<Decomposition, ConstructionError> {
    if !is_efficient(g, &cert.set) {
        return Err(ConstructionError::NotEfficient(cert.set.clone()));
    }
    let cells = cert
        .set
        .iter()
        .map(|&s| crate::graph::mask_to_vec(g.closed_mask(s)))
        .collect();
    let dec = Decomposition {
        kind: DecompositionKind::Efficient,
        root: None,
        centers: cert.set.clone(),
        connectors: None,
        cells,
    };
    dec.verify(g, &g.metrics())?;
    Ok(dec)
}

/// `A_i = (N'(s_i) \ ∪_{j<i} N'(s_j)) ∪ {w_i, s_i}`, where `N'(x)` is the set
/// of neighbors of `x` outside the dominating set and `w_i` precedes `s_i` on
/// the lexicographically smallest shortest path from `root` (`w_i = s_i` when
/// `s_i` is the root or adjacent to it).
pub fn build_dominating_decomposition(
    g: &Graph,
    root: Vertex,
    cert: &DominationCertificate,
) -> Result<Decomposition, ConstructionError> {
    if !is_dominating(g, &cert.set) {
        return Err(ConstructionError::NotDominating(cert.set.clone()));
    }
    let metrics = g.metrics();
    let s_mask = vec_to_mask(&cert.set);
    let mut seen = 0u64;
    let mut connectors = Vec::with_capacity(cert.set.len());
    let mut cells = Vec::with_capacity(cert.set.len());
    for &s in &cert.set {
        let w = if metrics.dist(root, s) <= 1 {
            s
        } else {
            let p = g.shortest_path(&metrics, root, s);
            p[p.len() - 2]
        };
        let outside = g.neighbor_mask(s) & !s_mask;
        let cell = (outside & !seen) | (1 << w) | (1 << s);
        seen |= outside;
        connectors.push(w);
        cells.push(crate::graph::mask_to_vec(cell));
    }
    let dec = Decomposition {
        kind: DecompositionKind::Dominating,
        root: Some(root),
        centers: cert.set.clone(),
        connectors: Some(connectors),
        cells,
    };
    dec.verify(g, &metrics)?;
    Ok(dec)
}

/// Greedy `k`-pebbling inside a star: pairs from leaves go to the center, then
/// pairs from the center go to the target. Only center-leaf edges are used.
///
/// Moving pebbles off the target never helps, so on a star this reaches the
/// optimum `D(t) + ⌊(D(c) + Σ_{l≠t} ⌊D(l)/2⌋) / 2⌋` for a leaf target.
pub fn star_k_pebble(
    g: &Graph,
    d: &Distribution,
    center: Vertex,
    leaves: &[Vertex],
    target: Vertex,
    k: u32,
) -> Option<MoveSequence> {
    if leaves.iter().any(|&l| !g.is_adjacent(center, l))
        || (target != center && !leaves.contains(&target))
    {
        return None;
    }
    let mut cur = d.clone();
    let mut seq = MoveSequence::new();
    let mut step = |cur: &mut Distribution, from: Vertex, to: Vertex| {
        let mut c = cur.counts().to_vec();
        c[from] -= 2;
        c[to] += 1;
        *cur = Distribution::new(c);
        seq.push(from, to);
    };
    if cur.get(target) >= k {
        return Some(MoveSequence::new());
    }
    let needed_at_center = if target == center {
        k
    } else {
        2 * (k - cur.get(target))
    };
    for &l in leaves.iter().filter(|&&l| l != target) {
        while cur.get(l) >= 2 && cur.get(center) < needed_at_center {
            step(&mut cur, l, center);
        }
    }
    if target != center {
        while cur.get(target) < k && cur.get(center) >= 2 {
            step(&mut cur, center, target);
        }
    }
    (cur.get(target) >= k).then_some(seq)
}

/// Runs the cell-based pigeonhole argument on a concrete distribution:
/// find a cell holding `2^(d+1) + |A_i| - 3` pebbles, gather `2^dist` pebbles
/// on the cell vertex nearest the root (the connector for dominating
/// decompositions), and walk them down a shortest path.
pub fn decomposition_strategy(
    g: &Graph,
    metrics: &GraphMetrics,
    dec: &Decomposition,
    d: &Distribution,
    root: Vertex,
) -> Option<MoveSequence> {
    if d.get(root) >= 1 {
        return Some(MoveSequence::new());
    }
    let diam = metrics.diameter();
    let threshold = |cell: &[Vertex]| (1u32 << (diam + 1)) + cell.len() as u32 - 3;
    let i = dec
        .cells
        .iter()
        .position(|cell| cell.iter().map(|&v| d.get(v)).sum::<u32>() >= threshold(cell))?;
    let cell = &dec.cells[i];
    let center = dec.centers[i];

    let entry = if cell.contains(&root) {
        root
    } else {
        match (&dec.kind, &dec.connectors) {
            (DecompositionKind::Dominating, Some(conn)) => conn[i],
            _ => *cell
                .iter()
                .min_by_key(|&&v| (metrics.dist(v, root), v))
                .unwrap(),
        }
    };
    let need = 1u32 << metrics.dist(entry, root);
    let leaves: Vec<Vertex> = cell.iter().copied().filter(|&v| v != center).collect();
    let mut seq = star_k_pebble(g, d, center, &leaves, entry, need)?;
    let mid = seq.replay(g, d).ok()?;
    let tail = path_transport(g, &mid, &g.shortest_path(metrics, entry, root))?;
    seq.0.extend(tail.0);
    Some(seq)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domination::{find_efficient_dominating_set, min_dominating_set, DominationKind};
    use crate::family::generate;

    fn setup(spec: &str) -> (Graph, GraphMetrics) {
        let g = generate(spec).unwrap();
        let m = g.metrics();
        (g, m)
    }

    #[test]
    fn path_sets() {
        let (g, m) = setup("path:5");
        let ps = build_path_set(&g, &m, 4);
        assert_eq!(ps.paths, vec![vec![0, 1, 2, 3, 4]]);
        ps.verify(&g, &m).unwrap();

        let (g, m) = setup("complete:4");
        let ps = build_path_set(&g, &m, 0);
        assert_eq!(ps.paths.len(), 3);
        assert_eq!(ps.lengths, vec![1, 1, 1]);
        ps.verify(&g, &m).unwrap();
        assert_eq!(ps.pigeonhole_bound(), 4);

        let (g, m) = setup("star:3");
        let ps = build_path_set(&g, &m, 1);
        assert_eq!(ps.paths, vec![vec![2, 0, 1], vec![3, 0, 1]]);
        ps.verify(&g, &m).unwrap();
        assert!(ps.paths.len() <= 4 - 2);
    }

    #[test]
    fn transport_along_a_path() {
        let g = generate("path:3").unwrap();
        let d = Distribution::new(vec![4, 0, 0]);
        let seq = path_transport(&g, &d, &[0, 1, 2]).unwrap();
        assert!(seq.achieves(&g, &d, 2, 1));

        let d = Distribution::new(vec![2, 1, 0]);
        let seq = path_transport(&g, &d, &[0, 1, 2]).unwrap();
        assert_eq!(seq.len(), 2);
        assert!(seq.achieves(&g, &d, 2, 1));

        assert!(path_transport(&g, &Distribution::new(vec![3, 0, 0]), &[0, 1, 2]).is_none());
        assert!(path_transport(&g, &d, &[0, 2]).is_none());
    }

    #[test]
    fn disjoint_systems() {
        let (g, m) = setup("star:4");
        let sys = build_root_disjoint_system(&g, &m, 0);
        assert_eq!(sys.k(), 4);
        assert_eq!(sys.capacity, 4);
        sys.verify(&g, &m).unwrap();

        let (g, m) = setup("path:5");
        let sys = build_root_disjoint_system(&g, &m, 4);
        assert_eq!(sys.paths, vec![vec![0, 1, 2, 3, 4]]);

        // Both length-3 paths end at the single antipode.
        let (g, m) = setup("cycle:6");
        let sys = build_root_disjoint_system(&g, &m, 0);
        assert_eq!((sys.k(), sys.capacity), (1, 1));
        assert_eq!(sys.terminals, vec![3]);
        sys.verify(&g, &m).unwrap();

        let (g, m) = setup("complete:1");
        let sys = build_root_disjoint_system(&g, &m, 0);
        assert_eq!(sys.k(), 1);
    }

    #[test]
    fn efficient_cells() {
        let g = generate("star:4").unwrap();
        let cert = find_efficient_dominating_set(&g).unwrap();
        let dec = build_efficient_decomposition(&g, &cert).unwrap();
        assert_eq!(dec.cells, vec![vec![0, 1, 2, 3, 4]]);

        let g = generate("path:3").unwrap();
        let cert = find_efficient_dominating_set(&g).unwrap();
        assert_eq!(build_efficient_decomposition(&g, &cert).unwrap().cells, vec![vec![0, 1, 2]]);

        let g = generate("path:6").unwrap();
        let cert = find_efficient_dominating_set(&g).unwrap();
        let dec = build_efficient_decomposition(&g, &cert).unwrap();
        assert_eq!(dec.cells, vec![vec![0, 1, 2], vec![3, 4, 5]]);

        let c4 = generate("cycle:4").unwrap();
        let bogus = DominationCertificate {
            set: vec![0, 2],
            kind: DominationKind::Efficient,
            size: 2,
        };
        assert!(matches!(
            build_efficient_decomposition(&c4, &bogus),
            Err(ConstructionError::NotEfficient(_))
        ));
    }

    #[test]
    fn dominating_cells() {
        let g = generate("doublestar:4").unwrap();
        let cert = min_dominating_set(&g);
        let dec = build_dominating_decomposition(&g, 2, &cert).unwrap();
        assert_eq!(dec.centers, vec![0, 1]);
        assert_eq!(dec.connectors, Some(vec![0, 0]));
        assert_eq!(dec.cells, vec![vec![0, 2, 3], vec![0, 1, 4, 5]]);
        assert!(dec.cell_sizes().iter().sum::<usize>() <= 6 + 2);

        let k4 = generate("complete:4").unwrap();
        let dec = build_dominating_decomposition(&k4, 0, &min_dominating_set(&k4)).unwrap();
        assert_eq!(dec.cells, vec![vec![0, 1, 2, 3]]);
        assert_eq!(dec.connectors, Some(vec![0]));

        // γ(P_4) = 2 with {0, 2}; the root sits at 0.
        let p4 = generate("path:4").unwrap();
        let cert = min_dominating_set(&p4);
        let dec = build_dominating_decomposition(&p4, 0, &cert).unwrap();
        assert_eq!(dec.connectors, Some(vec![0, 1]));
        assert_eq!(dec.cells, vec![vec![0, 1], vec![1, 2, 3]]);

        let not_dom = DominationCertificate {
            set: vec![0],
            kind: DominationKind::Dominating,
            size: 1,
        };
        assert!(matches!(
            build_dominating_decomposition(&p4, 0, &not_dom),
            Err(ConstructionError::NotDominating(_))
        ));
    }

    #[test]
    fn star_greedy() {
        let g = generate("star:3").unwrap();
        let d = Distribution::new(vec![0, 4, 1, 2]);
        let seq = star_k_pebble(&g, &d, 0, &[1, 2, 3], 2, 2).unwrap();
        assert!(seq.achieves(&g, &d, 2, 2));
        assert!(star_k_pebble(&g, &d, 0, &[1, 2, 3], 2, 3).is_none());
        let seq = star_k_pebble(&g, &d, 0, &[1, 2, 3], 0, 3).unwrap();
        assert!(seq.achieves(&g, &d, 0, 3));
    }
}
