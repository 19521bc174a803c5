//! Exact dominating-set search and the perfect / independent / efficient predicates.

use serde::{Deserialize, Serialize};

use crate::graph::{mask_to_vec, vec_to_mask, Graph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DominationKind {
    Dominating,
    Perfect,
    Independent,
    Efficient,
}

/// A vertex set together with the property it was certified for.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DominationCertificate {
    /// Sorted ascending.
    pub set: Vec<Vertex>,
    pub kind: DominationKind,
    pub size: usize,
}

impl DominationCertificate {
    fn new(mask: u64, kind: DominationKind) -> Self {
        let set = mask_to_vec(mask);
        let size = set.len();
        DominationCertificate { set, kind, size }
    }

    /// Re-checks the certified property against `g`.
    pub fn holds(&self, g: &Graph) -> bool {
        let ok = match self.kind {
            DominationKind::Dominating => is_dominating(g, &self.set),
            DominationKind::Perfect => is_perfect(g, &self.set),
            DominationKind::Independent => is_independent(g, &self.set),
            DominationKind::Efficient => is_efficient(g, &self.set),
        };
        ok && self.size == self.set.len()
    }
}

fn covered(g: &Graph, s: u64) -> u64 {
    mask_to_vec(s)
        .into_iter()
        .fold(0, |acc, v| acc | g.closed_mask(v))
}

fn dominating_mask(g: &Graph, s: u64) -> bool {
    covered(g, s) == g.full_mask()
}

/// Every vertex outside the set has exactly one neighbor inside it.
fn perfect_mask(g: &Graph, s: u64) -> bool {
    g.vertices()
        .filter(|&v| s & (1 << v) == 0)
        .all(|v| (g.neighbor_mask(v) & s).count_ones() == 1)
}

fn independent_mask(g: &Graph, s: u64) -> bool {
    mask_to_vec(s)
        .into_iter()
        .all(|v| g.neighbor_mask(v) & s == 0)
}

pub fn is_dominating(g: &Graph, s: &[Vertex]) -> bool {
    dominating_mask(g, vec_to_mask(s))
}

/// Every vertex is in `s` or adjacent to exactly one member of `s`.
pub fn is_perfect(g: &Graph, s: &[Vertex]) -> bool {
    let m = vec_to_mask(s);
    perfect_mask(g, m) && (m != 0 || g.n() == 0)
}

pub fn is_independent(g: &Graph, s: &[Vertex]) -> bool {
    independent_mask(g, vec_to_mask(s))
}

pub fn is_efficient(g: &Graph, s: &[Vertex]) -> bool {
    let m = vec_to_mask(s);
    m != 0 && perfect_mask(g, m) && independent_mask(g, m)
}

/// Visits `size`-subsets of `0..n` in lexicographic order until `f` returns true.
fn first_subset(n: usize, size: usize, mut f: impl FnMut(u64) -> bool) -> Option<u64> {
    fn rec(
        start: usize,
        n: usize,
        left: usize,
        acc: u64,
        f: &mut dyn FnMut(u64) -> bool,
    ) -> Option<u64> {
        if left == 0 {
            return f(acc).then_some(acc);
        }
        for v in start..=n - left {
            if let Some(m) = rec(v + 1, n, left - 1, acc | (1 << v), f) {
                return Some(m);
            }
        }
        None
    }
    if size > n {
        return None;
    }
    rec(0, n, size, 0, &mut f)
}

/// A minimum dominating set; among minimum sets, the lexicographically smallest.
pub fn min_dominating_set(g: &Graph) -> DominationCertificate {
    let n = g.n();
    let max_closed = g.vertices().map(|v| g.degree(v) + 1).max().unwrap_or(1);
    for size in 1..=n {
        // s vertices cover at most s * (Δ + 1) vertices.
        if size * max_closed < n {
            continue;
        }
        if let Some(m) = first_subset(n, size, |m| dominating_mask(g, m)) {
            return DominationCertificate::new(m, DominationKind::Dominating);
        }
    }
    unreachable!("V dominates itself")
}

/// The domination number γ(G).
pub fn domination_number(g: &Graph) -> usize {
    min_dominating_set(g).size
}

/// An efficient dominating set if the graph has one: a set whose closed
/// neighborhoods partition V. Same search order as [`min_dominating_set`].
pub fn find_efficient_dominating_set(g: &Graph) -> Option<DominationCertificate> {
    let n = g.n();
    let full = g.full_mask();
    for size in 1..=n {
        let found = first_subset(n, size, |m| {
            let mut seen = 0u64;
            for v in mask_to_vec(m) {
                let c = g.closed_mask(v);
                if seen & c != 0 {
                    return false;
                }
                seen |= c;
            }
            seen == full
        });
        if let Some(m) = found {
            return Some(DominationCertificate::new(m, DominationKind::Efficient));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::generate;

    #[test]
    fn predicates_on_small_graphs() {
        let k4 = generate("complete:4").unwrap();
        assert!(is_dominating(&k4, &[0]));
        assert!(is_efficient(&k4, &[0]));

        let p4 = generate("path:4").unwrap();
        assert!(is_dominating(&p4, &[1, 2]));
        assert!(!is_independent(&p4, &[1, 2]));

        // Vertices 1 and 3 each see both members.
        let c4 = generate("cycle:4").unwrap();
        assert!(is_dominating(&c4, &[0, 2]));
        assert!(!is_perfect(&c4, &[0, 2]));
        assert!(is_independent(&c4, &[0, 2]));
    }

    #[test]
    fn minimum_dominating_sets() {
        let star = min_dominating_set(&generate("star:5").unwrap());
        assert_eq!(star.set, vec![0]);

        assert_eq!(domination_number(&generate("path:4").unwrap()), 2);
        // lexicographically first pair dominating 0-1-2-3
        assert_eq!(min_dominating_set(&generate("path:4").unwrap()).set, vec![0, 2]);

        let ds = min_dominating_set(&generate("doublestar:4").unwrap());
        assert_eq!(ds.set, vec![0, 1]);
        assert_eq!(ds.size, 2);
        assert_eq!(min_dominating_set(&generate("complete:1").unwrap()).set, vec![0]);
    }

    #[test]
    fn efficient_sets() {
        assert_eq!(
            find_efficient_dominating_set(&generate("star:4").unwrap()).unwrap().set,
            vec![0]
        );
        assert_eq!(find_efficient_dominating_set(&generate("cycle:4").unwrap()), None);
        assert_eq!(
            find_efficient_dominating_set(&generate("path:3").unwrap()).unwrap().set,
            vec![1]
        );
        assert_eq!(
            find_efficient_dominating_set(&generate("path:6").unwrap()).unwrap().set,
            vec![1, 4]
        );
        // Double stars: no single vertex covers, and the two centers overlap.
        assert_eq!(
            find_efficient_dominating_set(&generate("doublestar:4").unwrap()),
            None
        );
    }

    #[test]
    fn certificates_recheck() {
        let g = generate("corona:cycle:4").unwrap();
        let ds = min_dominating_set(&g);
        assert!(ds.holds(&g));
        assert_eq!(ds.size, 4);
        // the pendant leaves partition V by their closed neighborhoods
        let eff = find_efficient_dominating_set(&g).unwrap();
        assert_eq!(eff.set, vec![4, 5, 6, 7]);
        assert!(eff.holds(&g));
        assert_eq!(min_dominating_set(&g), ds);
    }
}
