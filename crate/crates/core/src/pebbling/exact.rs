//! Exact rooted and global pebbling numbers.
//!
//! Unsolvable distributions are closed downward: removing a pebble from an
//! unsolvable distribution leaves it unsolvable. So the unsolvable
//! distributions of size `N` are exactly the one-pebble extensions of size
//! `N - 1` unsolvable distributions whose every one-pebble reduction is also
//! unsolvable. The search walks these layers upward from the empty
//! distribution; the pebbling number is the first size whose layer is empty.

use rayon::prelude::*;
use rustc_hash::FxHashSet;
use serde::{Deserialize, Serialize};

use super::solver::{to_counts, to_distribution, Counts, Exhausted, RootedSolver, MAX_COUNT};
use super::{Distribution, MoveSequence, SearchBudget, SolverError};
use crate::graph::{Graph, Vertex};

/// A solvable distribution with the steps that solve it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub root: Vertex,
    pub k: u32,
    pub distribution: Distribution,
    pub moves: MoveSequence,
}

impl Certificate {
    pub fn replays(&self, g: &Graph) -> bool {
        self.moves.achieves(g, &self.distribution, self.root, self.k)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactResult {
    pub value: u32,
    pub k: u32,
    /// Root attaining the value; the smallest such root for global numbers.
    pub root: Vertex,
    /// Unsolvable for `root`, of size `value - 1`.
    pub witness: Distribution,
    /// The witness plus one pebble on each vertex in turn, each solved for `root`.
    pub spot_checks: Vec<Certificate>,
    /// Rooted values by root; present for global numbers.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub per_root: Option<Vec<u32>>,
    pub explored_configs: u64,
}

struct RootOutcome {
    value: u32,
    witness: Counts,
    explored: u64,
}

/// Smallest `N` such that every distribution of size `N` can move `k`
/// pebbles onto `root`.
pub fn rooted_pebbling_number(
    g: &Graph,
    root: Vertex,
    k: u32,
    budget: &SearchBudget,
) -> Result<ExactResult, SolverError> {
    check_inputs(g, k, budget)?;
    if root >= g.n() {
        return Err(SolverError::InvalidInput(format!(
            "root {root} out of range for n = {}",
            g.n()
        )));
    }
    let outcome = search_root(g, root, k, budget)?;
    Ok(finish(g, root, k, outcome, None))
}

/// `max` over all roots of [`rooted_pebbling_number`]; roots are searched in
/// parallel on the current rayon pool.
pub fn pebbling_number(
    g: &Graph,
    k: u32,
    budget: &SearchBudget,
) -> Result<ExactResult, SolverError> {
    check_inputs(g, k, budget)?;
    let outcomes: Vec<Result<RootOutcome, SolverError>> = g
        .vertices()
        .into_par_iter()
        .map(|r| search_root(g, r, k, budget))
        .collect();

    if outcomes.iter().any(Result::is_err) {
        let lower = outcomes
            .iter()
            .map(|o| match o {
                Ok(r) => r.value,
                Err(SolverError::BudgetExceeded { lower, .. }) => *lower,
                Err(_) => 0,
            })
            .max()
            .unwrap_or(1);
        let err = outcomes.into_iter().find_map(Result::err).unwrap();
        return Err(match err {
            SolverError::BudgetExceeded { reason, .. } => SolverError::BudgetExceeded {
                reason,
                lower,
                upper: global_upper(g, k),
            },
            other => other,
        });
    }

    let outcomes: Vec<RootOutcome> = outcomes.into_iter().map(Result::unwrap).collect();
    let per_root: Vec<u32> = outcomes.iter().map(|o| o.value).collect();
    let explored = outcomes.iter().map(|o| o.explored).sum();
    let value = *per_root.iter().max().unwrap();
    let root = per_root.iter().position(|&v| v == value).unwrap();
    let mut worst = outcomes.into_iter().nth(root).unwrap();
    worst.explored = explored;
    Ok(finish(g, root, k, worst, Some(per_root)))
}

fn check_inputs(g: &Graph, k: u32, budget: &SearchBudget) -> Result<(), SolverError> {
    if k == 0 {
        return Err(SolverError::InvalidInput("k must be at least 1".into()));
    }
    if g.n() > budget.max_vertices {
        return Err(SolverError::BudgetExceeded {
            reason: format!("{} vertices exceeds max_vertices {}", g.n(), budget.max_vertices),
            lower: 1,
            upper: global_upper(g, k),
        });
    }
    Ok(())
}

fn finish(
    g: &Graph,
    root: Vertex,
    k: u32,
    outcome: RootOutcome,
    per_root: Option<Vec<u32>>,
) -> ExactResult {
    let witness = to_distribution(&outcome.witness);
    let mut solver = RootedSolver::new(g, root, k);
    let spot_checks = g
        .vertices()
        .map(|v| {
            let distribution = witness.with_extra(v);
            let moves = solver
                .solve_with_certificate(&distribution)
                .expect("unbudgeted")
                .expect("every distribution of the pebbling number's size is solvable");
            Certificate {
                root,
                k,
                distribution,
                moves,
            }
        })
        .collect();
    ExactResult {
        value: outcome.value,
        k,
        root,
        witness,
        spot_checks,
        per_root,
        explored_configs: outcome.explored,
    }
}

fn search_root(
    g: &Graph,
    root: Vertex,
    k: u32,
    budget: &SearchBudget,
) -> Result<RootOutcome, SolverError> {
    let n = g.n();
    let max_pebbles = budget.max_pebbles.min(MAX_COUNT);
    let exceeded = |reason: String, lower: u32| SolverError::BudgetExceeded {
        reason,
        lower,
        upper: rooted_upper(g, root, k),
    };
    let mut solver = RootedSolver::new(g, root, k).with_max_configs(budget.max_configs);

    let zero = to_counts(&Distribution::zeros(n)).unwrap();
    let mut level: Vec<Counts> = vec![zero.clone()];
    let mut members: FxHashSet<Counts> = FxHashSet::default();
    members.insert(zero);
    let mut size = 0u32;
    loop {
        size += 1;
        if size > max_pebbles {
            return Err(exceeded(
                format!("pebble count would exceed max_pebbles {max_pebbles}"),
                size,
            ));
        }

        let mut candidates: FxHashSet<Counts> = FxHashSet::default();
        let mut c = vec![0u16; n];
        for d in &level {
            for u in 0..n {
                c.copy_from_slice(d);
                c[u] += 1;
                if candidates.contains(c.as_slice()) {
                    continue;
                }
                if all_reductions_in(&mut c, &members) {
                    candidates.insert(c.as_slice().into());
                }
            }
        }
        let mut candidates: Vec<Counts> = candidates.into_iter().collect();
        candidates.sort_unstable();

        let mut next = Vec::new();
        for cand in candidates {
            match solver.solve(&cand) {
                Ok(true) => {}
                Ok(false) => next.push(cand),
                Err(Exhausted) => {
                    return Err(exceeded(
                        format!("explored more than max_configs {}", budget.max_configs),
                        size,
                    ))
                }
            }
        }
        if next.is_empty() {
            return Ok(RootOutcome {
                value: size,
                witness: level.swap_remove(0),
                explored: solver.explored(),
            });
        }
        members = next.iter().cloned().collect();
        level = next;
    }
}

fn all_reductions_in(c: &mut [u16], members: &FxHashSet<Counts>) -> bool {
    for w in 0..c.len() {
        if c[w] == 0 {
            continue;
        }
        c[w] -= 1;
        let hit = members.contains(&*c);
        c[w] += 1;
        if !hit {
            return false;
        }
    }
    true
}

/// Pigeonhole upper bound used to bracket aborted rooted searches: with
/// `k = 1` the path-set count `(n - e)(2^e - 1) + 1`, otherwise
/// `(n - 1)(k 2^e - 1) + k`.
fn rooted_upper(g: &Graph, root: Vertex, k: u32) -> u128 {
    let n = g.n() as u128;
    let e = *g.bfs(root).iter().max().unwrap() as u32;
    let pow = 1u128.checked_shl(e).unwrap_or(u128::MAX);
    if k == 1 {
        (n - e as u128).saturating_mul(pow - 1).saturating_add(1)
    } else {
        let k = k as u128;
        (n - 1)
            .saturating_mul(k.saturating_mul(pow) - 1)
            .saturating_add(k)
    }
}

fn global_upper(g: &Graph, k: u32) -> u128 {
    g.vertices().map(|r| rooted_upper(g, r, k)).max().unwrap()
}
