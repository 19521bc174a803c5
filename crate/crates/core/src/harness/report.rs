use std::collections::BTreeMap;
use std::time::Instant;

use super::checks::{self, VerifyOptions, VerifyOutcome};
use super::{BoundReport, Check, Constructions, ExactSection, GraphSource, HarnessError};
use crate::bounds::{all_bounds, best_bound, comparison_predicates, star_k_pebbling_number};
use crate::constructions::{
    build_efficient_decomposition, build_dominating_decomposition, build_path_set,
    build_root_disjoint_system,
};
use crate::domination::{find_efficient_dominating_set, min_dominating_set};
use crate::family::Family;
use crate::graph::{Graph, GraphMetrics, Vertex};
use crate::pebbling::{
    is_k_solvable, pebbling_number, rooted_pebbling_number, SearchBudget,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExactOptions {
    pub root: Option<Vertex>,
    pub k: u32,
    pub budget: SearchBudget,
}

impl Default for ExactOptions {
    fn default() -> Self {
        ExactOptions {
            root: None,
            k: 1,
            budget: SearchBudget::default(),
        }
    }
}

pub(crate) struct Timer {
    phases: BTreeMap<String, f64>,
    last: Instant,
}

impl Timer {
    pub(crate) fn start() -> Self {
        Timer {
            phases: BTreeMap::new(),
            last: Instant::now(),
        }
    }

    pub(crate) fn lap(&mut self, phase: &str) {
        let now = Instant::now();
        let ms = (now - self.last).as_secs_f64() * 1e3;
        *self.phases.entry(phase.to_string()).or_default() += ms;
        self.last = now;
    }

    pub(crate) fn into_map(self) -> BTreeMap<String, f64> {
        self.phases
    }
}

/// Metrics, domination data, every bound and predicate, and the constructions.
pub(crate) fn analyze(
    id: String,
    g: &Graph,
    timer: &mut Timer,
) -> Result<(GraphMetrics, BoundReport), HarnessError> {
    let metrics = g.metrics();
    let n = g.n() as u32;
    let d = metrics.diameter() as u32;
    timer.lap("metrics");

    let dominating_set = min_dominating_set(g);
    let efficient_set = find_efficient_dominating_set(g);
    let gamma = dominating_set.size as u32;
    let gamma_eff = efficient_set.as_ref().map(|c| c.size as u32);
    timer.lap("domination");

    let bounds = all_bounds(n, d, gamma, gamma_eff)?;
    let best = best_bound(&bounds);
    let predicates = if n >= 2 {
        Some(comparison_predicates(n, d, gamma, gamma_eff)?)
    } else {
        None
    };
    timer.lap("bounds");

    let constructions = Constructions {
        path_sets: g.vertices().map(|r| build_path_set(g, &metrics, r)).collect(),
        disjoint_systems: g
            .vertices()
            .map(|r| build_root_disjoint_system(g, &metrics, r))
            .collect(),
        efficient_decomposition: efficient_set
            .as_ref()
            .map(|c| build_efficient_decomposition(g, c))
            .transpose()?,
        dominating_decompositions: g
            .vertices()
            .map(|r| build_dominating_decomposition(g, r, &dominating_set))
            .collect::<Result<_, _>>()?,
    };
    timer.lap("constructions");

    let report = BoundReport {
        graph_id: id,
        n,
        d,
        edges: g.edge_count(),
        eccentricities: metrics.eccentricities().to_vec(),
        gamma,
        gamma_eff,
        dominating_set,
        efficient_set,
        bounds,
        best_bound: best,
        predicates,
        constructions,
        exact: None,
        checks: Vec::new(),
        notes: Vec::new(),
        timing: BTreeMap::new(),
    };
    Ok((metrics, report))
}

/// Invariants, domination, all bounds, predicates and constructions; no exact search.
pub fn cmd_bounds(source: &GraphSource) -> Result<BoundReport, HarnessError> {
    let g = source.load()?;
    let mut timer = Timer::start();
    let (metrics, mut report) = analyze(source.id(), &g, &mut timer)?;
    report.checks = checks::static_checks(&g, &metrics, &report);
    timer.lap("checks");
    report.timing = timer.into_map();
    Ok(report)
}

/// [`cmd_bounds`] plus an exact pebbling number: global, or rooted when
/// `opts.root` is set, for `opts.k` target pebbles.
pub fn cmd_exact(source: &GraphSource, opts: &ExactOptions) -> Result<BoundReport, HarnessError> {
    let g = source.load()?;
    if let Some(r) = opts.root {
        if r >= g.n() {
            return Err(HarnessError::Invalid(format!(
                "root {r} out of range for {} vertices",
                g.n()
            )));
        }
    }
    if opts.k == 0 {
        return Err(HarnessError::Invalid("k must be at least 1".into()));
    }
    let mut timer = Timer::start();
    let (metrics, mut report) = analyze(source.id(), &g, &mut timer)?;
    let mut checks = checks::static_checks(&g, &metrics, &report);
    timer.lap("checks");

    let result = match opts.root {
        Some(r) => rooted_pebbling_number(&g, r, opts.k, &opts.budget)?,
        None => pebbling_number(&g, opts.k, &opts.budget)?,
    };
    timer.lap("exact");

    let witness_ok = result.witness.size() + 1 == result.value
        && is_k_solvable(&g, &result.witness, result.root, result.k).is_none();
    checks.push(Check::new(
        "exact_witness_unsolvable",
        witness_ok,
        format!("witness {:?} for root {}", result.witness, result.root),
    ));
    let replay_ok = result.spot_checks.iter().all(|c| c.replays(&g));
    checks.push(Check::new(
        "certificate_replay",
        replay_ok,
        format!("{} certificates", result.spot_checks.len()),
    ));
    if opts.k == 1 && opts.root.is_none() {
        checks.extend(checks::soundness_checks(&report, result.value));
    }
    if let Some(Family::Star(r)) = source.family() {
        let m = *r as u32 + 1;
        if opts.root.is_none() {
            if let Ok(expected) = star_k_pebbling_number(opts.k, m) {
                checks.push(Check::new(
                    "star_k_pebbling_formula",
                    expected == result.value as u128,
                    format!("4k + m - 3 = {expected} with k = {}, m = {m}", opts.k),
                ));
            }
        }
    }
    timer.lap("checks");

    report.exact = Some(ExactSection {
        k: opts.k,
        result,
        rooted: Vec::new(),
    });
    report.checks = checks;
    report.timing = timer.into_map();
    Ok(report)
}

/// Runs the full check suite over `corpus` on a pool of `opts.jobs` threads.
pub fn cmd_verify(corpus: &[GraphSource], opts: &VerifyOptions) -> VerifyOutcome {
    checks::run_verify(corpus, opts)
}
