//! Report building for the `bounds`, `exact` and `verify` commands.
//!
//! Every command produces [`BoundReport`]s. Reports are deterministic given
//! the same inputs and budget except for the `timing` field, which
//! [`BoundReport::checked_payload`] strips.

mod checks;
mod report;
mod table;

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bounds::{BestBound, BoundError, BoundName, BoundValue, Predicates};
use crate::constructions::{ConstructionError, Decomposition, PathSet, RootDisjointPathSystem};
use crate::domination::DominationCertificate;
use crate::family::{Family, FamilyError};
use crate::graph::{Graph, GraphError};
use crate::pebbling::{ExactResult, SearchBudget, SolverError};

pub use checks::{default_corpus, global_checks, VerifyOptions, VerifyOutcome, VerifySummary};
pub use report::{cmd_bounds, cmd_exact, cmd_verify, ExactOptions};
pub use table::{from_csv, to_csv, CsvRow};

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error(transparent)]
    Bound(#[from] BoundError),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error(transparent)]
    Solver(#[from] SolverError),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}

impl HarnessError {
    pub fn is_budget(&self) -> bool {
        matches!(self, HarnessError::Solver(SolverError::BudgetExceeded { .. }))
    }
}

/// A family spec (`name:param[:param]`) or a path to an edge-list file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphSource {
    Family(Family),
    File(PathBuf),
}

impl FromStr for GraphSource {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let head = s.split(':').next().unwrap_or("");
        if Family::is_family_name(head) {
            Ok(GraphSource::Family(s.parse()?))
        } else {
            Ok(GraphSource::File(PathBuf::from(s)))
        }
    }
}

impl GraphSource {
    pub fn id(&self) -> String {
        match self {
            GraphSource::Family(f) => f.to_string(),
            GraphSource::File(p) => p.display().to_string(),
        }
    }

    pub fn family(&self) -> Option<&Family> {
        match self {
            GraphSource::Family(f) => Some(f),
            GraphSource::File(_) => None,
        }
    }

    pub fn load(&self) -> Result<Graph, HarnessError> {
        match self {
            GraphSource::Family(f) => Ok(f.generate()?),
            GraphSource::File(path) => {
                let text = std::fs::read_to_string(path).map_err(|source| HarnessError::Io {
                    path: path.clone(),
                    source,
                })?;
                Ok(Graph::parse_edge_list(&text)?)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub details: String,
}

impl Check {
    pub fn new(name: &str, passed: bool, details: impl Into<String>) -> Self {
        Check {
            name: name.to_string(),
            passed,
            details: details.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Constructions {
    /// One per root.
    pub path_sets: Vec<PathSet>,
    /// One per root.
    pub disjoint_systems: Vec<RootDisjointPathSystem>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub efficient_decomposition: Option<Decomposition>,
    /// One per root, around the minimum dominating set.
    pub dominating_decompositions: Vec<Decomposition>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactSection {
    pub k: u32,
    /// The global number, or the rooted one when a root was requested.
    pub result: ExactResult,
    /// Independently computed rooted numbers; filled by `verify`.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub rooted: Vec<ExactResult>,
}

/// Everything computed for one graph.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub graph_id: String,
    pub n: u32,
    pub d: u32,
    pub edges: usize,
    pub eccentricities: Vec<usize>,
    pub gamma: u32,
    pub gamma_eff: Option<u32>,
    pub dominating_set: DominationCertificate,
    pub efficient_set: Option<DominationCertificate>,
    pub bounds: Vec<BoundValue>,
    pub best_bound: Option<BestBound>,
    pub predicates: Option<Predicates>,
    pub constructions: Constructions,
    pub exact: Option<ExactSection>,
    pub checks: Vec<Check>,
    pub notes: Vec<String>,
    /// Wall-clock milliseconds per phase. Not part of the checked payload.
    pub timing: BTreeMap<String, f64>,
}

impl BoundReport {
    /// The report as JSON without the `timing` field.
    pub fn checked_payload(&self) -> serde_json::Value {
        let mut v = serde_json::to_value(self).expect("report serializes");
        v.as_object_mut().unwrap().remove("timing");
        v
    }

    pub fn bound(&self, name: BoundName) -> Option<&BoundValue> {
        self.bounds.iter().find(|b| b.name == name)
    }

    pub fn bound_value(&self, name: BoundName) -> Option<u128> {
        self.bound(name).and_then(|b| b.value)
    }

    pub fn exact_value(&self) -> Option<u32> {
        self.exact.as_ref().map(|e| e.result.value)
    }

    pub fn failed_checks(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Budget defaults, overridable through `PEBBLING_MAX_VERTICES`,
/// `PEBBLING_MAX_PEBBLES` and `PEBBLING_MAX_CONFIGS`.
pub fn budget_from_env() -> SearchBudget {
    fn var<T: FromStr>(name: &str) -> Option<T> {
        std::env::var(name).ok()?.parse().ok()
    }
    let def = SearchBudget::default();
    SearchBudget {
        max_vertices: var("PEBBLING_MAX_VERTICES").unwrap_or(def.max_vertices),
        max_pebbles: var("PEBBLING_MAX_PEBBLES").unwrap_or(def.max_pebbles),
        max_configs: var("PEBBLING_MAX_CONFIGS").unwrap_or(def.max_configs),
    }
}

/// Runs `f` on a rayon pool with `jobs` threads (`0` means rayon's default).
pub fn with_jobs<R: Send>(jobs: usize, f: impl FnOnce() -> R + Send) -> R {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool");
    pool.install(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_sources() {
        assert_eq!(
            "star:4".parse::<GraphSource>().unwrap(),
            GraphSource::Family(Family::Star(4))
        );
        assert_eq!(
            "graphs/petersen.txt".parse::<GraphSource>().unwrap(),
            GraphSource::File("graphs/petersen.txt".into())
        );
        assert!(matches!(
            "doublestar:5".parse::<GraphSource>(),
            Err(HarnessError::Family(_))
        ));
        let missing = GraphSource::File("/nonexistent/graph.txt".into());
        assert!(matches!(missing.load(), Err(HarnessError::Io { .. })));
    }
}
