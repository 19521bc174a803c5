use serde::{Deserialize, Serialize};

use super::{BoundReport, HarnessError};
use crate::bounds::BoundName;

/// One graph per row, bound values flattened into columns. Empty cells mean
/// inapplicable or not computed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CsvRow {
    pub graph_id: String,
    pub n: u32,
    pub d: u32,
    pub edges: usize,
    pub gamma: u32,
    pub gamma_eff: Option<u32>,
    pub trivial_lower: Option<u128>,
    pub trivial_upper: Option<u128>,
    pub path_cover: Option<u128>,
    pub disjoint_paths: Option<u128>,
    pub efficient_domination: Option<u128>,
    pub domination: Option<u128>,
    pub diameter_two: Option<u128>,
    pub best_bound: Option<BoundName>,
    pub best_value: Option<u128>,
    pub exact_k: Option<u32>,
    pub exact: Option<u32>,
    pub exact_root: Option<usize>,
    pub checks_passed: usize,
    pub checks_failed: usize,
}

impl From<&BoundReport> for CsvRow {
    fn from(r: &BoundReport) -> Self {
        let exact = r.exact.as_ref();
        let failed = r.failed_checks().count();
        CsvRow {
            graph_id: r.graph_id.clone(),
            n: r.n,
            d: r.d,
            edges: r.edges,
            gamma: r.gamma,
            gamma_eff: r.gamma_eff,
            trivial_lower: r.bound_value(BoundName::TrivialLower),
            trivial_upper: r.bound_value(BoundName::TrivialUpper),
            path_cover: r.bound_value(BoundName::PathCover),
            disjoint_paths: r.bound_value(BoundName::DisjointPaths),
            efficient_domination: r.bound_value(BoundName::EfficientDomination),
            domination: r.bound_value(BoundName::Domination),
            diameter_two: r.bound_value(BoundName::DiameterTwo),
            best_bound: r.best_bound.as_ref().map(|b| b.name),
            best_value: r.best_bound.as_ref().map(|b| b.value),
            exact_k: exact.map(|e| e.k),
            exact: exact.map(|e| e.result.value),
            exact_root: exact.map(|e| e.result.root),
            checks_passed: r.checks.len() - failed,
            checks_failed: failed,
        }
    }
}

pub fn to_csv(reports: &[BoundReport]) -> Result<String, HarnessError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in reports {
        w.serialize(CsvRow::from(r))?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| HarnessError::Invalid(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

pub fn from_csv(text: &str) -> Result<Vec<CsvRow>, HarnessError> {
    csv::Reader::from_reader(text.as_bytes())
        .deserialize()
        .map(|r| r.map_err(HarnessError::from))
        .collect()
}
