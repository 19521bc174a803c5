//! Named graph families and their fixed vertex labelings.
//!
//! | spec            | vertices | labeling                                                    |
//! |-----------------|----------|-------------------------------------------------------------|
//! | `path:n`        | n        | `i ~ i+1`                                                   |
//! | `cycle:n`       | n        | `path:n` plus `n-1 ~ 0`                                     |
//! | `complete:n`    | n        | every pair                                                  |
//! | `star:r`        | r + 1    | center `0`, leaves `1..=r`                                  |
//! | `doublestar:n`  | n + 2    | centers `0 ~ 1`; leaves `2..=n/2+1` on 0, the rest on 1     |
//! | `corona:<base>` | 2b       | base graph on `0..b`, leaf `b+i` hangs off base vertex `i`  |

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError, Vertex, MAX_VERTICES};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("unknown graph family {0:?}")]
    UnknownFamily(String),
    #[error("invalid parameter for {family}: {msg}")]
    InvalidParameter { family: &'static str, msg: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A parsed family spec such as `star:4` or `corona:cycle:4`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Star(usize),
    DoubleStar(usize),
    Corona(Box<Family>),
}

impl Family {
    /// True when `name` is the leading token of a known family spec.
    pub fn is_family_name(name: &str) -> bool {
        matches!(
            name,
            "path" | "cycle" | "complete" | "star" | "doublestar" | "corona"
        )
    }

    pub fn vertex_count(&self) -> usize {
        match self {
            Family::Path(n) | Family::Cycle(n) | Family::Complete(n) => *n,
            Family::Star(r) => r + 1,
            Family::DoubleStar(n) => n + 2,
            Family::Corona(base) => 2 * base.vertex_count(),
        }
    }

    /// Builds the graph with the documented labeling.
    pub fn generate(&self) -> Result<Graph, FamilyError> {
        self.validate()?;
        let n = self.vertex_count();
        if n > MAX_VERTICES {
            return Err(GraphError::TooLarge(n).into());
        }
        Ok(Graph::new(n, &self.edge_list())?)
    }

    fn validate(&self) -> Result<(), FamilyError> {
        let bad = |family, msg: &str| {
            Err(FamilyError::InvalidParameter {
                family,
                msg: msg.to_string(),
            })
        };
        match *self {
            Family::Path(n) if n < 2 => bad("path", "n must be at least 2"),
            Family::Cycle(n) if n < 3 => bad("cycle", "n must be at least 3"),
            Family::Complete(n) if n < 1 => bad("complete", "n must be at least 1"),
            Family::Star(r) if r < 1 => bad("star", "r must be at least 1"),
            Family::DoubleStar(n) if n < 2 || n % 2 != 0 => {
                bad("doublestar", "n must be even and at least 2")
            }
            Family::Corona(ref base) => base.validate(),
            _ => Ok(()),
        }
    }

    fn edge_list(&self) -> Vec<(Vertex, Vertex)> {
        match self {
            Family::Path(n) => (1..*n).map(|i| (i - 1, i)).collect(),
            Family::Cycle(n) => {
                let mut e = Family::Path(*n).edge_list();
                e.push((n - 1, 0));
                e
            }
            Family::Complete(n) => (0..*n)
                .flat_map(|u| (u + 1..*n).map(move |v| (u, v)))
                .collect(),
            Family::Star(r) => (1..=*r).map(|leaf| (0, leaf)).collect(),
            Family::DoubleStar(n) => {
                let half = n / 2;
                let mut e = vec![(0, 1)];
                e.extend((2..2 + half).map(|leaf| (0, leaf)));
                e.extend((2 + half..2 + n).map(|leaf| (1, leaf)));
                e
            }
            Family::Corona(base) => {
                let b = base.vertex_count();
                let mut e = base.edge_list();
                e.extend((0..b).map(|i| (i, b + i)));
                e
            }
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Path(n) => write!(f, "path:{n}"),
            Family::Cycle(n) => write!(f, "cycle:{n}"),
            Family::Complete(n) => write!(f, "complete:{n}"),
            Family::Star(r) => write!(f, "star:{r}"),
            Family::DoubleStar(n) => write!(f, "doublestar:{n}"),
            Family::Corona(base) => write!(f, "corona:{base}"),
        }
    }
}

impl FromStr for Family {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (name, rest) = s.split_once(':').unwrap_or((s, ""));
        let param = |family: &'static str| -> Result<usize, FamilyError> {
            rest.parse().map_err(|_| FamilyError::InvalidParameter {
                family,
                msg: format!("expected a nonnegative integer, got {rest:?}"),
            })
        };
        let fam = match name {
            "path" => Family::Path(param("path")?),
            "cycle" => Family::Cycle(param("cycle")?),
            "complete" => Family::Complete(param("complete")?),
            "star" => Family::Star(param("star")?),
            "doublestar" => Family::DoubleStar(param("doublestar")?),
            "corona" => Family::Corona(Box::new(rest.parse()?)),
            _ => return Err(FamilyError::UnknownFamily(s.to_string())),
        };
        fam.validate()?;
        Ok(fam)
    }
}

impl TryFrom<String> for Family {
    type Error = FamilyError;
    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

impl From<Family> for String {
    fn from(f: Family) -> String {
        f.to_string()
    }
}

/// Parses and generates in one step.
pub fn generate(spec: &str) -> Result<Graph, FamilyError> {
    spec.parse::<Family>()?.generate()
}
