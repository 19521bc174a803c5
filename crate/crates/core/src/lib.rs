//! Exact graph pebbling numbers at desk scale, closed-form upper bounds in
//! terms of diameter and domination, and a harness that checks the bounds
//! against exact values.
//!
//! ```
//! use pebbling::{family, pebbling::{pebbling_number, SearchBudget}};
//!
//! let g = family::generate("star:3").unwrap();
//! let exact = pebbling_number(&g, 1, &SearchBudget::default()).unwrap();
//! assert_eq!(exact.value, 5);
//! ```

pub mod bounds;
pub mod constructions;
pub mod domination;
pub mod family;
pub mod graph;
pub mod harness;
pub mod pebbling;

pub use graph::{Graph, GraphError, GraphMetrics, Vertex};
