//! Exact ordered Ramsey numbers and extremal functions of forbidden 0-1
//! patterns, with certificates.

pub mod constructions;
mod embed;
pub mod error;
pub mod extremal;
pub mod graph;
pub mod ops;
pub mod pattern;
pub mod ramsey;

pub use error::{Error, Result};
pub use graph::{contains, contains_hyper, graph_of_matrix, OrderedGraph, OrderedHypergraph, SpreadSpec};
pub use pattern::{mat_contains, Pattern};
