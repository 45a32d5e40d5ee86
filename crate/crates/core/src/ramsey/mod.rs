//! Exact 2-color ordered Ramsey numbers with certificates.

mod certificate;
mod coloring;
mod matrix_bound;
mod probe;
mod search;

pub use certificate::{rerun_upper_bound, verify_certificate, CertKind, CertMeta, Certificate, Verdict};
pub use coloring::{EdgeColoring, BLUE, RED};
pub use matrix_bound::{matrix_excluded_values, ExclusionStatus, MatrixBoundEntry, MatrixBoundReport};
pub use probe::random_blowup_probe;
pub use search::{exists_free_coloring, ramsey_number, RamseyResult, SearchConfig, SearchOutcome, Transcript};

use serde::{Deserialize, Serialize};

use crate::embed::Embedder;
use crate::error::{Error, Result};
use crate::graph::{OrderedGraph, OrderedHypergraph};

/// Version tag stamped into certificates and cache keys.
pub const ENGINE_VERSION: &str = concat!("ordram-engine/", env!("CARGO_PKG_VERSION"));

/// The structure whose monochromatic copies are forbidden: an ordered graph
/// or a `d`-uniform ordered hypergraph.
///
/// Serializes in the graph file format when `d == 2`, otherwise in the
/// hypergraph format.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawTarget", into = "RawTarget")]
pub struct Target(OrderedHypergraph);

#[derive(Serialize, Deserialize)]
struct RawTarget {
    n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    d: Option<usize>,
    edges: Vec<Vec<usize>>,
}

impl TryFrom<RawTarget> for Target {
    type Error = Error;
    fn try_from(raw: RawTarget) -> Result<Self> {
        Ok(Target(OrderedHypergraph::new(raw.n, raw.d.unwrap_or(2), raw.edges)?))
    }
}

impl From<Target> for RawTarget {
    fn from(t: Target) -> Self {
        let d = (t.0.d() != 2).then_some(t.0.d());
        RawTarget { n: t.0.n(), d, edges: t.0.edges().to_vec() }
    }
}

impl From<OrderedGraph> for Target {
    fn from(g: OrderedGraph) -> Self {
        Target(g.to_hypergraph())
    }
}

impl From<&OrderedGraph> for Target {
    fn from(g: &OrderedGraph) -> Self {
        Target(g.to_hypergraph())
    }
}

impl From<OrderedHypergraph> for Target {
    fn from(h: OrderedHypergraph) -> Self {
        Target(h)
    }
}

impl Target {
    pub fn n(&self) -> usize {
        self.0.n()
    }

    pub fn d(&self) -> usize {
        self.0.d()
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        self.0.edges()
    }

    pub fn hypergraph(&self) -> &OrderedHypergraph {
        &self.0
    }

    pub fn as_graph(&self) -> Option<OrderedGraph> {
        self.0.to_graph()
    }

    pub fn is_mirror_symmetric(&self) -> bool {
        self.0.mirror() == self.0
    }

    /// Canonical JSON (sorted edges, compact).
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("target serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }
}

/// Checks whether the `color` class of `coloring` avoids `target`.
///
/// Returns `Ok(None)` when it does, and the lexicographically smallest
/// monochromatic embedding otherwise.
pub fn is_free(coloring: &EdgeColoring, target: &Target, color: u8) -> Result<Option<Vec<usize>>> {
    if coloring.d() != target.d() {
        return Err(Error::UniformityMismatch(coloring.d(), target.d()));
    }
    let emb = Embedder::new(target.n(), target.edges());
    Ok(emb.find(coloring.n(), &[], |t| coloring.color(t) == color))
}

/// Free in both colors.
pub fn is_free_both(coloring: &EdgeColoring, target: &Target) -> Result<bool> {
    Ok(is_free(coloring, target, RED)?.is_none() && is_free(coloring, target, BLUE)?.is_none())
}
