//! Extremal functions of forbidden 0-1 patterns: the largest number of ones
//! in a matrix of given dimensions that avoids a pattern.

mod bnb;
mod heuristic;
mod lemmas;
mod naive;
mod through;

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pattern::{mat_contains, Pattern};

pub use bnb::BranchAndBound;
pub use heuristic::LocalSearch;
pub use lemmas::{
    lemma_check, lemma_checks, rect_bound_check, verify_lemma_inequalities, LemmaCheck, LemmaReport, LemmaRow,
    RowStatus,
};
pub use naive::Naive;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExResult {
    pub dims: Vec<usize>,
    pub pattern: Pattern,
    pub value: usize,
    /// False when the budget ran out (or for heuristic results): `value` is
    /// then only a lower bound.
    pub exact: bool,
    pub witness: Pattern,
    pub nodes_explored: u64,
    pub solver: String,
}

impl ExResult {
    /// Builds a result after checking the witness independently of the solver.
    pub(crate) fn checked(
        dims: &[usize],
        pattern: &Pattern,
        witness: Pattern,
        exact: bool,
        nodes_explored: u64,
        solver: &str,
    ) -> Result<Self> {
        if witness.dims() != dims {
            return Err(Error::InvalidParameter(format!("witness dims {:?} differ from {dims:?}", witness.dims())));
        }
        if let Some(w) = mat_contains(&witness, pattern)? {
            return Err(Error::InvalidParameter(format!("{solver} produced a witness containing the pattern at {w:?}")));
        }
        Ok(ExResult {
            dims: dims.to_vec(),
            pattern: pattern.clone(),
            value: witness.weight(),
            exact,
            witness,
            nodes_explored,
            solver: solver.to_string(),
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("result serializes")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExConfig {
    /// Node budget; exhausted searches return their best so far with `exact = false`.
    pub budget: u64,
    pub workers: usize,
    /// Heuristic only.
    pub seed: u64,
    /// Heuristic only.
    pub iterations: u64,
}

impl Default for ExConfig {
    fn default() -> Self {
        ExConfig { budget: 50_000_000, workers: 1, seed: 0, iterations: 20_000 }
    }
}

/// A way of computing (or bounding from below) an extremal function.
pub trait ExSolver: Send + Sync {
    fn name(&self) -> &'static str;
    /// Whether a completed run proves optimality.
    fn is_exact(&self) -> bool;
    fn solve(&self, dims: &[usize], pattern: &Pattern, cfg: &ExConfig) -> Result<ExResult>;
}

pub fn solvers() -> Vec<Box<dyn ExSolver>> {
    vec![Box::new(BranchAndBound), Box::new(Naive), Box::new(LocalSearch)]
}

pub fn solver(name: &str) -> Result<Box<dyn ExSolver>> {
    solvers()
        .into_iter()
        .find(|s| s.name() == name)
        .ok_or_else(|| Error::Unknown { kind: "solver", name: name.to_string() })
}

fn check_dims(dims: &[usize], pattern: &Pattern) -> Result<()> {
    if dims.is_empty() || dims.contains(&0) {
        return Err(Error::BadDims(dims.to_vec()));
    }
    if dims.len() != pattern.dim() {
        return Err(Error::DimensionMismatch(dims.len(), pattern.dim()));
    }
    if pattern.weight() == 0 {
        return Err(Error::InvalidParameter("pattern has no ones".into()));
    }
    Ok(())
}

/// Exact extremal value by branch and bound on one worker.
pub fn ex_exact(dims: &[usize], pattern: &Pattern, budget: u64) -> Result<ExResult> {
    BranchAndBound.solve(dims, pattern, &ExConfig { budget, ..ExConfig::default() })
}

/// Seeded local search; a lower bound only.
pub fn ex_lower_heuristic(dims: &[usize], pattern: &Pattern, seed: u64, iterations: u64) -> Result<ExResult> {
    LocalSearch.solve(dims, pattern, &ExConfig { seed, iterations, ..ExConfig::default() })
}

/// Memoized exact values, shared by the inequality checks.
pub struct ExContext {
    pub cfg: ExConfig,
    cache: HashMap<(Vec<usize>, Pattern), ExResult>,
}

impl ExContext {
    pub fn new(cfg: ExConfig) -> Self {
        ExContext { cfg, cache: HashMap::new() }
    }

    pub fn ex(&mut self, dims: &[usize], pattern: &Pattern) -> Result<ExResult> {
        let key = (dims.to_vec(), pattern.clone());
        if let Some(r) = self.cache.get(&key) {
            return Ok(r.clone());
        }
        let r = BranchAndBound.solve(dims, pattern, &self.cfg)?;
        self.cache.insert(key, r.clone());
        Ok(r)
    }

    /// Exact value, or `None` when the budget ran out.
    pub fn exact(&mut self, dims: &[usize], pattern: &Pattern) -> Result<Option<usize>> {
        let r = self.ex(dims, pattern)?;
        Ok(r.exact.then_some(r.value))
    }

    /// Exact value on the cube of side `n`.
    pub fn cube(&mut self, n: usize, pattern: &Pattern) -> Result<Option<usize>> {
        self.exact(&vec![n; pattern.dim()], pattern)
    }
}

impl Default for ExContext {
    fn default() -> Self {
        ExContext::new(ExConfig::default())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_lookup() {
        assert_eq!(solver("branch-and-bound").unwrap().name(), "branch-and-bound");
        assert!(solver("nope").is_err());
        assert_eq!(solvers().len(), 3);
    }

    #[test]
    fn unit_pattern_forbids_everything() {
        let p = Pattern::all_ones(vec![1, 1]).unwrap();
        for n in 1..5 {
            assert_eq!(ex_exact(&[n, n], &p, 1_000_000).unwrap().value, 0);
        }
    }
}
