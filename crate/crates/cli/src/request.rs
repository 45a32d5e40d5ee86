//! Cacheable computations. The serialized request is the cache input, so
//! every field that can change the answer belongs here and nothing else
//! (worker counts do not change results).

use anyhow::Result;
use ordram::extremal::{self, ExConfig, ExContext};
use ordram::ramsey::{self, SearchConfig, Target};
use ordram::{OrderedGraph, Pattern};
use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "kebab-case")]
pub enum Request {
    Ramsey { target: Target, max_n: usize, budget: u64, color_swap: bool, mirror: bool, split_depth: usize },
    Ex { dims: Vec<usize>, pattern: Pattern, solver: String, budget: u64, seed: u64, iterations: u64 },
    Props { lemma: String, fixtures: Vec<Pattern>, max_n: Option<usize>, budget: u64 },
    MatrixBound { graph: OrderedGraph, from: usize, to: usize, budget: u64 },
}

impl Request {
    pub fn op(&self) -> &'static str {
        match self {
            Request::Ramsey { .. } => "ramsey",
            Request::Ex { .. } => "ex",
            Request::Props { .. } => "props",
            Request::MatrixBound { .. } => "matrix-bound",
        }
    }

    pub fn compute(&self, workers: usize) -> Result<Value> {
        Ok(match self {
            Request::Ramsey { target, max_n, budget, color_swap, mirror, split_depth } => {
                let cfg = SearchConfig {
                    max_n: *max_n,
                    budget: *budget,
                    workers,
                    color_swap: *color_swap,
                    mirror: *mirror,
                    split_depth: *split_depth,
                };
                serde_json::to_value(ramsey::ramsey_number(target, &cfg)?)?
            }
            Request::Ex { dims, pattern, solver, budget, seed, iterations } => {
                let cfg = ExConfig { budget: *budget, workers, seed: *seed, iterations: *iterations };
                serde_json::to_value(extremal::solver(solver)?.solve(dims, pattern, &cfg)?)?
            }
            Request::Props { lemma, fixtures, max_n, budget } => {
                let mut ctx = ExContext::new(ExConfig { budget: *budget, workers, ..ExConfig::default() });
                serde_json::to_value(extremal::verify_lemma_inequalities(lemma, fixtures, *max_n, &mut ctx)?)?
            }
            Request::MatrixBound { graph, from, to, budget } => {
                serde_json::to_value(ramsey::matrix_excluded_values(graph, *from..=*to, *budget)?)?
            }
        })
    }
}
