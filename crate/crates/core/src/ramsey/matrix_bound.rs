//! Values that `R(g) - 1` cannot take, for an interval 2-chromatic graph `g`
//! with associated matrix `P_g`. Splitting a `g`-free coloring of `K_m` into
//! intervals of sizes `a = floor(m/2)` and `b = ceil(m/2)` gives a `P_g`-free
//! `a x b` matrix holding at least half of the `a b` cross edges, so
//! `a b <= 2 ex(a x b, P_g)`. For even `m` this is `m^2 <= 8 ex(m/2, P_g)`.
//! An excluded `m` only rules out
//! `R(g) = m + 1`; an upper bound `R(g) <= N` would need every `m >= N` to be
//! excluded, which a finite range never shows.

use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::extremal::{ExConfig, ExContext};
use crate::graph::OrderedGraph;
use crate::pattern::Pattern;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExclusionStatus {
    /// `a b > 2 ex(a x b, P_g)`, so `R(g) != m + 1`.
    Excluded,
    NotExcluded,
    /// `floor(m/2) = 0`: the inequality says nothing.
    Degenerate,
    /// The extremal value did not finish within budget.
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixBoundEntry {
    pub m: usize,
    /// Host dimensions `[floor(m/2), ceil(m/2)]`.
    pub dims: [usize; 2],
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ex: Option<usize>,
    pub status: ExclusionStatus,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixBoundReport {
    pub graph: OrderedGraph,
    pub pattern: Pattern,
    pub convention: String,
    pub entries: Vec<MatrixBoundEntry>,
}

impl MatrixBoundReport {
    pub fn excluded(&self) -> Vec<usize> {
        self.entries.iter().filter(|e| e.status == ExclusionStatus::Excluded).map(|e| e.m).collect()
    }

    pub fn status(&self, m: usize) -> Option<ExclusionStatus> {
        self.entries.iter().find(|e| e.m == m).map(|e| e.status)
    }
}

pub fn matrix_excluded_values(g: &OrderedGraph, m_range: RangeInclusive<usize>, budget: u64) -> Result<MatrixBoundReport> {
    if g.edge_count() == 0 || g.interval_chromatic_number() != 2 {
        return Err(Error::NotInterval2Chromatic);
    }
    let pattern = g.matrix(None)?;
    let mut ctx = ExContext::new(ExConfig { budget, ..ExConfig::default() });
    let mut entries = Vec::new();
    for m in m_range {
        let dims = [m / 2, m - m / 2];
        let entry = if dims[0] == 0 {
            MatrixBoundEntry { m, dims, ex: None, status: ExclusionStatus::Degenerate }
        } else {
            match ctx.exact(&dims, &pattern)? {
                None => MatrixBoundEntry { m, dims, ex: None, status: ExclusionStatus::Inconclusive },
                Some(ex) => {
                    let status = if dims[0] * dims[1] > 2 * ex { ExclusionStatus::Excluded } else { ExclusionStatus::NotExcluded };
                    MatrixBoundEntry { m, dims, ex: Some(ex), status }
                }
            }
        };
        entries.push(entry);
    }
    Ok(MatrixBoundReport {
        graph: g.clone(),
        pattern,
        convention: "host floor(m/2) x ceil(m/2); an excluded m rules out R = m + 1 only".into(),
        entries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_edge() {
        let g = OrderedGraph::new(2, [(0, 1)]).unwrap();
        let r = matrix_excluded_values(&g, 1..=4, 1_000_000).unwrap();
        assert_eq!(r.status(1), Some(ExclusionStatus::Degenerate));
        assert_eq!(r.excluded(), vec![2, 3, 4]);
    }

    #[test]
    fn odd_m_uses_the_uneven_split() {
        // R = 6 for the nested pair, so m = 5 must survive.
        let g = OrderedGraph::new(4, [(0, 3), (1, 2)]).unwrap();
        let r = matrix_excluded_values(&g, 5..=5, 1_000_000).unwrap();
        assert_eq!(r.entries[0].dims, [2, 3]);
        assert_eq!(r.status(5), Some(ExclusionStatus::NotExcluded));
    }

    #[test]
    fn needs_two_intervals() {
        let g = OrderedGraph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(matrix_excluded_values(&g, 1..=3, 1000), Err(Error::NotInterval2Chromatic));
    }
}
