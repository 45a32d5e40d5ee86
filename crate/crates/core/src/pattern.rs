//! Sparse d-dimensional 0-1 matrices and order-preserving pattern containment.
//!
//! Coordinates are 0-indexed; for `d = 2` coordinate 0 is the row counted from
//! the top and coordinate 1 the column counted from the left, matching how
//! matrices are printed.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawPattern", into = "RawPattern")]
pub struct Pattern {
    dims: Vec<usize>,
    ones: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct RawPattern {
    dims: Vec<usize>,
    ones: Vec<Vec<usize>>,
}

impl TryFrom<RawPattern> for Pattern {
    type Error = Error;
    fn try_from(raw: RawPattern) -> Result<Self> {
        Pattern::new(raw.dims, raw.ones)
    }
}

impl From<Pattern> for RawPattern {
    fn from(p: Pattern) -> Self {
        RawPattern { dims: p.dims, ones: p.ones }
    }
}

impl Pattern {
    /// Builds a pattern; duplicate ones are merged, out-of-range ones rejected.
    pub fn new(dims: Vec<usize>, ones: impl IntoIterator<Item = Vec<usize>>) -> Result<Self> {
        if dims.is_empty() || dims.contains(&0) {
            return Err(Error::BadDims(dims));
        }
        let mut set = BTreeSet::new();
        for c in ones {
            if c.len() != dims.len() || c.iter().zip(&dims).any(|(&x, &s)| x >= s) {
                return Err(Error::CellOutOfBounds(c, dims));
            }
            set.insert(c);
        }
        Ok(Pattern { dims, ones: set.into_iter().collect() })
    }

    pub fn zeros(dims: Vec<usize>) -> Result<Self> {
        Pattern::new(dims, std::iter::empty())
    }

    /// Every cell set.
    pub fn all_ones(dims: Vec<usize>) -> Result<Self> {
        let cells = Pattern::zeros(dims.clone())?.cells().collect::<Vec<_>>();
        Pattern::new(dims, cells)
    }

    /// The `k`-by-`k` identity.
    pub fn identity(k: usize) -> Result<Self> {
        Pattern::new(vec![k, k], (0..k).map(|i| vec![i, i]))
    }

    /// Ones on the anti-diagonal from bottom-left to top-right.
    pub fn anti_diagonal(k: usize) -> Result<Self> {
        Pattern::new(vec![k, k], (0..k).map(|i| vec![k - 1 - i, i]))
    }

    /// Permutation matrix with the one of column `j` in row `perm[j]`.
    pub fn from_permutation(perm: &[usize]) -> Result<Self> {
        let n = perm.len();
        Pattern::new(vec![n, n], perm.iter().enumerate().map(|(j, &r)| vec![r, j]))
    }

    /// Builds a 2-dimensional pattern from rows of 0/1 values.
    pub fn from_rows(rows: &[&[u8]]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        if rows.iter().any(|x| x.len() != c) {
            return Err(Error::Parse("ragged matrix rows".into()));
        }
        let mut ones = Vec::new();
        for (i, row) in rows.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                match x {
                    0 => {}
                    1 => ones.push(vec![i, j]),
                    other => return Err(Error::Parse(format!("matrix entry {other} is not 0/1"))),
                }
            }
        }
        Pattern::new(vec![r, c], ones)
    }

    /// Parses the printed-matrix text format: one row per non-empty line,
    /// entries `0`/`1` separated by whitespace (or written contiguously).
    pub fn parse_text(text: &str) -> Result<Self> {
        let mut rows: Vec<Vec<u8>> = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut row = Vec::new();
            for ch in line.chars().filter(|c| !c.is_whitespace()) {
                match ch {
                    '0' => row.push(0),
                    '1' => row.push(1),
                    other => return Err(Error::Parse(format!("unexpected character {other:?} in matrix"))),
                }
            }
            rows.push(row);
        }
        let refs: Vec<&[u8]> = rows.iter().map(|r| r.as_slice()).collect();
        Pattern::from_rows(&refs)
    }

    /// Printed-matrix text: rows of space-separated 0/1, newline terminated.
    /// Only defined for `d = 2`.
    pub fn to_text(&self) -> Option<String> {
        if self.dim() != 2 {
            return None;
        }
        let mut out = String::new();
        for i in 0..self.dims[0] {
            let row: Vec<&str> = (0..self.dims[1]).map(|j| if self.get(&[i, j]) { "1" } else { "0" }).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        Some(out)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("pattern serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self) -> usize {
        self.dims.len()
    }

    pub fn ones(&self) -> &[Vec<usize>] {
        &self.ones
    }

    pub fn weight(&self) -> usize {
        self.ones.len()
    }

    pub fn cell_count(&self) -> usize {
        self.dims.iter().product()
    }

    pub fn get(&self, c: &[usize]) -> bool {
        self.ones.binary_search_by(|x| x.as_slice().cmp(c)).is_ok()
    }

    /// All cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        (0..self.cell_count()).map(move |i| self.unrank(i))
    }

    pub(crate) fn rank(&self, c: &[usize]) -> usize {
        c.iter().zip(&self.dims).fold(0, |acc, (&x, &s)| acc * s + x)
    }

    pub(crate) fn unrank(&self, mut i: usize) -> Vec<usize> {
        let mut c = vec![0; self.dims.len()];
        for a in (0..self.dims.len()).rev() {
            c[a] = i % self.dims[a];
            i /= self.dims[a];
        }
        c
    }

    /// Dense row-major occupancy.
    pub(crate) fn dense(&self) -> Vec<bool> {
        let mut v = vec![false; self.cell_count()];
        for c in &self.ones {
            v[self.rank(c)] = true;
        }
        v
    }

    /// True when every axis index carries at least one one.
    pub fn has_no_empty_lines(&self) -> bool {
        (0..self.dim()).all(|a| (0..self.dims[a]).all(|i| self.ones.iter().any(|c| c[a] == i)))
    }

    /// Checks whether `self` contains `pattern`; see [`mat_contains`].
    pub fn contains(&self, pattern: &Pattern) -> Result<Option<Vec<Vec<usize>>>> {
        mat_contains(self, pattern)
    }

    /// Whether `self` avoids `pattern`.
    pub fn avoids(&self, pattern: &Pattern) -> Result<bool> {
        Ok(mat_contains(self, pattern)?.is_none())
    }

    pub(crate) fn from_parts_unchecked(dims: Vec<usize>, mut ones: Vec<Vec<usize>>) -> Self {
        ones.sort();
        ones.dedup();
        Pattern { dims, ones }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_text() {
            Some(t) => f.write_str(&t),
            None => f.write_str(&self.to_json()),
        }
    }
}

/// Pattern containment: per axis, a strictly increasing selection of host
/// indices such that every one of `pattern` lands on a one of `host`.
///
/// Returns the selections (one index list per axis) that are
/// lexicographically smallest when concatenated axis by axis.
pub fn mat_contains(host: &Pattern, pattern: &Pattern) -> Result<Option<Vec<Vec<usize>>>> {
    if host.dim() != pattern.dim() {
        return Err(Error::DimensionMismatch(host.dim(), pattern.dim()));
    }
    if pattern.dims.iter().zip(&host.dims).any(|(p, h)| p > h) {
        return Ok(None);
    }
    let d = host.dim();
    let last = d - 1;
    // Ones of the pattern grouped by their last coordinate; they are checked
    // once the last axis index for that coordinate is chosen.
    let mut by_last: Vec<Vec<usize>> = vec![Vec::new(); pattern.dims[last]];
    for (i, c) in pattern.ones.iter().enumerate() {
        by_last[c[last]].push(i);
    }
    // Minimum number of ones a host line must carry, used to prune earlier axes.
    let mut need: Vec<Vec<usize>> = (0..d).map(|a| vec![0; pattern.dims[a]]).collect();
    for c in &pattern.ones {
        for a in 0..d {
            need[a][c[a]] += 1;
        }
    }
    let mut have: Vec<Vec<usize>> = (0..d).map(|a| vec![0; host.dims[a]]).collect();
    for c in &host.ones {
        for a in 0..d {
            have[a][c[a]] += 1;
        }
    }
    let mut st = MatSearch {
        host,
        pattern,
        dense: host.dense(),
        by_last,
        need,
        have,
        sel: pattern.dims.iter().map(|&s| Vec::with_capacity(s)).collect(),
    };
    Ok(st.axis(0).then_some(st.sel))
}

struct MatSearch<'a> {
    host: &'a Pattern,
    pattern: &'a Pattern,
    dense: Vec<bool>,
    by_last: Vec<Vec<usize>>,
    need: Vec<Vec<usize>>,
    have: Vec<Vec<usize>>,
    sel: Vec<Vec<usize>>,
}

impl MatSearch<'_> {
    fn axis(&mut self, a: usize) -> bool {
        if a == self.host.dim() {
            return true;
        }
        self.place(a, 0)
    }

    fn place(&mut self, a: usize, i: usize) -> bool {
        let pd = self.pattern.dims[a];
        if i == pd {
            return self.axis(a + 1);
        }
        let hd = self.host.dims[a];
        let lo = self.sel[a].last().map_or(0, |&x| x + 1);
        let hi = hd - (pd - i);
        for h in lo..=hi {
            if self.have[a][h] < self.need[a][i] {
                continue;
            }
            self.sel[a].push(h);
            if (a + 1 < self.host.dim() || self.check_last(i)) && self.place(a, i + 1) {
                return true;
            }
            self.sel[a].pop();
        }
        false
    }

    fn check_last(&self, i: usize) -> bool {
        self.by_last[i].iter().all(|&oi| {
            let c = &self.pattern.ones[oi];
            let r = c
                .iter()
                .enumerate()
                .fold(0, |acc, (a, &x)| acc * self.host.dims[a] + self.sel[a][x]);
            self.dense[r]
        })
    }
}
