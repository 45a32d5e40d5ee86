use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::OrderedHypergraph;

/// Color 0 (red).
pub const RED: u8 = 0;
/// Color 1 (blue).
pub const BLUE: u8 = 1;

/// Binomial coefficient, saturating.
pub(crate) fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: usize = 1;
    for i in 0..k {
        r = r.saturating_mul(n - i) / (i + 1);
    }
    r
}

/// Colex rank of a sorted tuple: tuples are ordered by their last element,
/// then the one before it, and so on.
pub(crate) fn colex_rank(t: &[usize]) -> usize {
    t.iter().enumerate().map(|(i, &v)| binom(v, i + 1)).sum()
}

/// All sorted `d`-subsets of `0..n` in colex order.
pub(crate) fn colex_tuples(n: usize, d: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(binom(n, d));
    if d == 0 || d > n {
        return out;
    }
    let mut t: Vec<usize> = (0..d).collect();
    loop {
        out.push(t.clone());
        // Advance to the colex successor.
        let mut i = 0;
        while i + 1 < d && t[i] + 1 == t[i + 1] {
            i += 1;
        }
        t[i] += 1;
        if t[i] >= n {
            break;
        }
        for (j, slot) in t.iter_mut().enumerate().take(i) {
            *slot = j;
        }
    }
    out
}

/// A 2-coloring of every `d`-subset of `0..n`, stored in colex order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawColoring", into = "RawColoring")]
pub struct EdgeColoring {
    n: usize,
    d: usize,
    colors: Vec<u8>,
}

#[derive(Serialize, Deserialize)]
struct RawColoring {
    n: usize,
    d: usize,
    colors: Vec<Vec<usize>>,
}

impl TryFrom<RawColoring> for EdgeColoring {
    type Error = Error;
    fn try_from(raw: RawColoring) -> Result<Self> {
        let (n, d) = (raw.n, raw.d);
        if d < 2 {
            return Err(Error::MalformedColoring(format!("uniformity {d} below 2")));
        }
        let total = binom(n, d);
        let mut colors = vec![u8::MAX; total];
        for entry in raw.colors {
            if entry.len() != d + 1 {
                return Err(Error::MalformedColoring(format!("entry {entry:?} is not {d} vertices plus a color")));
            }
            let (t, c) = entry.split_at(d);
            if !t.windows(2).all(|w| w[0] < w[1]) || t[d - 1] >= n {
                return Err(Error::MalformedColoring(format!("tuple {t:?} is not sorted within 0..{n}")));
            }
            if c[0] > 1 {
                return Err(Error::MalformedColoring(format!("color {} is not 0 or 1", c[0])));
            }
            let r = colex_rank(t);
            if colors[r] != u8::MAX {
                return Err(Error::MalformedColoring(format!("tuple {t:?} colored twice")));
            }
            colors[r] = c[0] as u8;
        }
        if colors.contains(&u8::MAX) {
            return Err(Error::MalformedColoring("not every tuple is colored".into()));
        }
        Ok(EdgeColoring { n, d, colors })
    }
}

impl From<EdgeColoring> for RawColoring {
    fn from(c: EdgeColoring) -> Self {
        let mut colors: Vec<Vec<usize>> = colex_tuples(c.n, c.d)
            .into_iter()
            .map(|mut t| {
                t.push(c.colors[colex_rank(&t)] as usize);
                t
            })
            .collect();
        colors.sort();
        RawColoring { n: c.n, d: c.d, colors }
    }
}

impl EdgeColoring {
    /// Every tuple gets `color`.
    pub fn monochromatic(n: usize, d: usize, color: u8) -> Self {
        EdgeColoring { n, d, colors: vec![color; binom(n, d)] }
    }

    /// Colors each sorted tuple with `f(tuple)`.
    pub fn from_fn(n: usize, d: usize, mut f: impl FnMut(&[usize]) -> u8) -> Self {
        let colors = colex_tuples(n, d).iter().map(|t| f(t) & 1).collect();
        EdgeColoring { n, d, colors }
    }

    pub(crate) fn from_colex(n: usize, d: usize, colors: Vec<u8>) -> Self {
        debug_assert_eq!(colors.len(), binom(n, d));
        EdgeColoring { n, d, colors }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// Color of a sorted tuple.
    pub fn color(&self, t: &[usize]) -> u8 {
        self.colors[colex_rank(t)]
    }

    /// Overwrites the color of a sorted tuple.
    pub fn set(&mut self, t: &[usize], c: u8) {
        let r = colex_rank(t);
        self.colors[r] = c & 1;
    }

    /// The hypergraph formed by the tuples of one color.
    pub fn color_class(&self, c: u8) -> OrderedHypergraph {
        let edges = colex_tuples(self.n, self.d).into_iter().filter(|t| self.color(t) == c);
        OrderedHypergraph::new(self.n, self.d, edges).expect("color class is a valid hypergraph")
    }

    /// Reverses the vertex order.
    pub fn mirror(&self) -> EdgeColoring {
        let n = self.n;
        EdgeColoring::from_fn(n, self.d, |t| {
            let m: Vec<usize> = t.iter().rev().map(|&x| n - 1 - x).collect();
            self.color(&m)
        })
    }

    /// Swaps the two colors.
    pub fn swapped(&self) -> EdgeColoring {
        EdgeColoring { n: self.n, d: self.d, colors: self.colors.iter().map(|c| c ^ 1).collect() }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("coloring serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn colex_order_matches_rank() {
        for (n, d) in [(5, 2), (6, 3), (4, 4), (3, 2)] {
            let ts = colex_tuples(n, d);
            assert_eq!(ts.len(), binom(n, d));
            for (i, t) in ts.iter().enumerate() {
                assert_eq!(colex_rank(t), i, "{t:?}");
            }
        }
        // Graph edges come out ordered by larger endpoint, then smaller.
        assert_eq!(
            colex_tuples(4, 2),
            vec![vec![0, 1], vec![0, 2], vec![1, 2], vec![0, 3], vec![1, 3], vec![2, 3]]
        );
    }

    #[test]
    fn json_round_trip_and_validation() {
        let c = EdgeColoring::from_fn(4, 2, |t| u8::from(t[1] - t[0] > 1));
        let s = c.to_json();
        assert!(s.starts_with(r#"{"n":4,"d":2,"colors":[[0,1,0],[0,2,1]"#));
        assert_eq!(EdgeColoring::from_json(&s).unwrap(), c);
        assert!(EdgeColoring::from_json(r#"{"n":3,"d":2,"colors":[[0,1,0],[0,2,1]]}"#).is_err());
        assert!(EdgeColoring::from_json(r#"{"n":2,"d":2,"colors":[[0,1,0],[0,1,1]]}"#).is_err());
        assert!(EdgeColoring::from_json(r#"{"n":2,"d":2,"colors":[[1,0,0]]}"#).is_err());
        assert!(EdgeColoring::from_json(r#"{"n":2,"d":2,"colors":[[0,1,2]]}"#).is_err());
    }

    #[test]
    fn mirror_is_involution() {
        let c = EdgeColoring::from_fn(6, 3, |t| ((t[0] * 7 + t[1] * 3 + t[2]) % 2) as u8);
        assert_eq!(c.mirror().mirror(), c);
        assert_eq!(c.swapped().swapped(), c);
    }
}
