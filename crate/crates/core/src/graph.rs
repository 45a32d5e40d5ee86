//! Ordered graphs and hypergraphs, order-preserving containment, and the
//! structural operations (mirror, ordered sum, spreads, pendant edges).

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::embed::Embedder;
use crate::error::{Error, Result};
use crate::pattern::Pattern;

/// A simple graph on vertices `0..n` taken in their natural order.
///
/// Edges are stored as `(u, v)` with `u < v`, sorted and deduplicated.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawGraph", into = "RawGraph")]
pub struct OrderedGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct RawGraph {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl TryFrom<RawGraph> for OrderedGraph {
    type Error = Error;
    fn try_from(raw: RawGraph) -> Result<Self> {
        OrderedGraph::new(raw.n, raw.edges.into_iter().map(|[u, v]| (u, v)))
    }
}

impl From<OrderedGraph> for RawGraph {
    fn from(g: OrderedGraph) -> Self {
        RawGraph { n: g.n, edges: g.edges.into_iter().map(|(u, v)| [u, v]).collect() }
    }
}

impl OrderedGraph {
    /// Builds a graph, rejecting edges with `u >= v`, out-of-range endpoints
    /// and duplicates.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u >= v || v >= n {
                return Err(Error::BadEdge(u, v, n));
            }
            if !set.insert((u, v)) {
                return Err(Error::DuplicateEdge(vec![u, v]));
            }
        }
        Ok(OrderedGraph { n, edges: set.into_iter().collect() })
    }

    pub fn empty(n: usize) -> Self {
        OrderedGraph { n, edges: Vec::new() }
    }

    /// The complete ordered graph on `n` vertices.
    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect::<BTreeSet<_>>();
        OrderedGraph { n, edges: edges.into_iter().collect() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let key = if u < v { (u, v) } else { (v, u) };
        self.edges.binary_search(&key).is_ok()
    }

    pub fn degree(&self, x: usize) -> usize {
        self.edges.iter().filter(|&&(u, v)| u == x || v == x).count()
    }

    pub fn is_isolated(&self, x: usize) -> bool {
        self.degree(x) == 0
    }

    /// True when every vertex has degree at most one.
    pub fn is_matching(&self) -> bool {
        (0..self.n).all(|x| self.degree(x) <= 1)
    }

    /// True when every vertex has degree exactly one.
    pub fn is_perfect_matching(&self) -> bool {
        (0..self.n).all(|x| self.degree(x) == 1)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(x) = stack.pop() {
            for &(u, v) in &self.edges {
                let y = if u == x {
                    v
                } else if v == x {
                    u
                } else {
                    continue;
                };
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// The graph as a 2-uniform hypergraph.
    pub fn to_hypergraph(&self) -> OrderedHypergraph {
        OrderedHypergraph {
            n: self.n,
            d: 2,
            edges: self.edges.iter().map(|&(u, v)| vec![u, v]).collect(),
        }
    }

    pub(crate) fn edge_lists(&self) -> Vec<Vec<usize>> {
        self.edges.iter().map(|&(u, v)| vec![u, v]).collect()
    }

    /// Reverses the vertex order.
    pub fn mirror(&self) -> OrderedGraph {
        let n = self.n;
        let edges = self.edges.iter().map(|&(u, v)| (n - 1 - v, n - 1 - u)).collect::<BTreeSet<_>>();
        OrderedGraph { n, edges: edges.into_iter().collect() }
    }

    /// Graph with a copy of `self` on the first vertices followed by a copy of `other`.
    pub fn ordered_sum(&self, other: &OrderedGraph) -> OrderedGraph {
        let off = self.n;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(u, v)| (u + off, v + off)));
        OrderedGraph { n: self.n + other.n, edges }
    }

    pub fn with_isolated_left(&self) -> OrderedGraph {
        OrderedGraph::empty(1).ordered_sum(self)
    }

    pub fn with_isolated_right(&self) -> OrderedGraph {
        self.ordered_sum(&OrderedGraph::empty(1))
    }

    /// Inserts `spread.gaps()[i]` isolated vertices between vertex `i` and `i + 1`.
    pub fn spread(&self, spread: &SpreadSpec) -> Result<OrderedGraph> {
        if spread.gaps.len() != self.n.saturating_sub(1) {
            return Err(Error::SpreadLength { got: spread.gaps.len(), n: self.n });
        }
        let pos = spread.positions();
        let total = pos.last().map_or(0, |&p| p + 1);
        let edges = self.edges.iter().map(|&(u, v)| (pos[u], pos[v])).collect();
        Ok(OrderedGraph { n: total, edges })
    }

    /// Adds a new last vertex joined to the current last vertex.
    pub fn append_pendant_edge(&self) -> Result<OrderedGraph> {
        if self.n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut edges = self.edges.clone();
        edges.push((self.n - 1, self.n));
        Ok(OrderedGraph { n: self.n + 1, edges })
    }

    /// Minimum number of consecutive independent intervals covering the vertices.
    ///
    /// Greedy sweep: each interval is extended until the next vertex has a
    /// neighbour inside it. An edgeless graph (including the empty one) gives 1.
    pub fn interval_chromatic_number(&self) -> usize {
        let mut count = 1;
        let mut start = 0;
        for v in 0..self.n {
            if self.edges.iter().any(|&(a, b)| b == v && a >= start) {
                count += 1;
                start = v;
            }
        }
        count
    }

    /// True when `0..split` and `split..n` are both independent and nonempty.
    pub fn is_valid_split(&self, split: usize) -> bool {
        split >= 1 && split < self.n && self.edges.iter().all(|&(u, v)| u < split && v >= split)
    }

    /// The leftmost split position making the graph interval 2-chromatic.
    pub fn leftmost_split(&self) -> Option<usize> {
        (1..self.n).find(|&s| self.is_valid_split(s))
    }

    /// The associated 0-1 matrix at the given split (leftmost valid split by
    /// default): rows are `0..split`, columns are `split..n`.
    pub fn matrix(&self, split: Option<usize>) -> Result<Pattern> {
        let split = match split {
            Some(s) => {
                if !self.is_valid_split(s) {
                    return Err(Error::NotBipartiteSplit { split: s });
                }
                s
            }
            None => self.leftmost_split().ok_or(Error::NotInterval2Chromatic)?,
        };
        Pattern::new(
            vec![split, self.n - split],
            self.edges.iter().map(|&(u, v)| vec![u, v - split]),
        )
    }

    /// Order-preserving containment; see [`contains`].
    pub fn contains(&self, pattern: &OrderedGraph) -> Option<Vec<usize>> {
        contains(self, pattern)
    }

    /// Canonical compact JSON form.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("graph serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }
}

/// Returns the lexicographically smallest strictly increasing map from
/// `pattern` into `host` that sends edges to edges, or `None`.
pub fn contains(host: &OrderedGraph, pattern: &OrderedGraph) -> Option<Vec<usize>> {
    let n = host.n;
    let mut adj = vec![false; n * n];
    for &(u, v) in &host.edges {
        adj[u * n + v] = true;
    }
    let edges = pattern.edge_lists();
    Embedder::new(pattern.n, &edges).find(n, &[], |t| adj[t[0] * n + t[1]])
}

/// The graph whose associated matrix is `p`: rows become the first
/// `p.dims()[0]` vertices, columns the remaining ones.
pub fn graph_of_matrix(p: &Pattern) -> Result<OrderedGraph> {
    if p.dim() != 2 {
        return Err(Error::DimensionMismatch(p.dim(), 2));
    }
    let rows = p.dims()[0];
    OrderedGraph::new(rows + p.dims()[1], p.ones().iter().map(|c| (c[0], rows + c[1])))
}

/// Gap counts for a spread: `gaps[i]` isolated vertices go after vertex `i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpreadSpec {
    gaps: Vec<usize>,
}

impl SpreadSpec {
    pub fn new(gaps: Vec<usize>) -> Self {
        SpreadSpec { gaps }
    }

    /// `k` isolated vertices between every consecutive pair of `n` vertices.
    pub fn uniform(n: usize, k: usize) -> Self {
        SpreadSpec { gaps: vec![k; n.saturating_sub(1)] }
    }

    pub fn gaps(&self) -> &[usize] {
        &self.gaps
    }

    pub fn max_gap(&self) -> usize {
        self.gaps.iter().copied().max().unwrap_or(0)
    }

    /// New position of each original vertex.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = Vec::with_capacity(self.gaps.len() + 1);
        let mut at = 0;
        pos.push(0);
        for &k in &self.gaps {
            at += k + 1;
            pos.push(at);
        }
        pos
    }

    /// Largest `h` with the first `h - 1` gaps all zero.
    pub fn head(&self) -> usize {
        1 + self.gaps.iter().take_while(|&&k| k == 0).count()
    }

    /// Largest `t` with the last `t - 1` gaps all zero.
    pub fn tail(&self) -> usize {
        1 + self.gaps.iter().rev().take_while(|&&k| k == 0).count()
    }
}

/// A `d`-uniform hypergraph on `0..n` with sorted hyperedges.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawHypergraph", into = "RawHypergraph")]
pub struct OrderedHypergraph {
    n: usize,
    d: usize,
    edges: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct RawHypergraph {
    n: usize,
    d: usize,
    edges: Vec<Vec<usize>>,
}

impl TryFrom<RawHypergraph> for OrderedHypergraph {
    type Error = Error;
    fn try_from(raw: RawHypergraph) -> Result<Self> {
        OrderedHypergraph::new(raw.n, raw.d, raw.edges)
    }
}

impl From<OrderedHypergraph> for RawHypergraph {
    fn from(h: OrderedHypergraph) -> Self {
        RawHypergraph { n: h.n, d: h.d, edges: h.edges }
    }
}

impl OrderedHypergraph {
    pub fn new(n: usize, d: usize, edges: impl IntoIterator<Item = Vec<usize>>) -> Result<Self> {
        if d < 2 {
            return Err(Error::InvalidParameter(format!("uniformity must be at least 2, got {d}")));
        }
        let mut set = BTreeSet::new();
        for e in edges {
            let ok = e.len() == d && e.windows(2).all(|w| w[0] < w[1]) && e.last().is_some_and(|&x| x < n);
            if !ok {
                return Err(Error::BadHyperedge(e, d, n));
            }
            if set.contains(&e) {
                return Err(Error::DuplicateEdge(e));
            }
            set.insert(e);
        }
        Ok(OrderedHypergraph { n, d, edges: set.into_iter().collect() })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, e: &[usize]) -> bool {
        self.edges.binary_search_by(|x| x.as_slice().cmp(e)).is_ok()
    }

    /// Back to an ordinary graph when `d == 2`.
    pub fn to_graph(&self) -> Option<OrderedGraph> {
        (self.d == 2).then(|| OrderedGraph {
            n: self.n,
            edges: self.edges.iter().map(|e| (e[0], e[1])).collect(),
        })
    }

    pub fn mirror(&self) -> OrderedHypergraph {
        let n = self.n;
        let edges = self
            .edges
            .iter()
            .map(|e| e.iter().rev().map(|&x| n - 1 - x).collect::<Vec<_>>())
            .collect::<BTreeSet<_>>();
        OrderedHypergraph { n, d: self.d, edges: edges.into_iter().collect() }
    }

    /// Relabels vertex `v` to `position[v]`; `position` must be a permutation.
    pub fn relabel(&self, position: &[usize]) -> Result<OrderedHypergraph> {
        OrderedHypergraph::new(
            self.n,
            self.d,
            self.edges.iter().map(|e| {
                let mut t: Vec<usize> = e.iter().map(|&v| position[v]).collect();
                t.sort_unstable();
                t
            }),
        )
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("hypergraph serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }
}

/// Hypergraph containment with the same contract as [`contains`].
pub fn contains_hyper(host: &OrderedHypergraph, pattern: &OrderedHypergraph) -> Result<Option<Vec<usize>>> {
    if host.d != pattern.d {
        return Err(Error::UniformityMismatch(host.d, pattern.d));
    }
    let set: BTreeSet<&[usize]> = host.edges.iter().map(|e| e.as_slice()).collect();
    Ok(Embedder::new(pattern.n, &pattern.edges).find(host.n, &[], |t| set.contains(t)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, e: &[(usize, usize)]) -> OrderedGraph {
        OrderedGraph::new(n, e.iter().copied()).unwrap()
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(OrderedGraph::new(3, [(1, 1)]).is_err());
        assert!(OrderedGraph::new(3, [(2, 1)]).is_err());
        assert!(OrderedGraph::new(3, [(1, 3)]).is_err());
        assert!(matches!(OrderedGraph::new(3, [(0, 1), (0, 1)]), Err(Error::DuplicateEdge(_))));
    }

    #[test]
    fn edgeless_pattern_embeds_at_start() {
        let host = g(5, &[(0, 4)]);
        assert_eq!(contains(&host, &OrderedGraph::empty(3)), Some(vec![0, 1, 2]));
    }

    #[test]
    fn reflexive_identity_witness() {
        let x = g(5, &[(0, 2), (1, 4), (2, 3)]);
        assert_eq!(contains(&x, &x), Some(vec![0, 1, 2, 3, 4]));
    }

    #[test]
    fn mirror_examples() {
        assert_eq!(g(2, &[(0, 1)]).mirror(), g(2, &[(0, 1)]));
        assert_eq!(g(3, &[(0, 1)]).mirror(), g(3, &[(1, 2)]));
    }

    #[test]
    fn ordered_sum_examples() {
        let e = g(2, &[(0, 1)]);
        assert_eq!(e.ordered_sum(&e), g(4, &[(0, 1), (2, 3)]));
        assert_eq!(e.ordered_sum(&OrderedGraph::empty(0)), e);
        // The two six-vertex targets of the disjoint-union example.
        let left = g(3, &[(1, 2)]);
        let right = g(3, &[(0, 1)]);
        assert_eq!(left.ordered_sum(&right), g(6, &[(1, 2), (3, 4)]));
        assert_eq!(right.ordered_sum(&left), g(6, &[(0, 1), (4, 5)]));
    }

    #[test]
    fn spread_examples() {
        let e = g(2, &[(0, 1)]);
        let zero = SpreadSpec::new(vec![0]);
        assert_eq!(e.spread(&zero).unwrap(), e);
        assert_eq!((zero.head(), zero.tail()), (2, 2));
        let one = SpreadSpec::new(vec![1]);
        assert_eq!(e.spread(&one).unwrap(), g(3, &[(0, 2)]));
        assert_eq!((one.head(), one.tail()), (1, 1));
        let s = SpreadSpec::new(vec![0, 2, 0, 0]);
        assert_eq!((s.head(), s.tail()), (2, 3));
        assert!(matches!(e.spread(&SpreadSpec::new(vec![])), Err(Error::SpreadLength { .. })));
    }

    #[test]
    fn pendant_edge() {
        assert_eq!(OrderedGraph::empty(1).append_pendant_edge().unwrap(), g(2, &[(0, 1)]));
        assert_eq!(OrderedGraph::empty(0).append_pendant_edge(), Err(Error::EmptyGraph));
        let twice = g(2, &[(0, 1)]).append_pendant_edge().unwrap().append_pendant_edge().unwrap();
        assert_eq!(twice, g(4, &[(0, 1), (1, 2), (2, 3)]));
    }

    #[test]
    fn interval_chromatic_examples() {
        assert_eq!(OrderedGraph::empty(5).interval_chromatic_number(), 1);
        let path = g(4, &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(path.interval_chromatic_number(), 4);
        assert_eq!(g(6, &[(1, 2), (3, 4)]).interval_chromatic_number(), 3);
    }

    #[test]
    fn matrix_round_trip_and_errors() {
        let e = g(2, &[(0, 1)]);
        let m = e.matrix(None).unwrap();
        assert_eq!(m.dims(), &[1, 1]);
        assert_eq!(m.weight(), 1);
        assert_eq!(graph_of_matrix(&m).unwrap(), e);
        assert!(matches!(e.matrix(Some(2)), Err(Error::NotBipartiteSplit { .. })));
        let path = g(3, &[(0, 1), (1, 2)]);
        assert_eq!(path.matrix(None), Err(Error::NotInterval2Chromatic));
    }

    #[test]
    fn json_round_trip_is_byte_exact() {
        let x = g(6, &[(1, 2), (3, 4)]);
        let s = x.to_json();
        assert_eq!(s, r#"{"n":6,"edges":[[1,2],[3,4]]}"#);
        assert_eq!(OrderedGraph::from_json(&s).unwrap().to_json(), s);
        assert!(OrderedGraph::from_json(r#"{"n":2,"edges":[[1,0]]}"#).is_err());
        let h = OrderedHypergraph::new(4, 3, [vec![0, 1, 2], vec![1, 2, 3]]).unwrap();
        let s = h.to_json();
        assert_eq!(s, r#"{"n":4,"d":3,"edges":[[0,1,2],[1,2,3]]}"#);
        assert_eq!(OrderedHypergraph::from_json(&s).unwrap(), h);
    }

    #[test]
    fn hyper_containment_requires_matching_uniformity() {
        let a = OrderedHypergraph::new(4, 3, [vec![0, 1, 2]]).unwrap();
        let b = g(2, &[(0, 1)]).to_hypergraph();
        assert_eq!(contains_hyper(&a, &b), Err(Error::UniformityMismatch(3, 2)));
        let path4 = OrderedHypergraph::new(4, 3, [vec![0, 1, 2], vec![1, 2, 3]]).unwrap();
        let path3 = OrderedHypergraph::new(3, 3, [vec![0, 1, 2]]).unwrap();
        assert_eq!(contains_hyper(&path4, &path3).unwrap(), Some(vec![0, 1, 2]));
    }
}
