//! Named ordered graphs, hypergraphs, matrices and lower-bound colorings.

mod colorings;
mod registry;

pub use colorings::{
    block_product_coloring, disjoint_union_coloring, inner_edge_pair_coloring, outer_edge_pair_coloring, pendant_lower_coloring,
    spread_blowup_coloring,
};
pub use registry::{construction, constructions, Construction, GenArgs, Generated};

use crate::error::{Error, Result};
use crate::graph::{graph_of_matrix, OrderedGraph, OrderedHypergraph};
use crate::ops::{BoundaryStep, End, Family};
use crate::pattern::Pattern;

/// Vertices `0..n`, edges `(j, j+1)`.
pub fn monotone_path(n: usize) -> Result<OrderedGraph> {
    if n == 0 {
        return Err(Error::InvalidParameter("monotone path needs at least one vertex".into()));
    }
    OrderedGraph::new(n, (1..n).map(|j| (j - 1, j)))
}

/// The alternating ordering of the cycle on `len = 2k` vertices: `a_1..a_k`
/// come first, then `b_k..b_1`, and `a_i b_j` is an edge when `|i - j| = 1`,
/// plus `a_1 b_1` and `a_k b_k`.
pub fn alternating_cycle(len: usize) -> Result<OrderedGraph> {
    if !len.is_multiple_of(2) || len < 4 {
        return Err(Error::InvalidParameter(format!("alternating cycle needs an even length of at least 4, got {len}")));
    }
    let k = len / 2;
    let a = |i: usize| i - 1;
    let b = |j: usize| len - j;
    let mut edges = vec![(a(1), b(1)), (a(k), b(k))];
    for i in 1..=k {
        for j in [i.wrapping_sub(1), i + 1] {
            if (1..=k).contains(&j) {
                edges.push((a(i), b(j)));
            }
        }
    }
    edges.sort();
    edges.dedup();
    OrderedGraph::new(len, edges)
}

/// `m` fully nested edges on `2m` vertices: `(j, 2m - 1 - j)`.
pub fn nested_matching(m: usize) -> Result<OrderedGraph> {
    if m == 0 {
        return Err(Error::InvalidParameter("nested matching needs at least one edge".into()));
    }
    OrderedGraph::new(2 * m, (0..m).map(|j| (j, 2 * m - 1 - j)))
}

/// On vertices `0..=n` (odd `n`), the edges `(i, n - i)` for
/// `1 <= i <= (n-1)/2`; vertices `0` and `n` stay isolated.
pub fn centered_matching(n: usize) -> Result<OrderedGraph> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!("centered matching needs odd n >= 3, got {n}")));
    }
    OrderedGraph::new(n + 1, (1..=(n - 1) / 2).map(|i| (i, n - i)))
}

/// Bit reversal on `log2(n)` bits.
pub fn vdc_permutation(n: usize) -> Result<Vec<usize>> {
    if !n.is_power_of_two() {
        return Err(Error::NotPowerOfTwo(n));
    }
    let bits = n.trailing_zeros();
    Ok((0..n)
        .map(|i| if bits == 0 { 0 } else { i.reverse_bits() >> (usize::BITS - bits) })
        .collect())
}

/// The matching on `2n` vertices joining `i` to `n + pi(i)`, `pi` the bit
/// reversal permutation.
pub fn vdc_matching(n: usize) -> Result<OrderedGraph> {
    let pi = vdc_permutation(n)?;
    OrderedGraph::new(2 * n, (0..n).map(|i| (i, n + pi[i])))
}

/// The 0-1 matrix of a permutation (column `j` has its one in row `perm[j]`)
/// as the permutation matrix of the bit reversal.
pub fn vdc_permutation_matrix(n: usize) -> Result<Pattern> {
    Pattern::from_permutation(&vdc_permutation(n)?)
}

/// Largest `| |pi(I) ∩ J| - |I||J|/n |` over all pairs of nonempty intervals.
pub fn interval_discrepancy(perm: &[usize]) -> f64 {
    let n = perm.len();
    // prefix[i][j] = #{x < i : perm[x] < j}
    let mut prefix = vec![vec![0i64; n + 1]; n + 1];
    for i in 0..n {
        for j in 0..=n {
            prefix[i + 1][j] = prefix[i][j] + i64::from(perm[i] < j);
        }
    }
    let mut worst: f64 = 0.0;
    for i0 in 0..n {
        for i1 in i0 + 1..=n {
            for j0 in 0..n {
                for j1 in j0 + 1..=n {
                    let count = prefix[i1][j1] - prefix[i0][j1] - prefix[i1][j0] + prefix[i0][j0];
                    let expect = ((i1 - i0) * (j1 - j0)) as f64 / n as f64;
                    worst = worst.max((count as f64 - expect).abs());
                }
            }
        }
    }
    worst
}

/// Each vertex becomes an interval of `b` vertices and each edge `b` nested
/// edges between its two intervals.
pub fn blowup_matching(m: &OrderedGraph, b: usize) -> Result<OrderedGraph> {
    if !m.is_perfect_matching() {
        return Err(Error::NotMatching);
    }
    if b == 0 {
        return Err(Error::InvalidParameter("blow-up factor must be positive".into()));
    }
    OrderedGraph::new(
        m.n() * b,
        m.edges().iter().flat_map(|&(u, v)| (0..b).map(move |i| (u * b + i, v * b + b - 1 - i))),
    )
}

/// Edges `{j, .., j + d - 1}`.
pub fn tight_hyperpath(n: usize, d: usize) -> Result<OrderedHypergraph> {
    if d < 2 || n < d {
        return Err(Error::InvalidParameter(format!("tight hyperpath needs 2 <= d <= n, got n={n} d={d}")));
    }
    OrderedHypergraph::new(n, d, (0..=n - d).map(|j| (j..j + d).collect()))
}

/// Path vertices listed by position in the alternating d-partite ordering:
/// `0, d, 2d, .., 1, d+1, ..`.
pub fn alternating_order(n: usize, d: usize) -> Result<Vec<usize>> {
    if d < 2 || !n.is_multiple_of(d) || n == 0 {
        return Err(Error::InvalidParameter(format!("alternating ordering needs d >= 2 dividing n, got n={n} d={d}")));
    }
    let m = n / d;
    Ok((0..d).flat_map(|r| (0..m).map(move |q| q * d + r)).collect())
}

/// The tight hyperpath with path vertex `alternating_order[p]` placed at position `p`.
pub fn alternating_hyperpath(n: usize, d: usize) -> Result<OrderedHypergraph> {
    let order = alternating_order(n, d)?;
    let mut position = vec![0; n];
    for (p, &v) in order.iter().enumerate() {
        position[v] = p;
    }
    tight_hyperpath(n, d)?.relabel(&position)
}

/// The d-dimensional matrix of the alternating hyperpath: side `n/d`, one
/// one per hyperedge. Consecutive ones differ by a unit vector, cycling
/// through the axes, from the origin to the far corner.
pub fn hyperpath_tensor(n: usize, d: usize) -> Result<Pattern> {
    alternating_order(n, d)?;
    let m = n / d;
    let ones = (0..=n - d).map(|j| {
        let mut c = vec![0; d];
        for v in j..j + d {
            c[v % d] = v / d;
        }
        c
    });
    Pattern::new(vec![m; d], ones)
}

/// The `k x k` staircase with ones at `(i, i)` and `(i + 1, i)`, read as an
/// ordered graph. This follows the usual definition of the alternating path
/// from the literature on ordered Ramsey numbers.
pub fn alternating_path(k: usize) -> Result<OrderedGraph> {
    if k == 0 {
        return Err(Error::InvalidParameter("alternating path needs k >= 1".into()));
    }
    let ones = (0..k).flat_map(|i| {
        let mut v = vec![vec![i, i]];
        if i + 1 < k {
            v.push(vec![i + 1, i]);
        }
        v
    });
    graph_of_matrix(&Pattern::new(vec![k, k], ones)?)
}

/// The 3 x 4 matrix
/// ```text
/// 0 1 1 0
/// 1 0 0 1
/// 0 0 1 0
/// ```
pub fn matrix_f() -> Pattern {
    Pattern::from_rows(&[&[0, 1, 1, 0], &[1, 0, 0, 1], &[0, 0, 1, 0]]).expect("valid matrix")
}

/// Six vertices, edges `(1,2)` and `(3,4)`; its Ramsey number is 8.
pub fn inner_edge_pair() -> OrderedGraph {
    OrderedGraph::new(6, [(1, 2), (3, 4)]).expect("valid graph")
}

/// Six vertices, edges `(0,1)` and `(4,5)`; its Ramsey number is 10.
pub fn outer_edge_pair() -> OrderedGraph {
    OrderedGraph::new(6, [(0, 1), (4, 5)]).expect("valid graph")
}

/// The family of `matrix_f` generated by one of the five operations,
/// indexed by member number `j`.
pub fn f_family(variant: u8) -> Result<Family> {
    Ok(match variant {
        1 => Family::BoundaryOnes {
            steps: vec![
                BoundaryStep { axis: 1, end: End::Last, at: vec![1] },
                BoundaryStep { axis: 0, end: End::Last, at: vec![2] },
                BoundaryStep { axis: 0, end: End::First, at: vec![2] },
            ],
        },
        2 => Family::MidInsert { axis: 1, after: 1, at: vec![0] },
        3 => Family::Graft { along: 1, top: 0, at: vec![0, 1] },
        4 => Family::DiagChain,
        5 => Family::Blanks,
        v => return Err(Error::InvalidParameter(format!("family variant must be 1..=5, got {v}"))),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alternating_cycle_eight() {
        let g = alternating_cycle(8).unwrap();
        let mut want = [(0, 7), (0, 6), (1, 7), (1, 5), (2, 6), (2, 4), (3, 5), (3, 4)];
        want.sort();
        assert_eq!(g.edges(), &want[..]);
        assert!((0..8).all(|v| g.degree(v) == 2));
        assert!(g.is_connected());
        assert_eq!(g.interval_chromatic_number(), 2);
    }

    #[test]
    fn alternating_cycle_four_is_all_ones() {
        let m = alternating_cycle(4).unwrap().matrix(None).unwrap();
        assert_eq!(m, Pattern::all_ones(vec![2, 2]).unwrap());
    }

    #[test]
    fn vdc_small() {
        assert_eq!(vdc_permutation(1).unwrap(), vec![0]);
        assert_eq!(vdc_permutation(2).unwrap(), vec![0, 1]);
        assert_eq!(vdc_permutation(4).unwrap(), vec![0, 2, 1, 3]);
        assert_eq!(vdc_matching(2).unwrap().edges(), &[(0, 2), (1, 3)]);
        assert!(vdc_permutation(6).is_err());
    }

    #[test]
    fn matchings() {
        assert_eq!(nested_matching(2).unwrap().edges(), &[(0, 3), (1, 2)]);
        let single = OrderedGraph::new(2, [(0, 1)]).unwrap();
        assert_eq!(blowup_matching(&single, 2).unwrap(), nested_matching(2).unwrap());
        assert_eq!(blowup_matching(&single, 1).unwrap(), single);
        let c = centered_matching(5).unwrap();
        assert_eq!((c.n(), c.edges()), (6, &[(1, 4), (2, 3)][..]));
        assert!(centered_matching(4).is_err());
    }

    #[test]
    fn hyperpaths() {
        assert_eq!(tight_hyperpath(4, 3).unwrap().edges(), &[vec![0, 1, 2], vec![1, 2, 3]]);
        assert_eq!(alternating_order(9, 3).unwrap(), vec![0, 3, 6, 1, 4, 7, 2, 5, 8]);
        let t = hyperpath_tensor(9, 3).unwrap();
        assert_eq!(t.dims(), &[3, 3, 3]);
        assert_eq!(t.weight(), 7);
        let a = alternating_hyperpath(9, 3).unwrap();
        // The tensor is the hyperpath read part by part.
        let from_graph: Vec<Vec<usize>> = a.edges().iter().map(|e| e.iter().map(|v| v % 3).collect()).collect();
        let mut tensor_ones = t.ones().to_vec();
        tensor_ones.sort();
        let mut g = from_graph;
        g.sort();
        assert_eq!(g, tensor_ones);
    }

    #[test]
    fn staircase_path() {
        let g = alternating_path(3).unwrap();
        assert_eq!(g.edges(), &[(0, 3), (1, 3), (1, 4), (2, 4), (2, 5)]);
    }
}
