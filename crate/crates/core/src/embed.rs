//! Order-preserving embedding search shared by graph and hypergraph containment.
//!
//! Pattern vertices are assigned in increasing order, each to the smallest
//! admissible host vertex first, so the first embedding found is the
//! lexicographically smallest one consistent with any pre-fixed vertices.

/// A pattern to embed: `k` vertices and a list of sorted hyperedges.
pub(crate) struct Embedder<'a> {
    k: usize,
    edges: &'a [Vec<usize>],
}

impl<'a> Embedder<'a> {
    pub(crate) fn new(k: usize, edges: &'a [Vec<usize>]) -> Self {
        Embedder { k, edges }
    }

    /// Finds the lexicographically smallest strictly increasing map from the
    /// pattern into `0..n` that agrees with `fixed` and sends every pattern
    /// edge to a tuple accepted by `has_edge`.
    pub(crate) fn find<F>(&self, n: usize, fixed: &[(usize, usize)], has_edge: F) -> Option<Vec<usize>>
    where
        F: Fn(&[usize]) -> bool,
    {
        let k = self.k;
        if k > n {
            return None;
        }
        let mut map: Vec<Option<usize>> = vec![None; k];
        for &(p, h) in fixed {
            if p >= k || h >= n {
                return None;
            }
            match map[p] {
                Some(existing) if existing != h => return None,
                _ => map[p] = Some(h),
            }
        }
        // Fixed vertices must leave room for everything between them.
        let mut prev: Option<(usize, usize)> = None;
        for (p, slot) in map.iter().enumerate() {
            if let Some(h) = *slot {
                if h < p || n - h < k - p {
                    return None;
                }
                if let Some((pp, ph)) = prev {
                    if h <= ph || h - ph < p - pp {
                        return None;
                    }
                }
                prev = Some((p, h));
            }
        }

        // Each edge is checked once, when its last free vertex is placed.
        let mut triggers: Vec<Vec<usize>> = vec![Vec::new(); k];
        let mut buf = Vec::new();
        for (ei, e) in self.edges.iter().enumerate() {
            match e.iter().rev().find(|&&v| map[v].is_none()) {
                Some(&v) => triggers[v].push(ei),
                None => {
                    buf.clear();
                    buf.extend(e.iter().map(|&v| map[v].unwrap()));
                    if !has_edge(&buf) {
                        return None;
                    }
                }
            }
        }
        let mut next_fixed = vec![None; k];
        let mut upcoming: Option<usize> = None;
        for p in (0..k).rev() {
            next_fixed[p] = upcoming;
            if map[p].is_some() {
                upcoming = Some(p);
            }
        }

        let mut search = Search {
            n,
            k,
            edges: self.edges,
            triggers: &triggers,
            next_fixed: &next_fixed,
            map,
            buf,
            has_edge: &has_edge,
        };
        if search.assign(0) {
            Some(search.map.into_iter().map(|x| x.unwrap()).collect())
        } else {
            None
        }
    }
}

struct Search<'a, F> {
    n: usize,
    k: usize,
    edges: &'a [Vec<usize>],
    triggers: &'a [Vec<usize>],
    next_fixed: &'a [Option<usize>],
    map: Vec<Option<usize>>,
    buf: Vec<usize>,
    has_edge: &'a F,
}

impl<F: Fn(&[usize]) -> bool> Search<'_, F> {
    fn assign(&mut self, p: usize) -> bool {
        if p == self.k {
            return true;
        }
        if self.map[p].is_some() {
            return self.assign(p + 1);
        }
        let lo = if p == 0 { 0 } else { self.map[p - 1].unwrap() + 1 };
        let hi = match self.next_fixed[p] {
            Some(q) => self.map[q].unwrap() - (q - p),
            None => self.n - (self.k - p),
        };
        for h in lo..=hi {
            self.map[p] = Some(h);
            if self.edges_ok(p) && self.assign(p + 1) {
                return true;
            }
        }
        self.map[p] = None;
        false
    }

    fn edges_ok(&mut self, p: usize) -> bool {
        for &ei in &self.triggers[p] {
            self.buf.clear();
            for &v in &self.edges[ei] {
                self.buf.push(self.map[v].unwrap());
            }
            if !(self.has_edge)(&self.buf) {
                return false;
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edgeless_pattern_takes_smallest_positions() {
        let e = Embedder::new(3, &[]);
        assert_eq!(e.find(5, &[], |_| false), Some(vec![0, 1, 2]));
    }

    #[test]
    fn fixed_vertices_respect_gaps() {
        let e = Embedder::new(3, &[]);
        // Vertex 2 at host 1 leaves no room for vertices 0 and 1.
        assert_eq!(e.find(5, &[(2, 1)], |_| true), None);
        assert_eq!(e.find(5, &[(1, 3)], |_| true), Some(vec![0, 3, 4]));
    }

    #[test]
    fn fixed_edge_is_checked() {
        let edges = vec![vec![0, 1]];
        let e = Embedder::new(2, &edges);
        assert_eq!(e.find(3, &[(0, 0), (1, 2)], |t| t == [0, 1]), None);
        assert_eq!(e.find(3, &[(0, 0), (1, 2)], |t| t == [0, 2]), Some(vec![0, 2]));
    }
}
