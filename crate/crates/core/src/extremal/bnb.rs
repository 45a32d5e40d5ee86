//! Branch and bound over cells in row-major order, ones first.
//!
//! A new one can only complete a copy of the pattern in which it is the
//! row-major last one (later cells are still empty), so each step checks the
//! copies anchored there. The first filling of maximum weight met in this
//! order is the one with the largest row-major bit string.
//!
//! Any block of consecutive slabs along the first axis of a pattern-free
//! filling is pattern-free, so exact values for fewer slabs (solved first)
//! bound what the unfilled part can still hold.
//!
//! The tree is cut at a fixed depth into independent subtrees. Every subtree
//! starts from the same incumbent (the greedy first leaf) and shares nothing
//! else, so values, witnesses and node counts do not depend on the number of
//! workers.

use rayon::prelude::*;

use super::through::Through;
use super::{check_dims, ExConfig, ExResult, ExSolver};
use crate::error::{Error, Result};
use crate::pattern::Pattern;

pub struct BranchAndBound;

const SPLIT_DEPTH: usize = 10;

impl ExSolver for BranchAndBound {
    fn name(&self) -> &'static str {
        "branch-and-bound"
    }

    fn is_exact(&self) -> bool {
        true
    }

    fn solve(&self, dims: &[usize], pattern: &Pattern, cfg: &ExConfig) -> Result<ExResult> {
        check_dims(dims, pattern)?;
        if cfg.budget == 0 {
            return Err(Error::InvalidParameter("budget must be positive".into()));
        }
        let slab: usize = dims[1..].iter().product();
        // suffix[j]: most ones in j slabs, solved smallest first.
        let mut suffix = vec![0];
        let mut used = 0;
        for j in 1..dims[0] {
            let mut sub = dims.to_vec();
            sub[0] = j;
            let left = cfg.budget.saturating_sub(used);
            let v = if left == 0 {
                j * slab
            } else {
                let r = self.search(&sub, pattern, &ExConfig { budget: left, ..*cfg }, &suffix)?;
                used += r.nodes_explored;
                if r.exact { r.value } else { j * slab }
            };
            suffix.push(v);
        }
        let left = cfg.budget.saturating_sub(used).max(1);
        let mut r = self.search(dims, pattern, &ExConfig { budget: left, ..*cfg }, &suffix)?;
        r.nodes_explored += used;
        if r.nodes_explored > cfg.budget {
            r.exact = false;
            r.nodes_explored = cfg.budget;
        }
        Ok(r)
    }
}

impl BranchAndBound {
    fn search(&self, dims: &[usize], pattern: &Pattern, cfg: &ExConfig, suffix: &[usize]) -> Result<ExResult> {
        let shape = Pattern::zeros(dims.to_vec())?;
        let slab: usize = dims[1..].iter().product();
        let tree = Tree {
            coords: shape.cells().collect(),
            through: Through::new(pattern, dims),
            slab,
            suffix: suffix[..dims[0]].iter().copied().chain([dims[0] * slab]).collect(),
        };
        let cells = tree.coords.len();
        let to_pattern = |fill: &[bool]| {
            Pattern::from_parts_unchecked(
                dims.to_vec(),
                (0..cells).filter(|&i| fill[i]).map(|i| tree.coords[i].clone()).collect(),
            )
        };

        // Greedy dive: the first leaf in search order.
        let mut greedy = vec![false; cells];
        for i in 0..cells {
            greedy[i] = true;
            if tree.completes(&greedy, i) {
                greedy[i] = false;
            }
        }
        let floor = greedy.iter().filter(|&&b| b).count();
        let mut prefix_nodes = cells as u64;

        let split = SPLIT_DEPTH.min(cells);
        let mut prefixes = Vec::new();
        let mut run = Run { tree: &tree, floor, best: None, nodes: 0, cap: u64::MAX };
        let mut fill = vec![false; cells];
        run.prefixes(&mut fill, 0, 0, split, &mut prefixes);
        prefix_nodes += run.nodes;
        if prefix_nodes > cfg.budget {
            return ExResult::checked(dims, pattern, to_pattern(&greedy), false, cfg.budget, self.name());
        }
        let remaining = cfg.budget - prefix_nodes;

        let explore = |(prefix, weight): &(Vec<bool>, usize), cap: u64| -> Sub {
            let mut fill = prefix.clone();
            fill.resize(cells, false);
            let mut run = Run { tree: &tree, floor, best: None, nodes: 0, cap };
            let done = run.dfs(&mut fill, split, *weight);
            Sub { best: run.best, nodes: run.nodes, done }
        };
        let subs: Vec<Sub> = if cfg.workers <= 1 {
            let mut used = 0;
            let mut out = Vec::new();
            for p in &prefixes {
                let s = explore(p, remaining - used.min(remaining));
                used += s.nodes;
                let stop = !s.done;
                out.push(s);
                if stop {
                    break;
                }
            }
            out
        } else {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(cfg.workers)
                .build()
                .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))?;
            pool.install(|| prefixes.par_iter().map(|p| explore(p, remaining)).collect())
        };

        // Reduce in subtree order: higher weight wins, earlier subtree breaks ties.
        let mut best: (usize, Vec<bool>) = (floor, greedy);
        let mut total = prefix_nodes;
        let mut exact = true;
        for s in subs {
            total += s.nodes;
            if !s.done || total > cfg.budget {
                exact = false;
                total = cfg.budget;
                break;
            }
            if let Some((w, f)) = s.best {
                if w > best.0 {
                    best = (w, f);
                }
            }
        }
        // The greedy leaf lies in the first subtree, which finds it (or
        // something better) itself; ties with it resolve to the same filling.
        ExResult::checked(dims, pattern, to_pattern(&best.1), exact, total, self.name())
    }
}

struct Sub {
    best: Option<(usize, Vec<bool>)>,
    nodes: u64,
    done: bool,
}

struct Tree {
    coords: Vec<Vec<usize>>,
    through: Through,
    slab: usize,
    suffix: Vec<usize>,
}

impl Tree {
    /// Most ones any completion of `fill[..depth]` can have: the slabs from
    /// any point on, together with what is still open, form a smaller
    /// pattern-free block.
    fn bound(&self, fill: &[bool], depth: usize, weight: usize) -> usize {
        let h = self.suffix.len() - 1;
        let (r, pos) = (depth / self.slab, depth % self.slab);
        if r == h {
            return weight;
        }
        let cur = fill[depth - pos..depth].iter().filter(|&&b| b).count();
        let mut before = weight - cur;
        let mut best = weight + (self.slab - pos) + self.suffix[h - r - 1];
        for a in (0..=r).rev() {
            best = best.min(before + self.suffix[h - a]);
            if a > 0 {
                before -= fill[(a - 1) * self.slab..a * self.slab].iter().filter(|&&b| b).count();
            }
        }
        best
    }

    fn completes(&self, fill: &[bool], i: usize) -> bool {
        self.through.copy_through(fill, self.through.row_major_last(), &self.coords[i])
    }
}

struct Run<'a> {
    tree: &'a Tree,
    floor: usize,
    best: Option<(usize, Vec<bool>)>,
    nodes: u64,
    cap: u64,
}

impl Run<'_> {
    fn hopeless(&self, fill: &[bool], weight: usize, depth: usize) -> bool {
        let bound = self.tree.bound(fill, depth, weight);
        bound < self.floor || self.best.as_ref().is_some_and(|(b, _)| bound <= *b)
    }

    fn prefixes(&mut self, fill: &mut Vec<bool>, depth: usize, weight: usize, stop: usize, out: &mut Vec<(Vec<bool>, usize)>) {
        if self.hopeless(fill, weight, depth) {
            return;
        }
        if depth == stop {
            out.push((fill[..depth].to_vec(), weight));
            return;
        }
        self.nodes += 2;
        fill[depth] = true;
        if !self.tree.completes(fill, depth) {
            self.prefixes(fill, depth + 1, weight + 1, stop, out);
        }
        fill[depth] = false;
        self.prefixes(fill, depth + 1, weight, stop, out);
    }

    /// Returns false when the node cap was hit.
    fn dfs(&mut self, fill: &mut Vec<bool>, depth: usize, weight: usize) -> bool {
        if self.hopeless(fill, weight, depth) {
            return true;
        }
        if depth == fill.len() {
            self.best = Some((weight, fill.clone()));
            return true;
        }
        self.nodes += 1;
        if self.nodes > self.cap {
            return false;
        }
        fill[depth] = true;
        if !self.tree.completes(fill, depth) && !self.dfs(fill, depth + 1, weight + 1) {
            return false;
        }
        fill[depth] = false;
        self.nodes += 1;
        if self.nodes > self.cap {
            return false;
        }
        self.dfs(fill, depth + 1, weight)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zarankiewicz_small() {
        let p = Pattern::all_ones(vec![2, 2]).unwrap();
        let got: Vec<usize> = (2..=5).map(|n| BranchAndBound.solve(&[n, n], &p, &ExConfig::default()).unwrap().value).collect();
        assert_eq!(got, vec![3, 6, 9, 12]);
    }

    #[test]
    fn pattern_larger_than_host_allows_everything() {
        let p = Pattern::all_ones(vec![3, 3]).unwrap();
        assert_eq!(BranchAndBound.solve(&[2, 5], &p, &ExConfig::default()).unwrap().value, 10);
    }

    #[test]
    fn tiny_budget_is_not_exact() {
        let p = Pattern::all_ones(vec![2, 2]).unwrap();
        let r = BranchAndBound.solve(&[5, 5], &p, &ExConfig { budget: 50, ..ExConfig::default() }).unwrap();
        assert!(!r.exact);
        assert!(r.value <= 12);
    }

    #[test]
    fn workers_agree() {
        let p = Pattern::from_rows(&[&[0, 1, 1, 0], &[1, 0, 0, 1], &[0, 0, 1, 0]]).unwrap();
        let one = BranchAndBound.solve(&[4, 5], &p, &ExConfig::default()).unwrap();
        let four = BranchAndBound.solve(&[4, 5], &p, &ExConfig { workers: 4, ..ExConfig::default() }).unwrap();
        assert_eq!(one, four);
    }
}
