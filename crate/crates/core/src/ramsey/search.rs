//! Depth-first search for colorings of the complete ordered (hyper)graph in
//! which neither color class contains the target.
//!
//! Edges are colored in colex order (for graphs: by larger endpoint, then
//! smaller). After each assignment only embeddings that use the new edge are
//! tested, which is complete because every monochromatic copy is detected when
//! its last edge is colored.
//!
//! The tree is cut at a fixed depth into independent subtrees. Workers take
//! subtrees in parallel, but outcomes are assembled in subtree order so the
//! reported coloring, node counts and transcript do not depend on the number
//! of workers.

use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::certificate::{CertKind, CertMeta, Certificate};
use super::coloring::{colex_rank, colex_tuples, EdgeColoring, RED};
use super::{Target, ENGINE_VERSION};
use crate::embed::Embedder;
use crate::error::{Error, Result};

const UNSET: u8 = 2;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchConfig {
    /// Largest complete-graph size `ramsey_number` will search.
    pub max_n: usize,
    /// Node budget for each complete-graph size.
    pub budget: u64,
    pub workers: usize,
    /// Fix the color of the first edge (both colors forbid the same target).
    pub color_swap: bool,
    /// Lex-leader pruning under vertex reversal; requires a mirror-symmetric target.
    pub mirror: bool,
    /// Depth at which the search tree is cut into parallel subtrees.
    pub split_depth: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { max_n: 16, budget: 2_000_000_000, workers: 1, color_swap: true, mirror: false, split_depth: 12 }
    }
}

/// Summary of a completed exhaustive search, hashed into upper-bound certificates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Transcript {
    pub prefix_nodes: u64,
    pub subtree_nodes: Vec<u64>,
}

impl Transcript {
    pub fn total(&self) -> u64 {
        self.prefix_nodes + self.subtree_nodes.iter().sum::<u64>()
    }
}

/// Hash binding a transcript to the target, size and search settings.
pub(crate) fn transcript_hash(
    engine: &str,
    target: &Target,
    n: usize,
    color_swap: bool,
    mirror: bool,
    split_depth: usize,
    transcript: &Transcript,
) -> String {
    let mut h = Sha256::new();
    h.update(engine.as_bytes());
    h.update(b"|");
    h.update(target.to_json().as_bytes());
    h.update(format!("|{n}|{color_swap}|{mirror}|{split_depth}|{}|", transcript.prefix_nodes).as_bytes());
    for x in &transcript.subtree_nodes {
        h.update(x.to_le_bytes());
    }
    hex::encode(h.finalize())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    /// A coloring free of the target in both colors.
    Free { coloring: EdgeColoring, nodes: u64 },
    /// No free coloring exists.
    Exhausted { nodes: u64, transcript: Transcript },
    /// The budget ran out first; says nothing either way.
    Inconclusive { nodes: u64 },
}

impl SearchOutcome {
    pub fn nodes(&self) -> u64 {
        match self {
            SearchOutcome::Free { nodes, .. }
            | SearchOutcome::Exhausted { nodes, .. }
            | SearchOutcome::Inconclusive { nodes } => *nodes,
        }
    }
}

/// For a graph target: one pattern edge `(a, b)` pinned to the new host edge,
/// and the order in which the remaining pattern vertices are placed.
struct EdgePlan {
    a: usize,
    b: usize,
    free: Vec<usize>,
    /// Per pattern vertex: already-placed neighbours to intersect with.
    back: Vec<Vec<usize>>,
    /// Per pattern vertex: next pinned vertex to its right.
    next_pinned: Vec<Option<usize>>,
}

struct Engine<'a> {
    n: usize,
    d: usize,
    k: usize,
    tuples: Vec<Vec<usize>>,
    target: &'a Target,
    plans: Vec<EdgePlan>,
    mirror_of: Option<Vec<usize>>,
    color_swap: bool,
}

struct State {
    colors: Vec<u8>,
    /// Graph case: neighbour bitmasks per color.
    adj: [Vec<u64>; 2],
    map: Vec<usize>,
}

struct Ctx<'c> {
    nodes: u64,
    cap: u64,
    index: usize,
    winner: &'c AtomicUsize,
    cancelled: bool,
}

enum Step {
    Found,
    Exhausted,
    Aborted,
}

fn range_mask(lo: usize, hi: usize) -> u64 {
    // bits lo..=hi, hi < 64
    let upper = if hi >= 63 { u64::MAX } else { (1u64 << (hi + 1)) - 1 };
    upper & !((1u64 << lo) - 1)
}

impl<'a> Engine<'a> {
    fn new(n: usize, target: &'a Target, color_swap: bool, mirror: bool) -> Result<Self> {
        let d = target.d();
        if d == 2 && n > 64 {
            return Err(Error::InvalidParameter(format!("graph search supports at most 64 vertices, got {n}")));
        }
        let tuples = colex_tuples(n, d);
        let k = target.n();
        let mut plans = Vec::new();
        if d == 2 {
            for e in target.edges() {
                let (a, b) = (e[0], e[1]);
                let free: Vec<usize> = (0..k).filter(|&x| x != a && x != b).collect();
                let mut back = vec![Vec::new(); k];
                for f in target.edges() {
                    let (x, y) = (f[0], f[1]);
                    if (x, y) == (a, b) {
                        continue;
                    }
                    // Check the edge when its later-placed endpoint is placed.
                    let pinned = |v: usize| v == a || v == b;
                    if pinned(x) && pinned(y) {
                        continue;
                    }
                    if pinned(x) {
                        back[y].push(x);
                    } else if pinned(y) {
                        back[x].push(y);
                    } else {
                        back[y].push(x);
                    }
                }
                let next_pinned = (0..k)
                    .map(|i| if i < a { Some(a) } else if i < b { Some(b) } else { None })
                    .collect();
                plans.push(EdgePlan { a, b, free, back, next_pinned });
            }
        }
        let mirror_of = mirror.then(|| {
            tuples
                .iter()
                .map(|t| {
                    let m: Vec<usize> = t.iter().rev().map(|&x| n - 1 - x).collect();
                    colex_rank(&m)
                })
                .collect()
        });
        Ok(Engine { n, d, k, tuples, target, plans, mirror_of, color_swap })
    }

    fn edge_count(&self) -> usize {
        self.tuples.len()
    }

    fn fresh_state(&self) -> State {
        State {
            colors: vec![UNSET; self.edge_count()],
            adj: [vec![0; self.n], vec![0; self.n]],
            map: vec![0; self.k],
        }
    }

    fn assign(&self, st: &mut State, idx: usize, c: u8) {
        st.colors[idx] = c;
        if self.d == 2 {
            let t = &self.tuples[idx];
            st.adj[c as usize][t[0]] |= 1 << t[1];
            st.adj[c as usize][t[1]] |= 1 << t[0];
        }
    }

    fn unassign(&self, st: &mut State, idx: usize) {
        let c = st.colors[idx];
        st.colors[idx] = UNSET;
        if self.d == 2 {
            let t = &self.tuples[idx];
            st.adj[c as usize][t[0]] &= !(1 << t[1]);
            st.adj[c as usize][t[1]] &= !(1 << t[0]);
        }
    }

    /// Whether color `c` now holds a copy of the target through edge `idx`.
    fn mono_through(&self, st: &mut State, idx: usize, c: u8) -> bool {
        if self.d == 2 {
            let (u, v) = (self.tuples[idx][0], self.tuples[idx][1]);
            for plan in &self.plans {
                let (a, b) = (plan.a, plan.b);
                if a > u || b - a > v - u || self.k - 1 - b > self.n - 1 - v {
                    continue;
                }
                st.map[a] = u;
                st.map[b] = v;
                if self.place(st, plan, 0, c) {
                    return true;
                }
            }
            false
        } else {
            let t = &self.tuples[idx];
            let emb = Embedder::new(self.k, self.target.edges());
            let colors = &st.colors;
            self.target.edges().iter().any(|e| {
                let fixed: Vec<(usize, usize)> = e.iter().copied().zip(t.iter().copied()).collect();
                emb.find(self.n, &fixed, |x| colors[colex_rank(x)] == c).is_some()
            })
        }
    }

    fn place(&self, st: &mut State, plan: &EdgePlan, fi: usize, c: u8) -> bool {
        if fi == plan.free.len() {
            return true;
        }
        let i = plan.free[fi];
        let lo = if i == 0 { 0 } else { st.map[i - 1] + 1 };
        let hi = match plan.next_pinned[i] {
            Some(q) => match st.map[q].checked_sub(q - i) {
                Some(h) => h,
                None => return false,
            },
            None => self.n - (self.k - i),
        };
        if lo > hi {
            return false;
        }
        let mut mask = range_mask(lo, hi);
        for &j in &plan.back[i] {
            mask &= st.adj[c as usize][st.map[j]];
        }
        while mask != 0 {
            let h = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            st.map[i] = h;
            if self.place(st, plan, fi + 1, c) {
                return true;
            }
        }
        false
    }

    /// Lex-leader test against the mirror image (and its color swap).
    fn lex_ok(&self, st: &State) -> bool {
        let Some(mirror_of) = &self.mirror_of else { return true };
        let flips: &[u8] = if self.color_swap { &[0, 1] } else { &[0] };
        'outer: for &flip in flips {
            for (i, &j) in mirror_of.iter().enumerate() {
                let (x, y) = (st.colors[i], st.colors[j]);
                if x == UNSET || y == UNSET {
                    continue 'outer;
                }
                let y = y ^ flip;
                if x < y {
                    continue 'outer;
                }
                if x > y {
                    return false;
                }
            }
        }
        true
    }

    fn choices(&self, depth: usize) -> &'static [u8] {
        if depth == 0 && self.color_swap {
            &[RED]
        } else {
            &[0, 1]
        }
    }

    /// Explores the subtree below `depth`, stopping at depth `stop` when
    /// `collect` is given (prefix enumeration) or at a full coloring otherwise.
    fn dfs(&self, st: &mut State, depth: usize, ctx: &mut Ctx, collect: &mut Option<(usize, Vec<Vec<u8>>)>) -> Step {
        if let Some((stop, out)) = collect.as_mut() {
            if depth == *stop && depth < self.edge_count() {
                out.push(st.colors[..depth].to_vec());
                return Step::Exhausted;
            }
        }
        if depth == self.edge_count() {
            return Step::Found;
        }
        for &c in self.choices(depth) {
            ctx.nodes += 1;
            if ctx.nodes > ctx.cap {
                return Step::Aborted;
            }
            if ctx.nodes & 0xfff == 0 && self.winner_before(ctx) {
                ctx.cancelled = true;
                return Step::Aborted;
            }
            self.assign(st, depth, c);
            if !self.mono_through(st, depth, c) && self.lex_ok(st) {
                match self.dfs(st, depth + 1, ctx, collect) {
                    Step::Found => return Step::Found,
                    Step::Aborted => {
                        self.unassign(st, depth);
                        return Step::Aborted;
                    }
                    Step::Exhausted => {}
                }
            }
            self.unassign(st, depth);
        }
        Step::Exhausted
    }

    fn winner_before(&self, ctx: &Ctx) -> bool {
        ctx.winner.load(Ordering::Relaxed) < ctx.index
    }
}

struct SubResult {
    found: Option<Vec<u8>>,
    nodes: u64,
    aborted: bool,
}

/// Searches for a coloring of the complete `d`-uniform ordered hypergraph on
/// `n` vertices that is free of `target` in both colors.
pub fn exists_free_coloring(n: usize, target: &Target, cfg: &SearchConfig) -> Result<SearchOutcome> {
    if cfg.budget == 0 {
        return Err(Error::InvalidParameter("budget must be positive".into()));
    }
    if cfg.mirror && !target.is_mirror_symmetric() {
        return Err(Error::InvalidParameter("mirror symmetry requested for a target that is not mirror-symmetric".into()));
    }
    let d = target.d();
    if n < target.n() {
        return Ok(SearchOutcome::Free { coloring: EdgeColoring::monochromatic(n, d, RED), nodes: 0 });
    }
    if target.edges().is_empty() {
        // Any n >= v(target) vertices hold a copy in either color.
        return Ok(SearchOutcome::Exhausted { nodes: 0, transcript: Transcript { prefix_nodes: 0, subtree_nodes: vec![] } });
    }
    let engine = Engine::new(n, target, cfg.color_swap, cfg.mirror)?;
    let m = engine.edge_count();
    let winner = AtomicUsize::new(usize::MAX);

    // Phase 1: enumerate surviving prefixes (or finish outright on tiny instances).
    let split = cfg.split_depth.min(m);
    let mut st = engine.fresh_state();
    let mut ctx = Ctx { nodes: 0, cap: cfg.budget, index: 0, winner: &winner, cancelled: false };
    let mut collect = Some((split, Vec::new()));
    let step = engine.dfs(&mut st, 0, &mut ctx, &mut collect);
    let prefix_nodes = ctx.nodes;
    match step {
        Step::Aborted => return Ok(SearchOutcome::Inconclusive { nodes: cfg.budget }),
        Step::Found => {
            let coloring = EdgeColoring::from_colex(n, d, st.colors);
            return Ok(SearchOutcome::Free { coloring, nodes: prefix_nodes });
        }
        Step::Exhausted => {}
    }
    let prefixes = collect.take().map(|(_, p)| p).unwrap_or_default();
    let remaining = cfg.budget - prefix_nodes;

    let run = |index: usize, prefix: &[u8], cap: u64| -> SubResult {
        if winner.load(Ordering::Relaxed) < index {
            return SubResult { found: None, nodes: 0, aborted: true };
        }
        let mut st = engine.fresh_state();
        for (i, &c) in prefix.iter().enumerate() {
            engine.assign(&mut st, i, c);
        }
        let mut ctx = Ctx { nodes: 0, cap, index, winner: &winner, cancelled: false };
        let step = engine.dfs(&mut st, prefix.len(), &mut ctx, &mut None);
        match step {
            Step::Found => {
                winner.fetch_min(index, Ordering::Relaxed);
                SubResult { found: Some(st.colors), nodes: ctx.nodes, aborted: false }
            }
            Step::Exhausted => SubResult { found: None, nodes: ctx.nodes, aborted: false },
            Step::Aborted => SubResult { found: None, nodes: ctx.nodes, aborted: true },
        }
    };

    let results: Vec<SubResult> = if cfg.workers <= 1 {
        // Sequential: each subtree gets whatever budget is left.
        let mut used = 0u64;
        let mut out = Vec::with_capacity(prefixes.len());
        for (i, p) in prefixes.iter().enumerate() {
            let r = run(i, p, remaining.saturating_sub(used));
            used += r.nodes;
            let stop = r.found.is_some() || r.aborted;
            out.push(r);
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
        pool.install(|| prefixes.par_iter().enumerate().map(|(i, p)| run(i, p, remaining)).collect())
    };

    // Assemble in subtree order: identical for any worker count.
    let mut total = prefix_nodes;
    let mut subtree_nodes = Vec::with_capacity(results.len());
    for r in results {
        total += r.nodes;
        if r.aborted || total > cfg.budget {
            return Ok(SearchOutcome::Inconclusive { nodes: cfg.budget });
        }
        subtree_nodes.push(r.nodes);
        if let Some(colors) = r.found {
            return Ok(SearchOutcome::Free { coloring: EdgeColoring::from_colex(n, d, colors), nodes: total });
        }
    }
    Ok(SearchOutcome::Exhausted { nodes: total, transcript: Transcript { prefix_nodes, subtree_nodes } })
}

/// Outcome of `ramsey_number`: a bracket `lower <= R <= upper`, exact when
/// the two meet.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RamseyResult {
    pub target: Target,
    pub lower: usize,
    pub lower_certificate: Certificate,
    pub upper: Option<usize>,
    pub upper_certificate: Option<Certificate>,
    pub exact: bool,
    /// One line per searched size.
    pub log: Vec<String>,
}

/// Searches sizes upward from `v(target)` until a size with no free coloring
/// is proven, the budget runs out, or `cfg.max_n` is passed.
pub fn ramsey_number(target: &Target, cfg: &SearchConfig) -> Result<RamseyResult> {
    let k = target.n();
    let base = k.saturating_sub(1);
    let mut lower_certificate = Certificate::lower_bound(
        target.clone(),
        EdgeColoring::monochromatic(base, target.d(), RED),
        CertMeta::for_search(cfg, 0, vec!["fewer vertices than the target".into()]),
    );
    let mut lower = base + 1;
    let mut log = Vec::new();
    let mut upper = None;
    let mut upper_certificate = None;
    for n in k..=cfg.max_n {
        match exists_free_coloring(n, target, cfg)? {
            SearchOutcome::Free { coloring, nodes } => {
                log.push(format!("n={n}: free coloring found ({nodes} nodes)"));
                lower = n + 1;
                lower_certificate = Certificate::lower_bound(target.clone(), coloring, CertMeta::for_search(cfg, nodes, vec![]));
            }
            SearchOutcome::Exhausted { nodes, transcript } => {
                log.push(format!("n={n}: no free coloring ({nodes} nodes, exhaustive)"));
                upper = Some(n);
                let mut meta = CertMeta::for_search(cfg, nodes, vec![]);
                meta.transcript_hash = Some(transcript_hash(
                    ENGINE_VERSION,
                    target,
                    n,
                    cfg.color_swap,
                    cfg.mirror,
                    cfg.split_depth,
                    &transcript,
                ));
                meta.transcript = Some(transcript);
                upper_certificate = Some(Certificate {
                    kind: CertKind::UpperBound,
                    target: target.clone(),
                    n,
                    coloring: None,
                    meta,
                });
                break;
            }
            SearchOutcome::Inconclusive { nodes } => {
                log.push(format!("n={n}: inconclusive after {nodes} nodes"));
                break;
            }
        }
    }
    Ok(RamseyResult {
        target: target.clone(),
        lower,
        lower_certificate,
        exact: upper == Some(lower),
        upper,
        upper_certificate,
        log,
    })
}
