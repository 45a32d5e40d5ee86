//! Finite checks of the extremal-function inequalities attached to each
//! matrix operation. Every check evaluates both sides exactly at small sizes;
//! sizes where the budget runs out are reported as inconclusive, never as
//! passes.

use serde::{Deserialize, Serialize};

use super::ExContext;
use crate::error::{Error, Result};
use crate::ops::{apply_op, BoundaryStep, End, MatrixOp};
use crate::pattern::Pattern;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RowStatus {
    Pass,
    Fail,
    Inconclusive,
}

/// One instance: `lower <= value <= upper`, with absent sides unchecked.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaRow {
    pub case: String,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lower: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub upper: Option<u64>,
    pub status: RowStatus,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaReport {
    pub lemma: String,
    pub statement: String,
    pub rows: Vec<LemmaRow>,
    pub notes: Vec<String>,
    pub passed: usize,
    pub failed: usize,
    pub inconclusive: usize,
}

impl LemmaReport {
    fn new(lemma: &str, statement: &str) -> Self {
        LemmaReport {
            lemma: lemma.into(),
            statement: statement.into(),
            rows: Vec::new(),
            notes: Vec::new(),
            passed: 0,
            failed: 0,
            inconclusive: 0,
        }
    }

    /// No violations.
    pub fn ok(&self) -> bool {
        self.failed == 0
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{}: {}\n", self.lemma, self.statement);
        for r in &self.rows {
            let f = |x: Option<u64>| x.map_or("-".to_string(), |v| v.to_string());
            s += &format!(
                "  {:<48} n={:<2} {:>6} <= {:>6} <= {:>6}  {:?}\n",
                r.case,
                r.n,
                f(r.lower),
                f(r.value),
                f(r.upper),
                r.status
            );
        }
        for n in &self.notes {
            s += &format!("  note: {n}\n");
        }
        s += &format!("  {} passed, {} failed, {} inconclusive\n", self.passed, self.failed, self.inconclusive);
        s
    }

    fn push(&mut self, case: String, n: usize, lower: Side, value: Side, upper: Side) {
        let status = match (lower, value, upper) {
            (Side::Unknown, _, _) | (_, Side::Unknown, _) | (_, _, Side::Unknown) => RowStatus::Inconclusive,
            _ => {
                let v = value.get().unwrap_or(0);
                let lo_ok = lower.get().is_none_or(|l| l <= v);
                let hi_ok = upper.get().is_none_or(|u| v <= u);
                if lo_ok && hi_ok {
                    RowStatus::Pass
                } else {
                    RowStatus::Fail
                }
            }
        };
        match status {
            RowStatus::Pass => self.passed += 1,
            RowStatus::Fail => self.failed += 1,
            RowStatus::Inconclusive => self.inconclusive += 1,
        }
        self.rows.push(LemmaRow { case, n, lower: lower.get(), value: value.get(), upper: upper.get(), status });
    }
}

#[derive(Debug, Clone, Copy)]
enum Side {
    Absent,
    Known(u64),
    Unknown,
}

impl Side {
    fn get(self) -> Option<u64> {
        match self {
            Side::Known(v) => Some(v),
            _ => None,
        }
    }

    fn from(v: Option<usize>) -> Side {
        v.map_or(Side::Unknown, |v| Side::Known(v as u64))
    }

    fn map(self, f: impl FnOnce(u64) -> u64) -> Side {
        match self {
            Side::Known(v) => Side::Known(f(v)),
            s => s,
        }
    }

    fn zip(self, other: Side, f: impl FnOnce(u64, u64) -> u64) -> Side {
        match (self, other) {
            (Side::Known(a), Side::Known(b)) => Side::Known(f(a, b)),
            (Side::Absent, _) | (_, Side::Absent) => Side::Absent,
            _ => Side::Unknown,
        }
    }
}

/// A machine-checkable inequality about extremal functions.
pub trait LemmaCheck: Send + Sync {
    fn name(&self) -> &'static str;
    fn statement(&self) -> String;
    /// Dimension of the patterns it takes.
    fn dim(&self) -> usize;
    fn default_fixtures(&self) -> Vec<Pattern>;
    fn default_max_n(&self) -> usize;
    fn run(&self, ctx: &mut ExContext, fixtures: &[Pattern], max_n: usize) -> Result<LemmaReport>;
}

pub fn lemma_checks() -> Vec<Box<dyn LemmaCheck>> {
    vec![
        Box::new(AddBlanksCheck { name: "add-blanks", dim: 2 }),
        Box::new(AddLastCheck { name: "add-last", dim: 2 }),
        Box::new(AddMidCheck { name: "add-mid", dim: 2 }),
        Box::new(AddMidUpCheck),
        Box::new(DiagAttachCheck { name: "diag-attach", dim: 2 }),
        Box::new(SuperAdditiveCheck),
        Box::new(AddLastCheck { name: "extend-a", dim: 3 }),
        Box::new(AddMidCheck { name: "extend-b", dim: 3 }),
        Box::new(DiagAttachCheck { name: "extend-c", dim: 3 }),
        Box::new(AddBlanksCheck { name: "extend-d", dim: 3 }),
        Box::new(RectBoundCheck),
    ]
}

pub fn lemma_check(name: &str) -> Result<Box<dyn LemmaCheck>> {
    lemma_checks()
        .into_iter()
        .find(|c| c.name() == name)
        .ok_or_else(|| Error::Unknown { kind: "lemma", name: name.to_string() })
}

/// Runs one check on the given fixtures (its defaults when empty) for
/// sizes up to `max_n` (its default when `None`).
pub fn verify_lemma_inequalities(
    lemma: &str,
    fixtures: &[Pattern],
    max_n: Option<usize>,
    ctx: &mut ExContext,
) -> Result<LemmaReport> {
    let check = lemma_check(lemma)?;
    let defaults;
    let fixtures = if fixtures.is_empty() {
        defaults = check.default_fixtures();
        &defaults[..]
    } else {
        fixtures
    };
    if let Some(p) = fixtures.iter().find(|p| p.dim() != check.dim()) {
        return Err(Error::DimensionMismatch(p.dim(), check.dim()));
    }
    check.run(ctx, fixtures, max_n.unwrap_or_else(|| check.default_max_n()))
}

/// The 2 x 4 pattern with ones at (0,1), (0,2), (1,0), (1,3) against
/// `ex(b, n) <= 7b + 7n`, plus monotonicity in each side, for `b, n <= 4`.
pub fn rect_bound_check(ctx: &mut ExContext) -> Result<LemmaReport> {
    RectBoundCheck.run(ctx, &[], 4)
}

fn fixtures_2d() -> Vec<Pattern> {
    let rows = |r: &[&[u8]]| Pattern::from_rows(r).expect("fixture");
    vec![
        rows(&[&[1]]),
        rows(&[&[1, 1]]),
        rows(&[&[1], &[1]]),
        rows(&[&[1, 0], &[0, 1]]),
        rows(&[&[0, 1], &[1, 0]]),
        rows(&[&[1, 1], &[1, 0]]),
        rows(&[&[0, 1], &[1, 1]]),
        rows(&[&[1, 1], &[1, 1]]),
    ]
}

fn fixtures_3d() -> Vec<Pattern> {
    let p = |dims: Vec<usize>, ones: Vec<Vec<usize>>| Pattern::new(dims, ones).expect("fixture");
    vec![
        p(vec![1, 1, 1], vec![vec![0, 0, 0]]),
        p(vec![1, 1, 2], vec![vec![0, 0, 0], vec![0, 0, 1]]),
        p(vec![2, 2, 2], vec![vec![0, 1, 1], vec![1, 0, 0]]),
        p(vec![2, 2, 2], vec![vec![0, 0, 0], vec![1, 1, 1]]),
    ]
}

fn defaults(dim: usize) -> Vec<Pattern> {
    if dim == 2 {
        fixtures_2d()
    } else {
        fixtures_3d()
    }
}

fn short(p: &Pattern) -> String {
    p.to_json()
}

/// Every boundary step the matrix admits: for each axis and end, the first
/// one (row-major) in that boundary hyperplane.
fn boundary_steps(p: &Pattern) -> Vec<BoundaryStep> {
    let mut out = Vec::new();
    for axis in 0..p.dim() {
        for end in [End::First, End::Last] {
            let idx = if end == End::First { 0 } else { p.dims()[axis] - 1 };
            if let Some(c) = p.ones().iter().find(|c| c[axis] == idx) {
                let mut at = c.clone();
                at.remove(axis);
                out.push(BoundaryStep { axis, end, at });
            }
        }
    }
    out
}

/// First pair of ones adjacent along each axis, as (axis, after, at).
fn adjacent_pairs(p: &Pattern) -> Vec<(usize, usize, Vec<usize>)> {
    let mut out = Vec::new();
    for axis in 0..p.dim() {
        let found = p.ones().iter().find(|c| {
            let mut n = (*c).clone();
            n[axis] += 1;
            n[axis] < p.dims()[axis] && p.get(&n)
        });
        if let Some(c) = found {
            let mut at = c.clone();
            at.remove(axis);
            out.push((axis, c[axis], at));
        }
    }
    out
}

fn corners_ok(p: &Pattern, q: &Pattern) -> bool {
    apply_op(p, &MatrixOp::DiagAttach { other: q.clone() }).is_ok()
}

struct AddBlanksCheck {
    name: &'static str,
    dim: usize,
}

impl AddBlanksCheck {
    fn coeff(&self) -> u64 {
        if self.dim == 2 {
            6
        } else {
            3 * self.dim as u64
        }
    }
}

impl LemmaCheck for AddBlanksCheck {
    fn name(&self) -> &'static str {
        self.name
    }

    fn statement(&self) -> String {
        format!("ex(n,P) <= ex(n,P') <= k*ex(n,P) + {}kn, P' = P with k-1 blank hyperplanes inserted", self.coeff())
    }

    fn dim(&self) -> usize {
        self.dim
    }

    fn default_fixtures(&self) -> Vec<Pattern> {
        defaults(self.dim)
    }

    fn default_max_n(&self) -> usize {
        if self.dim == 2 {
            4
        } else {
            3
        }
    }

    fn run(&self, ctx: &mut ExContext, fixtures: &[Pattern], max_n: usize) -> Result<LemmaReport> {
        let mut rep = LemmaReport::new(self.name, &self.statement());
        rep.notes.push("both placements are checked: blanks between adjacent hyperplanes only, and also before the first and after the last".into());
        for p in fixtures {
            for k in [2usize, 3] {
                for boundary in [true, false] {
                    let q = apply_op(p, &MatrixOp::AddBlanks { k, boundary })?;
                    for n in 1..=max_n {
                        let a = Side::from(ctx.cube(n, p)?);
                        let b = Side::from(ctx.cube(n, &q)?);
                        let hi = a.map(|a| k as u64 * a + self.coeff() * (k * n) as u64);
                        let where_ = if boundary { "with boundary" } else { "interior" };
                        rep.push(format!("{} k={k} {where_}", short(p)), n, a, b, hi);
                    }
                }
            }
        }
        Ok(rep)
    }
}

struct AddLastCheck {
    name: &'static str,
    dim: usize,
}

impl LemmaCheck for AddLastCheck {
    fn name(&self) -> &'static str {
        self.name
    }

    fn statement(&self) -> String {
        if self.dim == 2 {
            "ex(n,P) <= ex(n,P') <= ex(n,P) + n, P' = P with a new boundary line holding one one next to a one of P".into()
        } else {
            format!("ex(n,P) <= ex(n,P') <= ex(n,P) + n^{}, P' = P with a new boundary hyperplane holding one one next to a one of P", self.dim - 1)
        }
    }

    fn dim(&self) -> usize {
        self.dim
    }

    fn default_fixtures(&self) -> Vec<Pattern> {
        defaults(self.dim)
    }

    fn default_max_n(&self) -> usize {
        if self.dim == 2 {
            4
        } else {
            3
        }
    }

    fn run(&self, ctx: &mut ExContext, fixtures: &[Pattern], max_n: usize) -> Result<LemmaReport> {
        let mut rep = LemmaReport::new(self.name, &self.statement());
        for p in fixtures {
            for step in boundary_steps(p) {
                let q = apply_op(p, &MatrixOp::AddBoundaryOne(step.clone()))?;
                for n in 1..=max_n {
                    let a = Side::from(ctx.cube(n, p)?);
                    let b = Side::from(ctx.cube(n, &q)?);
                    let slack = (n as u64).pow(self.dim as u32 - 1);
                    let case = format!("{} axis {} {:?} at {:?}", short(p), step.axis, step.end, step.at);
                    rep.push(case, n, a, b, a.map(|a| a + slack));
                }
            }
        }
        Ok(rep)
    }
}

struct AddMidCheck {
    name: &'static str,
    dim: usize,
}

impl LemmaCheck for AddMidCheck {
    fn name(&self) -> &'static str {
        self.name
    }

    fn statement(&self) -> String {
        "ex(n,P) <= ex(n,P') <= (t+1)*ex(n,P), P' = P with t new hyperplanes between two adjacent ones, each holding one one in line with them".into()
    }

    fn dim(&self) -> usize {
        self.dim
    }

    fn default_fixtures(&self) -> Vec<Pattern> {
        defaults(self.dim)
    }

    fn default_max_n(&self) -> usize {
        if self.dim == 2 {
            4
        } else {
            3
        }
    }

    fn run(&self, ctx: &mut ExContext, fixtures: &[Pattern], max_n: usize) -> Result<LemmaReport> {
        let mut rep = LemmaReport::new(self.name, &self.statement());
        for p in fixtures {
            for (axis, after, at) in adjacent_pairs(p) {
                for t in [1usize, 2] {
                    let q = apply_op(p, &MatrixOp::AddMid { axis, after, t, at: at.clone() })?;
                    for n in 1..=max_n {
                        let a = Side::from(ctx.cube(n, p)?);
                        let b = Side::from(ctx.cube(n, &q)?);
                        let case = format!("{} axis {axis} after {after} t={t}", short(p));
                        rep.push(case, n, a, b, a.map(|a| (t as u64 + 1) * a));
                    }
                }
            }
        }
        Ok(rep)
    }
}

struct AddMidUpCheck;

impl LemmaCheck for AddMidUpCheck {
    fn name(&self) -> &'static str {
        "add-mid-up"
    }

    fn statement(&self) -> String {
        "ex(n,P) <= ex(n,P') <= c*ex(n,P) for an unspecified absolute c, P' = P grafted above two adjacent top-row ones".into()
    }

    fn dim(&self) -> usize {
        2
    }

    fn default_fixtures(&self) -> Vec<Pattern> {
        fixtures_2d()
    }

    fn default_max_n(&self) -> usize {
        4
    }

    fn run(&self, ctx: &mut ExContext, fixtures: &[Pattern], max_n: usize) -> Result<LemmaReport> {
        let mut rep = LemmaReport::new(self.name(), &self.statement());
        let mut c_fit: u64 = 1;
        let mut c_unbounded = false;
        for p in fixtures {
            let Some(c) = p.ones().iter().find(|c| c[0] == 0 && p.get(&[0, c[1] + 1])) else {
                continue;
            };
            let q = apply_op(p, &MatrixOp::Graft { along: 1, top: 0, at: c.clone() })?;
            for n in 1..=max_n {
                let a = Side::from(ctx.cube(n, p)?);
                let b = Side::from(ctx.cube(n, &q)?);
                if let (Some(a), Some(b)) = (a.get(), b.get()) {
                    if a == 0 && b > 0 {
                        c_unbounded = true;
                    } else if a > 0 {
                        c_fit = c_fit.max(b.div_ceil(a));
                    }
                }
                rep.push(format!("{} graft at {:?}", short(p), c), n, a, b, Side::Absent);
            }
        }
        if c_unbounded {
            rep.notes.push("some instance has ex(n,P) = 0 < ex(n,P'); no multiplicative constant covers it at that size".into());
        }
        rep.notes.push(format!("smallest integer c with ex(n,P') <= c*ex(n,P) on all instances with ex(n,P) > 0: {c_fit}"));
        Ok(rep)
    }
}

struct DiagAttachCheck {
    name: &'static str,
    dim: usize,
}

impl LemmaCheck for DiagAttachCheck {
    fn name(&self) -> &'static str {
        self.name
    }

    fn statement(&self) -> String {
        "max(ex(n,P), ex(n,Q)) <= ex(n,R) <= ex(n,P) + ex(n,Q), R = P and Q glued at a shared corner one".into()
    }

    fn dim(&self) -> usize {
        self.dim
    }

    fn default_fixtures(&self) -> Vec<Pattern> {
        defaults(self.dim)
    }

    fn default_max_n(&self) -> usize {
        if self.dim == 2 {
            4
        } else {
            3
        }
    }

    fn run(&self, ctx: &mut ExContext, fixtures: &[Pattern], max_n: usize) -> Result<LemmaReport> {
        let mut rep = LemmaReport::new(self.name, &self.statement());
        for p in fixtures {
            for q in fixtures {
                if !corners_ok(p, q) {
                    continue;
                }
                let r = apply_op(p, &MatrixOp::DiagAttach { other: q.clone() })?;
                for n in 1..=max_n {
                    let a = Side::from(ctx.cube(n, p)?);
                    let b = Side::from(ctx.cube(n, q)?);
                    let v = Side::from(ctx.cube(n, &r)?);
                    let case = format!("{} with {}", short(p), short(q));
                    rep.push(case, n, a.zip(b, u64::max), v, a.zip(b, |x, y| x + y));
                }
            }
        }
        Ok(rep)
    }
}

struct SuperAdditiveCheck;

impl LemmaCheck for SuperAdditiveCheck {
    fn name(&self) -> &'static str {
        "super-additivity"
    }

    fn statement(&self) -> String {
        "ex(m,P) + ex(n,P) <= ex(m+n,P)".into()
    }

    fn dim(&self) -> usize {
        2
    }

    fn default_fixtures(&self) -> Vec<Pattern> {
        fixtures_2d()
    }

    fn default_max_n(&self) -> usize {
        5
    }

    fn run(&self, ctx: &mut ExContext, fixtures: &[Pattern], max_n: usize) -> Result<LemmaReport> {
        let mut rep = LemmaReport::new(self.name(), &self.statement());
        for p in fixtures {
            for total in 2..=max_n {
                for m in 1..=total / 2 {
                    let n = total - m;
                    let a = Side::from(ctx.cube(m, p)?);
                    let b = Side::from(ctx.cube(n, p)?);
                    let v = Side::from(ctx.cube(total, p)?);
                    rep.push(format!("{} m={m}", short(p)), n, a.zip(b, |x, y| x + y), v, Side::Absent);
                }
            }
        }
        Ok(rep)
    }
}

struct RectBoundCheck;

impl LemmaCheck for RectBoundCheck {
    fn name(&self) -> &'static str {
        "rect-bound"
    }

    fn statement(&self) -> String {
        "ex(b,n,R) <= 7b + 7n for R = [[0,1,1,0],[1,0,0,1]], and ex(b,n,R) is monotone in b and n".into()
    }

    fn dim(&self) -> usize {
        2
    }

    fn default_fixtures(&self) -> Vec<Pattern> {
        vec![Pattern::from_rows(&[&[0, 1, 1, 0], &[1, 0, 0, 1]]).expect("fixture")]
    }

    fn default_max_n(&self) -> usize {
        4
    }

    fn run(&self, ctx: &mut ExContext, fixtures: &[Pattern], max_n: usize) -> Result<LemmaReport> {
        let mut rep = LemmaReport::new(self.name(), &self.statement());
        let defaults;
        let fixtures = if fixtures.is_empty() {
            defaults = self.default_fixtures();
            &defaults[..]
        } else {
            fixtures
        };
        for p in fixtures {
            for b in 1..=max_n {
                for n in 1..=max_n {
                    let v = Side::from(ctx.exact(&[b, n], p)?);
                    rep.push(format!("{} b={b}", short(p)), n, Side::Absent, v, Side::Known(7 * (b + n) as u64));
                    if b > 1 {
                        let prev = Side::from(ctx.exact(&[b - 1, n], p)?);
                        rep.push(format!("{} monotone b={}->{b}", short(p), b - 1), n, prev, v, Side::Absent);
                    }
                    if n > 1 {
                        let prev = Side::from(ctx.exact(&[b, n - 1], p)?);
                        rep.push(format!("{} monotone n={}->{n}", short(p), n - 1), n, prev, v, Side::Absent);
                    }
                }
            }
        }
        Ok(rep)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn add_last_on_unit_is_tight() {
        let mut ctx = ExContext::default();
        let unit = Pattern::all_ones(vec![1, 1]).unwrap();
        let rep = verify_lemma_inequalities("add-last", &[unit], Some(4), &mut ctx).unwrap();
        assert!(rep.ok());
        // [1 1]: ex = n, matching the bound 0 + n.
        let row = rep.rows.iter().find(|r| r.case.contains("axis 1") && r.n == 4).unwrap();
        assert_eq!((row.value, row.upper), (Some(4), Some(4)));
    }

    #[test]
    fn registry_names_are_unique() {
        let names: Vec<_> = lemma_checks().iter().map(|c| c.name()).collect();
        let mut sorted = names.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), names.len());
        assert!(lemma_check("diag-attach").is_ok());
    }
}
