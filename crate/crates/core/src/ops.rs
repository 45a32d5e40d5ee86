//! Operations on 0-1 matrices that preserve (near-)linearity of the extremal
//! function, the families of matrices they generate, direct sums and
//! permutation helpers.
//!
//! All operations work in any dimension. In two dimensions axis 0 indexes rows
//! and axis 1 columns; "adding a column" is an operation along axis 1.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pattern::Pattern;

/// Which end of an axis a new hyperplane goes to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum End {
    First,
    Last,
}

/// One step of the boundary-one operation: a new first or last hyperplane
/// along `axis` holding a single one at `at` (coordinates on the remaining
/// axes, in axis order), next to an existing one of the matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundaryStep {
    pub axis: usize,
    pub end: End,
    pub at: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "kebab-case")]
pub enum MatrixOp {
    /// `k - 1` empty hyperplanes between every adjacent pair along every
    /// axis, and also before the first and after the last when `boundary`.
    AddBlanks { k: usize, boundary: bool },
    /// A new boundary hyperplane with a single one next to a one of the matrix.
    AddBoundaryOne(BoundaryStep),
    /// `t` new hyperplanes along `axis` between `after` and `after + 1`, each
    /// with a single one at `at`; both flanking cells must be ones.
    AddMid { axis: usize, after: usize, t: usize, at: Vec<usize> },
    /// Grafting: `at` and `at + e_along` are ones with `at[top] == 0`. Two empty
    /// hyperplanes are inserted between them along `along`, then a new first
    /// hyperplane along `top` gets ones in the two new positions.
    Graft { along: usize, top: usize, at: Vec<usize> },
    /// Glue `other` so that the matrix's corner `(0, max, .., max)` coincides
    /// with `other`'s corner `(max, 0, .., 0)`; both corners must be ones.
    DiagAttach { other: Pattern },
}

impl MatrixOp {
    /// Name of the extremal-function lemma the operation comes from.
    pub fn lemma(&self) -> &'static str {
        match self {
            MatrixOp::AddBlanks { .. } => "add-blanks",
            MatrixOp::AddBoundaryOne(_) => "add-last",
            MatrixOp::AddMid { .. } => "add-mid",
            MatrixOp::Graft { .. } => "add-mid-up",
            MatrixOp::DiagAttach { .. } => "diag-attach",
        }
    }
}

fn precondition(lemma: &'static str, reason: impl Into<String>) -> Error {
    Error::Precondition { lemma, reason: reason.into() }
}

/// Inserts `value` at position `axis` of `rest`.
fn with_axis(rest: &[usize], axis: usize, value: usize) -> Vec<usize> {
    let mut c = rest.to_vec();
    c.insert(axis, value);
    c
}

pub fn apply_op(p: &Pattern, op: &MatrixOp) -> Result<Pattern> {
    let d = p.dim();
    let lemma = op.lemma();
    let check_axis = |axis: usize| {
        if axis >= d {
            Err(precondition(lemma, format!("axis {axis} out of range for dimension {d}")))
        } else {
            Ok(())
        }
    };
    let check_rest = |at: &[usize], axis: usize| {
        if at.len() != d - 1 {
            return Err(precondition(lemma, format!("expected {} coordinates, got {}", d - 1, at.len())));
        }
        Ok(with_axis(at, axis, 0))
    };
    match op {
        MatrixOp::AddBlanks { k, boundary } => {
            if *k == 0 {
                return Err(precondition(lemma, "k must be at least 1"));
            }
            let gap = k - 1;
            let lead = if *boundary { gap } else { 0 };
            let dims = p
                .dims()
                .iter()
                .map(|&s| s + (s - 1) * gap + 2 * lead)
                .collect::<Vec<_>>();
            let ones = p.ones().iter().map(|c| c.iter().map(|&x| lead + x * k).collect()).collect();
            Ok(Pattern::from_parts_unchecked(dims, ones))
        }
        MatrixOp::AddBoundaryOne(step) => {
            check_axis(step.axis)?;
            let mut anchor = check_rest(&step.at, step.axis)?;
            let side = p.dims()[step.axis];
            anchor[step.axis] = match step.end {
                End::First => 0,
                End::Last => side - 1,
            };
            if anchor.iter().zip(p.dims()).any(|(&x, &s)| x >= s) || !p.get(&anchor) {
                return Err(precondition(lemma, format!("no one at {anchor:?} next to the new hyperplane")));
            }
            let mut dims = p.dims().to_vec();
            dims[step.axis] += 1;
            let shift = usize::from(step.end == End::First);
            let mut ones: Vec<Vec<usize>> = p
                .ones()
                .iter()
                .map(|c| {
                    let mut c = c.clone();
                    c[step.axis] += shift;
                    c
                })
                .collect();
            ones.push(with_axis(&step.at, step.axis, if shift == 1 { 0 } else { side }));
            Ok(Pattern::from_parts_unchecked(dims, ones))
        }
        MatrixOp::AddMid { axis, after, t, at } => {
            check_axis(*axis)?;
            check_rest(at, *axis)?;
            if *after + 1 >= p.dims()[*axis] {
                return Err(precondition(lemma, format!("no hyperplane after index {after}")));
            }
            let left = with_axis(at, *axis, *after);
            let right = with_axis(at, *axis, after + 1);
            if left.iter().zip(p.dims()).any(|(&x, &s)| x >= s) || !p.get(&left) || !p.get(&right) {
                return Err(precondition(lemma, format!("cells {left:?} and {right:?} must both be ones")));
            }
            let mut dims = p.dims().to_vec();
            dims[*axis] += t;
            let mut ones: Vec<Vec<usize>> = p
                .ones()
                .iter()
                .map(|c| {
                    let mut c = c.clone();
                    if c[*axis] > *after {
                        c[*axis] += t;
                    }
                    c
                })
                .collect();
            ones.extend((1..=*t).map(|s| with_axis(at, *axis, after + s)));
            Ok(Pattern::from_parts_unchecked(dims, ones))
        }
        MatrixOp::Graft { along, top, at } => {
            check_axis(*along)?;
            check_axis(*top)?;
            if along == top {
                return Err(precondition(lemma, "`along` and `top` must be different axes"));
            }
            if at.len() != d {
                return Err(precondition(lemma, format!("expected {d} coordinates, got {}", at.len())));
            }
            if at[*top] != 0 {
                return Err(precondition(lemma, "the adjacent ones must lie in the top hyperplane"));
            }
            let mut next = at.clone();
            next[*along] += 1;
            if next.iter().zip(p.dims()).any(|(&x, &s)| x >= s) || !p.get(at) || !p.get(&next) {
                return Err(precondition(lemma, format!("cells {at:?} and {next:?} must both be ones")));
            }
            let m = at[*along];
            let mut dims = p.dims().to_vec();
            dims[*along] += 2;
            dims[*top] += 1;
            let mut ones: Vec<Vec<usize>> = p
                .ones()
                .iter()
                .map(|c| {
                    let mut c = c.clone();
                    if c[*along] > m {
                        c[*along] += 2;
                    }
                    c[*top] += 1;
                    c
                })
                .collect();
            for s in [1, 2] {
                let mut c = at.clone();
                c[*along] = m + s;
                c[*top] = 0;
                ones.push(c);
            }
            Ok(Pattern::from_parts_unchecked(dims, ones))
        }
        MatrixOp::DiagAttach { other } => diag_attach(p, other),
    }
}

fn diag_attach(p: &Pattern, q: &Pattern) -> Result<Pattern> {
    const LEMMA: &str = "diag-attach";
    if p.dim() != q.dim() {
        return Err(Error::DimensionMismatch(p.dim(), q.dim()));
    }
    let d = p.dim();
    let p_corner: Vec<usize> = (0..d).map(|a| if a == 0 { 0 } else { p.dims()[a] - 1 }).collect();
    let q_corner: Vec<usize> = (0..d).map(|a| if a == 0 { q.dims()[0] - 1 } else { 0 }).collect();
    if !p.get(&p_corner) {
        return Err(precondition(LEMMA, format!("first operand has no one at corner {p_corner:?}")));
    }
    if !q.get(&q_corner) {
        return Err(precondition(LEMMA, format!("second operand has no one at corner {q_corner:?}")));
    }
    // `q` sits above (axis 0) and beyond (other axes) `p`, sharing one cell.
    let p_off: Vec<usize> = (0..d).map(|a| if a == 0 { q.dims()[0] - 1 } else { 0 }).collect();
    let q_off: Vec<usize> = (0..d).map(|a| if a == 0 { 0 } else { p.dims()[a] - 1 }).collect();
    let dims: Vec<usize> = (0..d).map(|a| p.dims()[a] + q.dims()[a] - 1).collect();
    let shift = |c: &Vec<usize>, off: &[usize]| c.iter().zip(off).map(|(x, o)| x + o).collect::<Vec<_>>();
    let ones = p
        .ones()
        .iter()
        .map(|c| shift(c, &p_off))
        .chain(q.ones().iter().map(|c| shift(c, &q_off)))
        .collect();
    Ok(Pattern::from_parts_unchecked(dims, ones))
}

/// Direct sum: `a` in the bottom-left block, `b` in the top-right block.
///
/// In more than two dimensions `a` is offset along axis 0 and `b` along every
/// other axis.
pub fn direct_sum(a: &Pattern, b: &Pattern) -> Result<Pattern> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch(a.dim(), b.dim()));
    }
    let d = a.dim();
    let a_off: Vec<usize> = (0..d).map(|x| if x == 0 { b.dims()[0] } else { 0 }).collect();
    let b_off: Vec<usize> = (0..d).map(|x| if x == 0 { 0 } else { a.dims()[x] }).collect();
    let dims = (0..d).map(|x| a.dims()[x] + b.dims()[x]).collect();
    let shift = |c: &Vec<usize>, off: &[usize]| c.iter().zip(off).map(|(x, o)| x + o).collect::<Vec<_>>();
    let ones = a
        .ones()
        .iter()
        .map(|c| shift(c, &a_off))
        .chain(b.ones().iter().map(|c| shift(c, &b_off)))
        .collect();
    Ok(Pattern::from_parts_unchecked(dims, ones))
}

/// Replaces every hyperplane along `axis` by `j` adjacent copies of itself.
pub fn j_tuple_expand(p: &Pattern, j: usize, axis: usize) -> Result<Pattern> {
    if j == 0 {
        return Err(Error::InvalidParameter("j must be positive".into()));
    }
    if axis >= p.dim() {
        return Err(Error::InvalidParameter(format!("axis {axis} out of range")));
    }
    let mut dims = p.dims().to_vec();
    dims[axis] *= j;
    let ones = p
        .ones()
        .iter()
        .flat_map(|c| {
            (0..j).map(move |s| {
                let mut c = c.clone();
                c[axis] = c[axis] * j + s;
                c
            })
        })
        .collect();
    Ok(Pattern::from_parts_unchecked(dims, ones))
}

/// Exactly one one in every axis-parallel hyperplane of a cube.
pub fn is_permutation(p: &Pattern) -> bool {
    let k = p.dims()[0];
    if p.dims().iter().any(|&s| s != k) || p.weight() != k {
        return false;
    }
    (0..p.dim()).all(|a| {
        let mut seen = vec![false; k];
        p.ones().iter().all(|c| !std::mem::replace(&mut seen[c[a]], true))
    })
}

/// Splits a square matrix into its finest decomposition `P_1 ⊕ ... ⊕ P_m`
/// (first block bottom-left). Indecomposable input comes back as a single block.
pub fn block_decompose(p: &Pattern) -> Result<Vec<Pattern>> {
    if p.dim() != 2 || p.dims()[0] != p.dims()[1] {
        return Err(Error::NotSquare(p.dims().to_vec()));
    }
    let n = p.dims()[0];
    let mut blocks = Vec::new();
    let mut start = 0;
    for cut in 1..=n {
        // Columns start..cut form a block iff their ones sit in the rows
        // n-cut..n-start and no other column uses those rows.
        let (lo, hi) = (n - cut, n - start);
        let ok = p.ones().iter().all(|c| {
            let in_cols = c[1] >= start && c[1] < cut;
            let in_rows = c[0] >= lo && c[0] < hi;
            in_cols == in_rows || c[1] < start
        });
        if ok {
            let size = cut - start;
            let ones = p
                .ones()
                .iter()
                .filter(|c| c[1] >= start && c[1] < cut)
                .map(|c| vec![c[0] - lo, c[1] - start]);
            blocks.push(Pattern::new(vec![size, size], ones)?);
            start = cut;
        }
    }
    Ok(blocks)
}

/// `[1] ⊕ p ⊕ [1]`.
pub fn pad_with_units(p: &Pattern) -> Result<Pattern> {
    let unit = Pattern::all_ones(vec![1; p.dim()])?;
    direct_sum(&direct_sum(&unit, p)?, &unit)
}

/// Hypotheses and parameters of the five family-generating operations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "variant", rename_all = "kebab-case")]
pub enum Family {
    /// Variant 1: member `j` applies the first `j` boundary steps.
    BoundaryOnes { steps: Vec<BoundaryStep> },
    /// Variant 2: `j` new hyperplanes between two adjacent ones.
    MidInsert { axis: usize, after: usize, at: Vec<usize> },
    /// Variant 3: one graft, then `j` new hyperplanes between the grafted ones.
    Graft { along: usize, top: usize, at: Vec<usize> },
    /// Variant 4: `j` copies glued corner to corner.
    DiagChain,
    /// Variant 5: `j` empty hyperplanes between adjacent ones, no boundary blanks.
    Blanks,
}

impl Family {
    pub fn variant(&self) -> u8 {
        match self {
            Family::BoundaryOnes { .. } => 1,
            Family::MidInsert { .. } => 2,
            Family::Graft { .. } => 3,
            Family::DiagChain => 4,
            Family::Blanks => 5,
        }
    }

    /// Variant 1 on repeat: a new last hyperplane along the last axis next to
    /// the first one (in row-major order) of the current last hyperplane.
    pub fn repeat_last(p: &Pattern, count: usize) -> Result<Family> {
        let axis = p.dim() - 1;
        let side = p.dims()[axis];
        let at = p
            .ones()
            .iter()
            .find(|c| c[axis] == side - 1)
            .map(|c| {
                let mut c = c.clone();
                c.remove(axis);
                c
            })
            .ok_or_else(|| Error::FamilyHypothesis {
                variant: 1,
                reason: "no one in the last hyperplane".into(),
            })?;
        Ok(Family::BoundaryOnes { steps: vec![BoundaryStep { axis, end: End::Last, at }; count] })
    }

    /// The `j`-th member generated from `p`.
    pub fn member(&self, p: &Pattern, j: usize) -> Result<Pattern> {
        let variant = self.variant();
        let hyp = |e: Error| Error::FamilyHypothesis { variant, reason: e.to_string() };
        if j == 0 {
            return Err(Error::FamilyHypothesis { variant, reason: "j must be positive".into() });
        }
        match self {
            Family::BoundaryOnes { steps } => {
                if j > steps.len() {
                    return Err(Error::FamilyHypothesis {
                        variant,
                        reason: format!("only {} boundary steps given, member {j} requested", steps.len()),
                    });
                }
                steps[..j]
                    .iter()
                    .try_fold(p.clone(), |acc, s| apply_op(&acc, &MatrixOp::AddBoundaryOne(s.clone())))
                    .map_err(hyp)
            }
            Family::MidInsert { axis, after, at } => apply_op(
                p,
                &MatrixOp::AddMid { axis: *axis, after: *after, t: j, at: at.clone() },
            )
            .map_err(hyp),
            Family::Graft { along, top, at } => {
                let grafted = apply_op(p, &MatrixOp::Graft { along: *along, top: *top, at: at.clone() }).map_err(hyp)?;
                let mut rest = at.clone();
                rest[*top] = 0;
                let after = at[*along] + 1;
                rest.remove(*along);
                apply_op(&grafted, &MatrixOp::AddMid { axis: *along, after, t: j, at: rest }).map_err(hyp)
            }
            Family::DiagChain => {
                let mut acc = p.clone();
                for _ in 1..j {
                    acc = diag_attach(&acc, p).map_err(hyp)?;
                }
                // j = 1 must still satisfy the corner hypothesis.
                diag_attach(p, p).map_err(hyp)?;
                Ok(acc)
            }
            Family::Blanks => apply_op(p, &MatrixOp::AddBlanks { k: j + 1, boundary: false }).map_err(hyp),
        }
    }
}
