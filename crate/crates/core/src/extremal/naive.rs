use super::{check_dims, ExConfig, ExResult, ExSolver};
use crate::error::{Error, Result};
use crate::pattern::{mat_contains, Pattern};

/// Every filling, largest first, checked with full containment.
///
/// Ties go to the filling whose row-major bit string is largest, the same
/// rule branch and bound follows.
pub struct Naive;

pub const NAIVE_MAX_CELLS: usize = 24;

impl ExSolver for Naive {
    fn name(&self) -> &'static str {
        "naive"
    }

    fn is_exact(&self) -> bool {
        true
    }

    fn solve(&self, dims: &[usize], pattern: &Pattern, _cfg: &ExConfig) -> Result<ExResult> {
        check_dims(dims, pattern)?;
        let cells: usize = dims.iter().product();
        if cells > NAIVE_MAX_CELLS {
            return Err(Error::InvalidParameter(format!("naive enumeration is limited to {NAIVE_MAX_CELLS} cells, got {cells}")));
        }
        let shape = Pattern::zeros(dims.to_vec())?;
        let coords: Vec<Vec<usize>> = shape.cells().collect();
        // Cell 0 is the most significant bit.
        let fill = |mask: u32| -> Result<Pattern> {
            Pattern::new(
                dims.to_vec(),
                (0..cells).filter(|i| mask >> (cells - 1 - i) & 1 == 1).map(|i| coords[i].clone()),
            )
        };
        let mut best: Option<(u32, u32)> = None;
        let mut checked = 0u64;
        for mask in (0..(1u32 << cells)).rev() {
            let w = mask.count_ones();
            if best.is_some_and(|(bw, _)| w <= bw) {
                continue;
            }
            checked += 1;
            if mat_contains(&fill(mask)?, pattern)?.is_none() {
                best = Some((w, mask));
            }
        }
        let (_, mask) = best.expect("the empty filling avoids any nonempty pattern");
        ExResult::checked(dims, pattern, fill(mask)?, true, checked, self.name())
    }
}
