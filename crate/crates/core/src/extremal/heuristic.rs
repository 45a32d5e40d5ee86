use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::through::Through;
use super::{check_dims, ExConfig, ExResult, ExSolver};
use crate::error::Result;
use crate::pattern::Pattern;

/// Seeded random local search: add random cells when no copy appears, and
/// now and then drop a one to move on. Gives lower bounds only.
pub struct LocalSearch;

impl ExSolver for LocalSearch {
    fn name(&self) -> &'static str {
        "local-search"
    }

    fn is_exact(&self) -> bool {
        false
    }

    fn solve(&self, dims: &[usize], pattern: &Pattern, cfg: &ExConfig) -> Result<ExResult> {
        check_dims(dims, pattern)?;
        let shape = Pattern::zeros(dims.to_vec())?;
        let coords: Vec<Vec<usize>> = shape.cells().collect();
        let cells = coords.len();
        let through = Through::new(pattern, dims);
        let blocked = |fill: &[bool], i: usize| (0..pattern.weight()).any(|a| through.copy_through(fill, a, &coords[i]));

        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        let mut fill = vec![false; cells];
        let mut weight = 0;
        let mut best = (0, fill.clone());
        for _ in 0..cfg.iterations {
            let i = rng.gen_range(0..cells);
            if !fill[i] {
                fill[i] = true;
                if blocked(&fill, i) {
                    fill[i] = false;
                    continue;
                }
                weight += 1;
                if weight > best.0 {
                    best = (weight, fill.clone());
                }
            } else if rng.gen_bool(0.1) {
                fill[i] = false;
                weight -= 1;
            }
        }
        let witness = Pattern::from_parts_unchecked(
            dims.to_vec(),
            (0..cells).filter(|&i| best.1[i]).map(|i| coords[i].clone()).collect(),
        );
        ExResult::checked(dims, pattern, witness, false, cfg.iterations, self.name())
    }
}
