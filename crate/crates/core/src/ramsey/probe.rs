use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::certificate::{CertMeta, Certificate};
use super::coloring::EdgeColoring;
use super::{is_free_both, Target};
use crate::error::{Error, Result};

/// Random blow-up colorings: color the complete graph with loops on `t`
/// vertices uniformly at random, replace each vertex by an interval of `s`
/// vertices, and give every edge the color of the pair (or loop) of intervals
/// it joins. Returns a lower-bound certificate on `t * s` vertices from the
/// first of `trials` samples that avoids the target in both colors.
pub fn random_blowup_probe(t: usize, s: usize, target: &Target, seed: u64, trials: usize) -> Result<Option<Certificate>> {
    if t == 0 || s == 0 || trials == 0 {
        return Err(Error::InvalidParameter("t, s and trials must be positive".into()));
    }
    if target.d() != 2 {
        return Err(Error::UniformityMismatch(target.d(), 2));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = t * s;
    for trial in 0..trials {
        // Upper triangle including the diagonal, row by row.
        let mut base = vec![0u8; t * t];
        for i in 0..t {
            for j in i..t {
                base[i * t + j] = u8::from(rng.gen_bool(0.5));
            }
        }
        let coloring = EdgeColoring::from_fn(n, 2, |e| base[(e[0] / s) * t + e[1] / s]);
        if is_free_both(&coloring, target)? {
            let meta = CertMeta::constructed(format!("random blow-up t={t} s={s} seed={seed} trial={trial}"));
            return Ok(Some(Certificate::lower_bound(target.clone(), coloring, meta)));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::OrderedGraph;
    use crate::ramsey::verify_certificate;

    #[test]
    fn single_edge_cannot_be_avoided() {
        let g = Target::from(OrderedGraph::new(2, [(0, 1)]).unwrap());
        assert_eq!(random_blowup_probe(1, 2, &g, 0, 20).unwrap(), None);
    }

    #[test]
    fn found_certificates_verify() {
        let g = Target::from(OrderedGraph::new(6, [(0, 5), (1, 4), (2, 3)]).unwrap());
        if let Some(c) = random_blowup_probe(3, 2, &g, 3, 100).unwrap() {
            assert!(verify_certificate(&c).unwrap().is_ok());
            assert_eq!(c.n, 6);
        }
    }
}
