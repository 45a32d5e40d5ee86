use serde::{Deserialize, Serialize};

use super::coloring::EdgeColoring;
use super::search::{exists_free_coloring, transcript_hash, SearchConfig, SearchOutcome, Transcript};
use super::{is_free, Target, BLUE, ENGINE_VERSION, RED};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertKind {
    /// `R(target) > n`: the coloring on `n` vertices avoids the target in both colors.
    LowerBound,
    /// `R(target) <= n`: exhaustive search found no free coloring on `n` vertices.
    UpperBound,
    /// A coloring checked free of the target, with no bound attached.
    VerifiedColoring,
}

/// How the evidence was produced.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertMeta {
    pub engine: String,
    pub nodes: u64,
    pub color_swap: bool,
    pub mirror: bool,
    pub split_depth: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub transcript: Option<Transcript>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub transcript_hash: Option<String>,
}

impl CertMeta {
    /// Metadata for a coloring built by hand rather than found by search.
    pub fn constructed(note: impl Into<String>) -> Self {
        CertMeta {
            engine: ENGINE_VERSION.to_string(),
            nodes: 0,
            color_swap: false,
            mirror: false,
            split_depth: 0,
            notes: vec![note.into()],
            transcript: None,
            transcript_hash: None,
        }
    }

    pub(crate) fn for_search(cfg: &SearchConfig, nodes: u64, notes: Vec<String>) -> Self {
        CertMeta {
            engine: ENGINE_VERSION.to_string(),
            nodes,
            color_swap: cfg.color_swap,
            mirror: cfg.mirror,
            split_depth: cfg.split_depth,
            notes,
            transcript: None,
            transcript_hash: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub kind: CertKind,
    pub target: Target,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coloring: Option<EdgeColoring>,
    pub meta: CertMeta,
}

impl Certificate {
    pub fn lower_bound(target: Target, coloring: EdgeColoring, meta: CertMeta) -> Self {
        Certificate { kind: CertKind::LowerBound, target, n: coloring.n(), coloring: Some(coloring), meta }
    }

    /// The bound on `R(target)` this certificate claims, if any.
    pub fn bound(&self) -> Option<String> {
        match self.kind {
            CertKind::LowerBound => Some(format!("R >= {}", self.n + 1)),
            CertKind::UpperBound => Some(format!("R <= {}", self.n)),
            CertKind::VerifiedColoring => None,
        }
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::MalformedCertificate(e.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum Verdict {
    /// Re-checked from scratch.
    Verified { detail: String },
    /// Internally consistent, but the claim rests on the recorded search.
    Attested { detail: String },
    Failed {
        detail: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        color: Option<u8>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        witness: Option<Vec<usize>>,
    },
}

impl Verdict {
    pub fn is_ok(&self) -> bool {
        !matches!(self, Verdict::Failed { .. })
    }

    fn failed(detail: impl Into<String>) -> Self {
        Verdict::Failed { detail: detail.into(), color: None, witness: None }
    }
}

/// Checks a certificate without searching.
///
/// Colorings are rechecked for monochromatic copies in both colors. Upper
/// bounds can only be checked for consistency: the transcript must hash to
/// the recorded value and its node counts must add up. Use
/// [`rerun_upper_bound`] to repeat the search itself.
pub fn verify_certificate(cert: &Certificate) -> Result<Verdict> {
    match cert.kind {
        CertKind::LowerBound | CertKind::VerifiedColoring => {
            let Some(c) = &cert.coloring else {
                return Err(Error::MalformedCertificate("coloring missing".into()));
            };
            if c.n() != cert.n {
                return Ok(Verdict::failed(format!("coloring has {} vertices, certificate says {}", c.n(), cert.n)));
            }
            if c.d() != cert.target.d() {
                return Ok(Verdict::failed(format!("coloring is {}-uniform, target is {}-uniform", c.d(), cert.target.d())));
            }
            for color in [RED, BLUE] {
                if let Some(w) = is_free(c, &cert.target, color)? {
                    return Ok(Verdict::Failed {
                        detail: format!("monochromatic copy of the target in color {color}"),
                        color: Some(color),
                        witness: Some(w),
                    });
                }
            }
            let detail = match cert.kind {
                CertKind::LowerBound => format!("coloring of K_{} is free in both colors, so R >= {}", cert.n, cert.n + 1),
                _ => format!("coloring of K_{} is free in both colors", cert.n),
            };
            Ok(Verdict::Verified { detail })
        }
        CertKind::UpperBound => {
            if cert.coloring.is_some() {
                return Err(Error::MalformedCertificate("upper-bound certificate carries a coloring".into()));
            }
            let (Some(t), Some(h)) = (&cert.meta.transcript, &cert.meta.transcript_hash) else {
                return Err(Error::MalformedCertificate("upper-bound certificate needs a transcript and its hash".into()));
            };
            if cert.n < cert.target.n() {
                return Ok(Verdict::failed(format!("K_{} is smaller than the target", cert.n)));
            }
            if t.total() != cert.meta.nodes {
                return Ok(Verdict::failed(format!("transcript sums to {} nodes, metadata says {}", t.total(), cert.meta.nodes)));
            }
            if cert.meta.mirror && !cert.target.is_mirror_symmetric() {
                return Ok(Verdict::failed("mirror symmetry used on a target that is not mirror-symmetric"));
            }
            let m = &cert.meta;
            let expect = transcript_hash(&m.engine, &cert.target, cert.n, m.color_swap, m.mirror, m.split_depth, t);
            if &expect != h {
                return Ok(Verdict::failed("transcript hash mismatch"));
            }
            Ok(Verdict::Attested {
                detail: format!(
                    "transcript consistent ({} nodes, {} subtrees, engine {}); exhaustiveness is not re-proved without re-running the search",
                    m.nodes,
                    t.subtree_nodes.len(),
                    m.engine
                ),
            })
        }
    }
}

/// Repeats the exhaustive search behind an upper-bound certificate and
/// compares transcripts.
pub fn rerun_upper_bound(cert: &Certificate, budget: u64, workers: usize) -> Result<Verdict> {
    let first = verify_certificate(cert)?;
    if !first.is_ok() || cert.kind != CertKind::UpperBound {
        return Ok(first);
    }
    let cfg = SearchConfig {
        max_n: cert.n,
        budget,
        workers,
        color_swap: cert.meta.color_swap,
        mirror: cert.meta.mirror,
        split_depth: cert.meta.split_depth,
    };
    match exists_free_coloring(cert.n, &cert.target, &cfg)? {
        SearchOutcome::Exhausted { transcript, .. } => {
            if Some(&transcript) == cert.meta.transcript.as_ref() {
                Ok(Verdict::Verified { detail: format!("search repeated: no free coloring of K_{}, so R <= {}", cert.n, cert.n) })
            } else {
                Ok(Verdict::Verified {
                    detail: format!("search repeated with a different transcript (engine changed?): no free coloring of K_{}", cert.n),
                })
            }
        }
        SearchOutcome::Free { .. } => Ok(Verdict::failed(format!("re-run found a free coloring of K_{}", cert.n))),
        SearchOutcome::Inconclusive { nodes } => Ok(Verdict::Attested { detail: format!("re-run ran out of budget after {nodes} nodes") }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::OrderedGraph;
    use crate::ramsey::ramsey_number;

    fn path3() -> Target {
        Target::from(OrderedGraph::new(3, [(0, 1), (1, 2)]).unwrap())
    }

    #[test]
    fn emitted_certificates_verify_and_round_trip() {
        let r = ramsey_number(&path3(), &SearchConfig::default()).unwrap();
        let lo = Certificate::from_json(&r.lower_certificate.to_json_pretty()).unwrap();
        assert_eq!(lo, r.lower_certificate);
        assert!(matches!(verify_certificate(&lo).unwrap(), Verdict::Verified { .. }));
        let up = r.upper_certificate.unwrap();
        assert!(matches!(verify_certificate(&up).unwrap(), Verdict::Attested { .. }));
        assert!(matches!(rerun_upper_bound(&up, 1_000_000, 2).unwrap(), Verdict::Verified { .. }));
    }

    #[test]
    fn tampering_is_caught() {
        let r = ramsey_number(&path3(), &SearchConfig::default()).unwrap();
        let mut lo = r.lower_certificate.clone();
        let mut c = lo.coloring.take().unwrap();
        let flip = 1 - c.color(&[0, 1]);
        c.set(&[0, 1], flip);
        for t in [[0, 2], [1, 2]] {
            c.set(&t, flip);
        }
        lo.coloring = Some(c);
        match verify_certificate(&lo).unwrap() {
            Verdict::Failed { witness, .. } => assert!(witness.is_some()),
            v => panic!("{v:?}"),
        }
        let mut up = r.upper_certificate.unwrap();
        up.n += 1;
        assert!(!verify_certificate(&up).unwrap().is_ok());
    }
}
