//! Colorings that witness lower bounds, each returned as a certificate for
//! the graph it avoids. Edges the construction leaves free are colored red.

use crate::error::{Error, Result};
use crate::graph::{OrderedGraph, SpreadSpec};
use crate::ramsey::{verify_certificate, CertKind, CertMeta, Certificate, EdgeColoring, Target, BLUE, RED};

use super::{inner_edge_pair, outer_edge_pair};

/// Checks an input certificate and returns its graph target and coloring.
fn accept(cert: &Certificate) -> Result<(OrderedGraph, &EdgeColoring)> {
    if cert.kind == CertKind::UpperBound {
        return Err(Error::MalformedCertificate("a coloring certificate is required".into()));
    }
    let verdict = verify_certificate(cert)?;
    if !verdict.is_ok() {
        return Err(Error::MalformedCertificate(format!("input certificate does not verify: {verdict:?}")));
    }
    let g = cert
        .target
        .as_graph()
        .ok_or_else(|| Error::UniformityMismatch(cert.target.d(), 2))?;
    Ok((g, cert.coloring.as_ref().expect("verified certificates carry a coloring")))
}

fn certify(target: OrderedGraph, coloring: EdgeColoring, note: String) -> Certificate {
    Certificate::lower_bound(Target::from(target), coloring, CertMeta::constructed(note))
}

/// For colorings avoiding `G` on `k` vertices and `H` on `l` vertices: a
/// coloring on `k + 1 + l` vertices avoiding `G + H`. The first `k`
/// vertices copy the first coloring, the last `l` the second.
pub fn disjoint_union_coloring(g_cert: &Certificate, h_cert: &Certificate) -> Result<Certificate> {
    let (g, cg) = accept(g_cert)?;
    let (h, ch) = accept(h_cert)?;
    let (k, l) = (cg.n(), ch.n());
    let coloring = EdgeColoring::from_fn(k + 1 + l, 2, |e| {
        let (u, v) = (e[0], e[1]);
        if v < k {
            cg.color(&[u, v])
        } else if u > k {
            ch.color(&[u - k - 1, v - k - 1])
        } else {
            RED
        }
    });
    Ok(certify(g.ordered_sum(&h), coloring, format!("ordered sum: {k} + 1 + {l} vertices")))
}

/// For a coloring `c` avoiding `G` on `m` vertices and `k >= 2`: intervals
/// `I_1..I_m` of `k - 1` vertices with every edge between `I_i` and `I_j`
/// colored `c(ij)`. It avoids `G` with `k` isolated vertices inserted
/// between every pair of consecutive vertices.
pub fn spread_blowup_coloring(g_cert: &Certificate, k: usize) -> Result<Certificate> {
    if k < 2 {
        return Err(Error::InvalidParameter("spread blow-up needs k >= 2".into()));
    }
    let (g, c) = accept(g_cert)?;
    let s = k - 1;
    let coloring = EdgeColoring::from_fn(c.n() * s, 2, |e| {
        let (i, j) = (e[0] / s, e[1] / s);
        if i == j {
            RED
        } else {
            c.color(&[i, j])
        }
    });
    let target = g.spread(&SpreadSpec::uniform(g.n(), k))?;
    Ok(certify(target, coloring, format!("spread blow-up: {} intervals of {s}", c.n())))
}

/// For a coloring avoiding `G` (on `v(G) = n >= 2` vertices, last vertex not
/// isolated) on `a` vertices: `a + n` vertices where the first `a` copy the
/// coloring, the last `n` span a red clique and every edge between the two
/// parts is blue. It avoids `G` with a pendant edge appended.
pub fn pendant_lower_coloring(g_cert: &Certificate) -> Result<Certificate> {
    let (g, c) = accept(g_cert)?;
    let n = g.n();
    if n < 2 || g.is_isolated(n - 1) {
        return Err(Error::InvalidParameter("needs at least 2 vertices and a non-isolated last vertex".into()));
    }
    let a = c.n();
    let coloring = EdgeColoring::from_fn(a + n, 2, |e| {
        let (u, v) = (e[0], e[1]);
        if v < a {
            c.color(&[u, v])
        } else if u >= a {
            RED
        } else {
            BLUE
        }
    });
    Ok(certify(g.append_pendant_edge()?, coloring, format!("pendant edge: {a} + {n} vertices")))
}

/// `blocks` consecutive blocks of `size` vertices, red inside blocks and
/// blue between them.
pub fn block_product_coloring(blocks: usize, size: usize) -> EdgeColoring {
    EdgeColoring::from_fn(blocks * size, 2, |e| if e[0] / size == e[1] / size { RED } else { BLUE })
}

/// Seven vertices: red triangle on `{1,2,3}`, blue triangle on `{3,4,5}`,
/// every other edge red.
pub fn inner_edge_pair_coloring() -> Certificate {
    let coloring = EdgeColoring::from_fn(7, 2, |e| if e[0] >= 3 && e[1] <= 5 { BLUE } else { RED });
    certify(inner_edge_pair(), coloring, "two one-colored triangles sharing a vertex; other edges red".into())
}

/// Nine vertices: red clique on `0..=4`, blue clique on `4..=8`, every other
/// edge red.
pub fn outer_edge_pair_coloring() -> Certificate {
    let coloring = EdgeColoring::from_fn(9, 2, |e| if e[0] >= 4 { BLUE } else { RED });
    certify(outer_edge_pair(), coloring, "two one-colored 5-cliques sharing a vertex; other edges red".into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::monotone_path;
    use crate::ramsey::is_free_both;

    #[test]
    fn edge_pair_colorings_avoid_their_targets() {
        for c in [inner_edge_pair_coloring(), outer_edge_pair_coloring()] {
            assert!(verify_certificate(&c).unwrap().is_ok());
        }
        assert_eq!(inner_edge_pair_coloring().n, 7);
        assert_eq!(outer_edge_pair_coloring().n, 9);
    }

    #[test]
    fn block_products_avoid_monotone_paths() {
        for n in [3, 4] {
            let c = block_product_coloring(n - 1, n - 1);
            assert_eq!(c.n(), (n - 1) * (n - 1));
            assert!(is_free_both(&c, &Target::from(monotone_path(n).unwrap())).unwrap());
        }
    }

    #[test]
    fn derived_colorings_verify() {
        let edge = Target::from(monotone_path(2).unwrap());
        let base = Certificate::lower_bound(edge, EdgeColoring::monochromatic(1, 2, RED), CertMeta::constructed("K_1"));
        let p3 = Target::from(monotone_path(3).unwrap());
        let p3_cert = Certificate::lower_bound(p3, block_product_coloring(2, 2), CertMeta::constructed("blocks"));
        for c in [
            disjoint_union_coloring(&base, &p3_cert).unwrap(),
            spread_blowup_coloring(&p3_cert, 2).unwrap(),
            pendant_lower_coloring(&p3_cert).unwrap(),
        ] {
            assert!(verify_certificate(&c).unwrap().is_ok(), "{c:?}");
        }
    }
}
