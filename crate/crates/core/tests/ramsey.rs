use itertools::Itertools;
use ordram::graph::OrderedGraph;
use ordram::ramsey::{ramsey_number, verify_certificate, EdgeColoring, SearchConfig, Target, BLUE, RED};

fn has_mono_copy(n: usize, color: &dyn Fn(usize, usize) -> bool, g: &OrderedGraph) -> bool {
    (0..n).combinations(g.n()).any(|f| {
        let cs: Vec<bool> = g.edges().iter().map(|&(u, v)| color(f[u], f[v])).collect();
        cs.windows(2).all(|w| w[0] == w[1])
    })
}

/// Smallest n (up to `cap`) where every 2-coloring of K_n has a one-colored copy.
fn brute_ramsey(g: &OrderedGraph, cap: usize) -> Option<usize> {
    (1..=cap).find(|&n| {
        let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
        (0u64..1 << pairs.len()).all(|mask| {
            let color = |u: usize, v: usize| mask >> pairs.iter().position(|&p| p == (u, v)).unwrap() & 1 == 1;
            has_mono_copy(n, &color, g)
        })
    })
}

fn small_graphs() -> Vec<OrderedGraph> {
    let mut out = vec![OrderedGraph::new(4, [(0, 1), (2, 3)]).unwrap(), OrderedGraph::new(4, [(0, 3), (1, 2)]).unwrap()];
    for n in 1..=3 {
        let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
        for mask in 0u32..1 << pairs.len() {
            out.push(OrderedGraph::new(n, pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e)).unwrap());
        }
    }
    out
}

#[test]
fn search_matches_enumeration_with_every_symmetry_option() {
    for g in small_graphs() {
        let want = brute_ramsey(&g, 6);
        let t = Target::from(&g);
        for (swap, mirror) in [(false, false), (true, false), (true, true), (false, true)] {
            if mirror && !t.is_mirror_symmetric() {
                continue;
            }
            let cfg = SearchConfig { max_n: 6, color_swap: swap, mirror, ..SearchConfig::default() };
            let r = ramsey_number(&t, &cfg).unwrap();
            match want {
                Some(w) => assert!(r.exact && r.lower == w, "{g:?} swap={swap} mirror={mirror}: {r:?}"),
                None => assert!(!r.exact && r.lower >= 6, "{g:?}: {r:?}"),
            }
            assert!(verify_certificate(&r.lower_certificate).unwrap().is_ok());
            if let Some(up) = &r.upper_certificate {
                assert!(verify_certificate(up).unwrap().is_ok());
            }
        }
    }
}

#[test]
fn lower_certificate_colorings_are_free_by_enumeration() {
    for g in small_graphs() {
        let r = ramsey_number(&Target::from(&g), &SearchConfig { max_n: 6, ..SearchConfig::default() }).unwrap();
        let c: &EdgeColoring = r.lower_certificate.coloring.as_ref().unwrap();
        assert_eq!(c.n() + 1, r.lower);
        let color = |u: usize, v: usize| c.color(&[u, v]) == BLUE;
        assert!(!has_mono_copy(c.n(), &color, &g), "{g:?}");
    }
}

#[test]
fn tampered_certificate_is_rejected() {
    let g = OrderedGraph::new(3, [(0, 1), (1, 2)]).unwrap();
    let mut cert = ramsey_number(&Target::from(&g), &SearchConfig::default()).unwrap().lower_certificate;
    let c = cert.coloring.take().unwrap();
    // A one-colored K_4 contains the path.
    cert.coloring = Some(EdgeColoring::from_fn(c.n(), 2, |_| RED));
    assert!(!verify_certificate(&cert).unwrap().is_ok());
}
