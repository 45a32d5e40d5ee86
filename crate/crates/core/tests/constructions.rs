use itertools::Itertools;
use ordram::constructions::{
    alternating_cycle, alternating_hyperpath, alternating_order, block_product_coloring, blowup_matching,
    centered_matching, construction, constructions, disjoint_union_coloring, hyperpath_tensor, interval_discrepancy,
    monotone_path, nested_matching, pendant_lower_coloring, spread_blowup_coloring, tight_hyperpath, vdc_matching,
    vdc_permutation, GenArgs,
};
use ordram::graph::OrderedGraph;
use ordram::ramsey::{ramsey_number, verify_certificate, EdgeColoring, SearchConfig, Target};
use proptest::prelude::*;

/// Some order-preserving vertex subset spans a one-colored copy of `g`.
fn brute_has_mono_copy(c: &EdgeColoring, g: &OrderedGraph) -> bool {
    (0..c.n()).combinations(g.n()).any(|f| {
        let colors: Vec<_> = g.edges().iter().map(|&(u, v)| c.color(&[f[u], f[v]])).collect();
        colors.windows(2).all(|w| w[0] == w[1])
    })
}

fn brute_bit_reverse(i: usize, bits: usize) -> usize {
    if bits == 0 {
        return 0;
    }
    let s: String = format!("{i:0bits$b}").chars().rev().collect();
    usize::from_str_radix(&s, 2).unwrap()
}

fn brute_discrepancy(perm: &[usize]) -> f64 {
    let n = perm.len();
    let mut worst: f64 = 0.0;
    for (i0, i1) in (0..=n).tuple_combinations() {
        for (j0, j1) in (0..=n).tuple_combinations() {
            let hits = (i0..i1).filter(|&x| (j0..j1).contains(&perm[x])).count() as f64;
            worst = worst.max((hits - ((i1 - i0) * (j1 - j0)) as f64 / n as f64).abs());
        }
    }
    worst
}

#[test]
fn bit_reversal_matches_string_reversal() {
    for bits in 0..7 {
        let n = 1 << bits;
        let p = vdc_permutation(n).unwrap();
        assert_eq!(p, (0..n).map(|i| brute_bit_reverse(i, bits)).collect::<Vec<_>>());
        assert!((0..n).all(|i| p[p[i]] == i));
    }
    assert!(vdc_permutation(6).is_err());
}

proptest! {
    #[test]
    fn discrepancy_matches_direct_count(perm in (1usize..9).prop_flat_map(|n| Just((0..n).collect::<Vec<_>>()).prop_shuffle())) {
        let fast = interval_discrepancy(&perm);
        prop_assert!((fast - brute_discrepancy(&perm)).abs() < 1e-9);
    }
}

#[test]
fn graph_families_have_their_shape() {
    for len in (4..=12).step_by(2) {
        let c = alternating_cycle(len).unwrap();
        assert_eq!(c.edge_count(), len);
        assert!((0..len).all(|v| c.degree(v) == 2));
        assert!(c.is_connected());
        assert_eq!(c.interval_chromatic_number(), 2);
    }
    assert!(alternating_cycle(5).is_err());
    for m in 1..=5 {
        let g = nested_matching(m).unwrap();
        assert!(g.is_perfect_matching());
        assert_eq!(g.mirror(), g);
        let v = vdc_matching(1 << (m - 1)).unwrap();
        assert!(v.is_perfect_matching() && v.interval_chromatic_number() == 2);
        let b = blowup_matching(&v, 3).unwrap();
        assert!(b.is_perfect_matching());
        assert_eq!(b.n(), 3 * v.n());
    }
    let c = centered_matching(7).unwrap();
    assert_eq!(c.n(), 8);
    assert!(c.is_isolated(0) && c.is_isolated(7));
    assert_eq!(c.edges(), [(1, 6), (2, 5), (3, 4)]);
}

#[test]
fn alternating_hyperpaths_are_d_partite() {
    for d in 2..=4 {
        for m in 1..=4 {
            let n = d * m;
            let order = alternating_order(n, d).unwrap();
            assert_eq!(order.iter().copied().sorted().collect::<Vec<_>>(), (0..n).collect::<Vec<_>>());
            let h = alternating_hyperpath(n, d).unwrap();
            assert_eq!(h.edge_count(), tight_hyperpath(n, d).unwrap().edge_count());
            for e in h.edges() {
                // One vertex in each of the d consecutive blocks of length m.
                assert_eq!(e.iter().map(|v| v / m).collect::<Vec<_>>(), (0..d).collect::<Vec<_>>());
            }
            let t = hyperpath_tensor(n, d).unwrap();
            assert_eq!(t.weight(), n - d + 1);
            let mut ones = t.ones().to_vec();
            ones.sort_by_key(|c| c.iter().sum::<usize>());
            assert_eq!(ones[0], vec![0; d]);
            for (step, w) in ones.windows(2).enumerate() {
                let diff: Vec<usize> = w[1].iter().zip(&w[0]).map(|(a, b)| a - b).collect();
                let mut unit = vec![0; d];
                unit[step % d] = 1;
                assert_eq!(diff, unit);
            }
        }
    }
}

#[test]
fn block_products_avoid_the_long_path() {
    for (blocks, size) in [(1, 1), (2, 2), (2, 3), (3, 2), (3, 3)] {
        let c = block_product_coloring(blocks, size);
        let longest = blocks.max(size) + 1;
        assert!(!brute_has_mono_copy(&c, &monotone_path(longest).unwrap()));
        if longest > 2 {
            assert!(brute_has_mono_copy(&c, &monotone_path(longest - 1).unwrap()));
        }
    }
}

#[test]
fn lower_bound_constructions_are_free() {
    let lower = |g: &OrderedGraph| {
        let t = Target::from(g);
        ramsey_number(&t, &SearchConfig { max_n: 12, ..SearchConfig::default() }).unwrap().lower_certificate
    };
    let bases = [monotone_path(2).unwrap(), monotone_path(3).unwrap(), OrderedGraph::new(3, [(0, 2)]).unwrap()];
    let check = |cert: &ordram::ramsey::Certificate| {
        assert!(verify_certificate(cert).unwrap().is_ok());
        let c = cert.coloring.as_ref().unwrap();
        let g = cert.target.as_graph().unwrap();
        assert!(!brute_has_mono_copy(c, &g), "{:?}", cert.target);
    };
    for g in &bases {
        let cg = lower(g);
        check(&pendant_lower_coloring(&cg).unwrap());
        for k in 2..=3 {
            check(&spread_blowup_coloring(&cg, k).unwrap());
        }
        for h in &bases {
            check(&disjoint_union_coloring(&cg, &lower(h)).unwrap());
        }
    }
}

#[test]
fn registry_names_are_unique_and_resolve() {
    let all = constructions();
    let names: Vec<_> = all.iter().map(|c| c.name()).collect();
    assert_eq!(names.iter().unique().count(), names.len());
    for name in names {
        assert_eq!(construction(name).unwrap().name(), name);
    }
    assert!(construction("no-such-thing").is_err());
    let path = construction("monotone-path").unwrap().build(&GenArgs { params: vec![4], certs: vec![] }).unwrap();
    assert_eq!(path.to_json(), monotone_path(4).unwrap().to_json());
}
