use itertools::Itertools;
use ordram::graph::{contains, graph_of_matrix, OrderedGraph};
use ordram::pattern::{mat_contains, Pattern};
use proptest::prelude::*;

/// Every increasing vertex tuple of the host, checked edge by edge.
fn brute_contains(host: &OrderedGraph, pat: &OrderedGraph) -> bool {
    (0..host.n())
        .combinations(pat.n())
        .any(|pos| pat.edges().iter().all(|&(u, v)| host.has_edge(pos[u], pos[v])))
}

/// Fewest intervals with no edge inside any of them, over all cut sets.
fn brute_interval_chromatic(g: &OrderedGraph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    (0u32..1 << (n - 1))
        .filter(|cuts| {
            // Cut bit i separates vertex i from i + 1.
            g.edges().iter().all(|&(u, v)| (u..v).any(|i| cuts >> i & 1 == 1))
        })
        .map(|cuts| cuts.count_ones() as usize + 1)
        .min()
        .unwrap()
}

/// Every choice of host rows and columns.
fn brute_mat_contains(host: &Pattern, pat: &Pattern) -> bool {
    let (hr, hc) = (host.dims()[0], host.dims()[1]);
    let (pr, pc) = (pat.dims()[0], pat.dims()[1]);
    (0..hr).combinations(pr).any(|rows| {
        (0..hc)
            .combinations(pc)
            .any(|cols| pat.ones().iter().all(|c| host.get(&[rows[c[0]], cols[c[1]]])))
    })
}

fn all_graphs(n: usize) -> Vec<OrderedGraph> {
    let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
    (0u32..1 << pairs.len())
        .map(|m| OrderedGraph::new(n, pairs.iter().enumerate().filter(|(i, _)| m >> i & 1 == 1).map(|(_, &e)| e)).unwrap())
        .collect()
}

fn all_patterns(r: usize, c: usize) -> Vec<Pattern> {
    (0u32..1 << (r * c))
        .map(|m| Pattern::new(vec![r, c], (0..r * c).filter(|i| m >> i & 1 == 1).map(|i| vec![i / c, i % c])).unwrap())
        .collect()
}

fn graph_strategy(max_n: usize) -> impl Strategy<Value = OrderedGraph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
        proptest::collection::vec(any::<bool>(), pairs.len()).prop_map(move |keep| {
            OrderedGraph::new(n, pairs.iter().zip(&keep).filter(|(_, &k)| k).map(|(&e, _)| e)).unwrap()
        })
    })
}

#[test]
fn containment_matches_brute_force_and_mirror_up_to_five_vertices() {
    let graphs: Vec<OrderedGraph> = (1..=5).flat_map(all_graphs).collect();
    let small: Vec<&OrderedGraph> = graphs.iter().filter(|g| g.n() <= 3).collect();
    for g in &graphs {
        assert!(contains(g, g).is_some(), "reflexive");
        for h in &small {
            let got = contains(g, h);
            assert_eq!(got.is_some(), brute_contains(g, h), "{h:?} in {g:?}");
            if let Some(pos) = got {
                assert!(pos.windows(2).all(|w| w[0] < w[1]));
                assert!(h.edges().iter().all(|&(u, v)| g.has_edge(pos[u], pos[v])));
            }
        }
    }
    // Mirror equivariance over every pair of graphs on at most five vertices.
    for g in &graphs {
        let gm = g.mirror();
        assert_eq!(gm.mirror(), *g);
        for h in graphs.iter().filter(|h| h.n() <= g.n()) {
            assert_eq!(contains(g, h).is_some(), contains(&gm, &h.mirror()).is_some(), "{h:?} in {g:?}");
        }
    }
}

#[test]
fn greedy_interval_coloring_is_optimal_up_to_six_vertices() {
    for n in 1..=6 {
        for g in all_graphs(n) {
            assert_eq!(g.interval_chromatic_number(), brute_interval_chromatic(&g), "{g:?}");
        }
    }
}

#[test]
fn matrix_and_graph_containment_agree_on_small_hosts() {
    // Exhaustive: patterns up to 3 x 3 against hosts up to 3 x 3, and patterns
    // up to 2 x 2 against hosts up to 4 x 4. Larger pairs are sampled below.
    let shapes = |m: usize| (1..=m).cartesian_product(1..=m).collect::<Vec<_>>();
    for (pmax, hmax) in [(3, 3), (2, 4)] {
        let pats: Vec<Pattern> = shapes(pmax).into_iter().flat_map(|(r, c)| all_patterns(r, c)).filter(|p| p.weight() > 0).collect();
        for (r, c) in shapes(hmax) {
            for host in all_patterns(r, c) {
                let gh = graph_of_matrix(&host).unwrap();
                for p in &pats {
                    let m = mat_contains(&host, p).unwrap().is_some();
                    assert_eq!(m, brute_mat_contains(&host, p));
                    let g = contains(&gh, &graph_of_matrix(p).unwrap()).is_some();
                    if p.has_no_empty_lines() {
                        assert_eq!(m, g, "{p:?} in {host:?}");
                    } else if m {
                        assert!(g, "{p:?} in {host:?}");
                    }
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn greedy_interval_coloring_is_optimal(g in graph_strategy(8)) {
        prop_assert_eq!(g.interval_chromatic_number(), brute_interval_chromatic(&g));
    }

    #[test]
    fn mirror_is_an_involution(g in graph_strategy(8)) {
        prop_assert_eq!(g.mirror().mirror(), g.clone());
        prop_assert_eq!(g.mirror().edge_count(), g.edge_count());
    }

    #[test]
    fn containment_is_transitive(a in graph_strategy(7), b in graph_strategy(5), c in graph_strategy(3)) {
        if contains(&a, &b).is_some() && contains(&b, &c).is_some() {
            prop_assert!(contains(&a, &c).is_some());
        }
        prop_assert_eq!(contains(&a, &c).is_some(), brute_contains(&a, &c));
    }

    #[test]
    fn ordered_sum_is_associative(a in graph_strategy(4), b in graph_strategy(4), c in graph_strategy(4)) {
        let left = a.ordered_sum(&b).ordered_sum(&c);
        prop_assert_eq!(left.clone(), a.ordered_sum(&b.ordered_sum(&c)));
        prop_assert_eq!(left.n(), a.n() + b.n() + c.n());
        prop_assert_eq!(left.edge_count(), a.edge_count() + b.edge_count() + c.edge_count());
    }

    #[test]
    fn matrix_and_graph_containment_agree(
        hr in 1usize..=4, hc in 1usize..=4, hbits in any::<u16>(),
        pr in 1usize..=3, pc in 1usize..=3, pbits in any::<u16>(),
    ) {
        let host = Pattern::new(vec![hr, hc], (0..hr * hc).filter(|i| hbits >> i & 1 == 1).map(|i| vec![i / hc, i % hc])).unwrap();
        let p = Pattern::new(vec![pr, pc], (0..pr * pc).filter(|i| pbits >> i & 1 == 1).map(|i| vec![i / pc, i % pc])).unwrap();
        prop_assume!(p.weight() > 0);
        let m = mat_contains(&host, &p).unwrap().is_some();
        prop_assert_eq!(m, brute_mat_contains(&host, &p));
        let g = contains(&graph_of_matrix(&host).unwrap(), &graph_of_matrix(&p).unwrap()).is_some();
        if p.has_no_empty_lines() {
            prop_assert_eq!(m, g);
        } else if m {
            prop_assert!(g);
        }
    }

    #[test]
    fn graph_json_round_trips(g in graph_strategy(8)) {
        prop_assert_eq!(OrderedGraph::from_json(&g.to_json()).unwrap(), g);
    }
}
