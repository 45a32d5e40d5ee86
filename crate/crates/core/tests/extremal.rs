use ordram::extremal::{solver, BranchAndBound, ExConfig, ExSolver, LocalSearch, Naive};
use ordram::pattern::{mat_contains, Pattern};

fn rows(r: &[&[u8]]) -> Pattern {
    Pattern::from_rows(r).unwrap()
}

/// Plain enumeration of every filling: the oracle the solvers are held to.
fn oracle(dims: &[usize], p: &Pattern) -> usize {
    let cells = dims.iter().product::<usize>();
    let coords: Vec<Vec<usize>> = Pattern::zeros(dims.to_vec()).unwrap().cells().collect();
    (0u32..1 << cells)
        .filter_map(|m| {
            let host = Pattern::new(dims.to_vec(), (0..cells).filter(|i| m >> i & 1 == 1).map(|i| coords[i].clone())).unwrap();
            host.avoids(p).unwrap().then_some(m.count_ones() as usize)
        })
        .max()
        .unwrap()
}

fn zoo() -> Vec<Pattern> {
    vec![
        rows(&[&[1]]),
        rows(&[&[1, 1]]),
        rows(&[&[1], &[1]]),
        rows(&[&[1, 0], &[0, 1]]),
        rows(&[&[0, 1], &[1, 0]]),
        rows(&[&[1, 1], &[1, 0]]),
        rows(&[&[0, 1], &[1, 1]]),
        rows(&[&[1, 1], &[1, 1]]),
        rows(&[&[1, 0, 1]]),
        rows(&[&[1, 0, 0], &[0, 0, 1], &[0, 1, 0]]),
        rows(&[&[0, 1, 1, 0], &[1, 0, 0, 1]]),
        rows(&[&[1, 1, 0], &[0, 1, 1]]),
    ]
}

fn hosts_up_to_16_cells() -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for r in 1..=16 {
        for c in 1..=16 {
            if r * c <= 16 {
                out.push(vec![r, c]);
            }
        }
    }
    out
}

#[test]
fn branch_and_bound_matches_enumeration_on_small_hosts() {
    let cfg = ExConfig::default();
    for p in zoo() {
        for dims in hosts_up_to_16_cells() {
            let bb = BranchAndBound.solve(&dims, &p, &cfg).unwrap();
            let nv = Naive.solve(&dims, &p, &cfg).unwrap();
            assert!(bb.exact && nv.exact);
            assert_eq!(bb.value, nv.value, "{dims:?} {p:?}");
            // Both pick the largest row-major bit string among optimal fillings.
            assert_eq!(bb.witness, nv.witness, "{dims:?} {p:?}");
            assert!(mat_contains(&bb.witness, &p).unwrap().is_none());
            if dims.iter().product::<usize>() <= 12 {
                assert_eq!(bb.value, oracle(&dims, &p), "{dims:?} {p:?}");
            }
        }
    }
}

#[test]
fn three_dimensional_hosts_match_enumeration() {
    let cfg = ExConfig::default();
    let pats = [
        Pattern::new(vec![1, 1, 2], [vec![0, 0, 0], vec![0, 0, 1]]).unwrap(),
        Pattern::new(vec![2, 2, 2], [vec![0, 1, 1], vec![1, 0, 0]]).unwrap(),
        Pattern::new(vec![2, 2, 2], [vec![0, 0, 0], vec![1, 1, 1]]).unwrap(),
    ];
    for p in &pats {
        for dims in [[2, 2, 2], [2, 2, 3], [1, 3, 4], [2, 3, 2]] {
            let bb = BranchAndBound.solve(&dims, p, &cfg).unwrap();
            assert_eq!(bb.value, oracle(&dims, p), "{dims:?} {p:?}");
            assert_eq!(bb.witness, Naive.solve(&dims, p, &cfg).unwrap().witness);
        }
    }
}

#[test]
fn zarankiewicz_values() {
    let p = rows(&[&[1, 1], &[1, 1]]);
    let got: Vec<usize> = (1..=5).map(|n| BranchAndBound.solve(&[n, n], &p, &ExConfig::default()).unwrap().value).collect();
    assert_eq!(got, [1, 3, 6, 9, 12]);
}

#[test]
fn monotone_in_dims_and_antitone_in_containment() {
    let cfg = ExConfig::default();
    let zoo = zoo();
    for p in &zoo {
        for n in 1..=4 {
            let a = BranchAndBound.solve(&[n, n], p, &cfg).unwrap().value;
            let wider = BranchAndBound.solve(&[n, n + 1], p, &cfg).unwrap().value;
            let taller = BranchAndBound.solve(&[n + 1, n], p, &cfg).unwrap().value;
            assert!(a <= wider && a <= taller);
        }
    }
    for p in &zoo {
        for q in &zoo {
            if p.dim() == q.dim() && mat_contains(p, q).unwrap().is_some() {
                for n in 2..=4 {
                    let ep = BranchAndBound.solve(&[n, n], p, &cfg).unwrap().value;
                    let eq = BranchAndBound.solve(&[n, n], q, &cfg).unwrap().value;
                    assert!(eq <= ep, "{q:?} in {p:?} at n={n}");
                }
            }
        }
    }
}

#[test]
fn results_do_not_depend_on_worker_count() {
    for p in [rows(&[&[1, 1], &[1, 1]]), rows(&[&[0, 1, 1, 0], &[1, 0, 0, 1]])] {
        let one = BranchAndBound.solve(&[5, 5], &p, &ExConfig::default()).unwrap();
        for workers in [2, 4] {
            assert_eq!(one, BranchAndBound.solve(&[5, 5], &p, &ExConfig { workers, ..ExConfig::default() }).unwrap());
        }
    }
}

#[test]
fn heuristic_is_a_valid_lower_bound() {
    let cfg = ExConfig { iterations: 5000, ..ExConfig::default() };
    for p in zoo() {
        let h = LocalSearch.solve(&[4, 4], &p, &cfg).unwrap();
        assert!(!h.exact);
        assert!(h.value <= BranchAndBound.solve(&[4, 4], &p, &cfg).unwrap().value);
        assert!(mat_contains(&h.witness, &p).unwrap().is_none());
    }
}

#[test]
fn registry_and_errors() {
    let names: Vec<&str> = ordram::extremal::solvers().iter().map(|s| s.name()).collect();
    assert_eq!(names, ["branch-and-bound", "naive", "local-search"]);
    assert!(solver("simplex").is_err());
    let p = rows(&[&[1, 1]]);
    assert!(BranchAndBound.solve(&[2, 2, 2], &p, &ExConfig::default()).is_err());
    assert!(BranchAndBound.solve(&[0, 2], &p, &ExConfig::default()).is_err());
    assert!(Naive.solve(&[5, 5], &p, &ExConfig::default()).is_err());
}
