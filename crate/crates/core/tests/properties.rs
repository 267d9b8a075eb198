use proptest::prelude::*;

use pebbling_core::graph::{automorphisms, enumerate_graphs, is_isomorphic, Graph};
use pebbling_core::pebble::{apply_step, lattice_leq, weight, Distribution, RootedDistribution};
use pebbling_core::reference;
use pebbling_core::parameters::full_report;
use pebbling_core::solver::{Classification, Solver};

fn corpus() -> Vec<Graph> {
    (1..=5).flat_map(|n| enumerate_graphs(n, |_| true)).collect()
}

/// A corpus graph, a root and a distribution of at most `max` pebbles.
fn instance(max: u32) -> impl Strategy<Value = (Graph, RootedDistribution)> {
    let graphs = corpus();
    (0..graphs.len())
        .prop_flat_map(move |i| {
            let g = graphs[i].clone();
            let n = g.n();
            (Just(g), 0..n, proptest::collection::vec(0..=max, n))
        })
        .prop_map(|(g, r, counts)| {
            let rd = RootedDistribution::new(Distribution::new(counts), r).unwrap();
            (g, rd)
        })
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #[test]
    fn solvability_is_monotone((g, rd) in instance(4), v in 0usize..5) {
        let v = v % g.n();
        let mut s = Solver::new(&g);
        if s.is_solvable(&rd, 1, false).unwrap() {
            let more = RootedDistribution::new(rd.dist().with_added(v), rd.root()).unwrap();
            prop_assert!(s.is_solvable(&more, 1, false).unwrap());
        }
        if s.is_solvable(&rd, 1, true).unwrap() {
            let more = RootedDistribution::new(rd.dist().with_added(v), rd.root()).unwrap();
            prop_assert!(s.is_solvable(&more, 1, true).unwrap());
        }
    }

    #[test]
    fn certificates_replay((g, rd) in instance(3), t in 1u32..4, greedy in any::<bool>()) {
        let mut s = Solver::new(&g);
        let cert = s.solve(&rd, t, greedy).unwrap();
        if let Some(c) = &cert {
            prop_assert!(c.replays(&g, &rd));
            prop_assert!(c.final_dist.get(rd.root()) >= t);
        }
        let naive = reference::solvable(&g, rd.dist().counts(), rd.root(), t, greedy);
        prop_assert_eq!(cert.is_some(), naive);
    }

    #[test]
    fn greedy_implies_solvable((g, rd) in instance(6)) {
        let mut s = Solver::new(&g);
        if s.is_solvable(&rd, 1, true).unwrap() {
            prop_assert!(s.is_solvable(&rd, 1, false).unwrap());
        }
    }

    #[test]
    fn weight_is_linear((g, a) in instance(6), extra in proptest::collection::vec(0u32..6, 5)) {
        let dt = g.distances();
        let b = Distribution::new(extra[..g.n()].to_vec());
        let sum = &a.dist().clone() + &b;
        let rb = RootedDistribution::new(b, a.root()).unwrap();
        let rs = RootedDistribution::new(sum, a.root()).unwrap();
        prop_assert_eq!(weight(&rs, &dt), weight(&a, &dt) + weight(&rb, &dt));
    }

    #[test]
    fn steps_lose_one_pebble((g, rd) in instance(5)) {
        for u in 0..g.n() {
            for v in g.neighbors(u) {
                match apply_step(&g, &rd, u, v) {
                    Ok(next) => prop_assert_eq!(next.size() + 1, rd.size()),
                    Err(_) => prop_assert!(rd.dist().get(u) < 2),
                }
            }
        }
    }

    #[test]
    fn lattice_order(a in proptest::collection::vec(0u32..4, 4), b in proptest::collection::vec(0u32..4, 4)) {
        let (a, b) = (Distribution::new(a), Distribution::new(b));
        prop_assert!(lattice_leq(&a, &a).unwrap());
        if lattice_leq(&a, &b).unwrap() {
            prop_assert!(a.size() <= b.size());
            if lattice_leq(&b, &a).unwrap() {
                prop_assert_eq!(&a, &b);
            }
        }
        prop_assert!(lattice_leq(&a, &(&a + &b)).unwrap());
    }

    #[test]
    fn text_forms_round_trip((_g, rd) in instance(20)) {
        let back: RootedDistribution = rd.to_string().parse().unwrap();
        prop_assert_eq!(&back, &rd);
        let json = serde_json::to_string(&rd).unwrap();
        prop_assert_eq!(serde_json::from_str::<RootedDistribution>(&json).unwrap(), rd);
    }

    #[test]
    fn isomorphism_under_relabeling(i in 0usize..31, p in permutation(5), q in permutation(5)) {
        let g = corpus()[i].clone();
        let n = g.n();
        let restrict = |p: Vec<usize>| -> Vec<usize> { p.into_iter().filter(|&x| x < n).collect() };
        let h = g.relabel(&restrict(p));
        let k = h.relabel(&restrict(q));
        prop_assert!(is_isomorphic(&g, &g));
        prop_assert!(is_isomorphic(&g, &h) && is_isomorphic(&h, &g));
        prop_assert!(is_isomorphic(&h, &k) && is_isomorphic(&g, &k));
    }

    #[test]
    fn classification_paths_agree((g, rd) in instance(3)) {
        let mut s = Solver::new(&g);
        let fast = s.classify(&rd).unwrap();
        prop_assert_eq!(fast, s.classify_by_search(&rd).unwrap());
        let naive = reference::critical(&g, rd.dist().counts(), rd.root());
        prop_assert_eq!(fast == Classification::Critical, naive);
    }

    #[test]
    fn relabeling_preserves_solvability((g, rd) in instance(5), p in permutation(5)) {
        let perm: Vec<usize> = p.into_iter().filter(|&x| x < g.n()).collect();
        let h = g.relabel(&perm);
        let moved = rd.permuted(&perm);
        let mut sg = Solver::new(&g);
        let mut sh = Solver::new(&h);
        prop_assert_eq!(sg.is_solvable(&rd, 1, false).unwrap(), sh.is_solvable(&moved, 1, false).unwrap());
        prop_assert_eq!(sg.classify(&rd).unwrap(), sh.classify(&moved).unwrap());
    }
}

#[test]
fn distances_match_adjacency() {
    for g in corpus() {
        let dt = g.distances();
        let n = g.n();
        let mut diam = 0;
        for u in 0..n {
            assert_eq!(dt.get(u, u), 0);
            for v in 0..n {
                assert_eq!(dt.get(u, v), dt.get(v, u));
                assert_eq!(dt.get(u, v) == 1, g.has_edge(u, v));
                diam = diam.max(dt.get(u, v));
                for w in 0..n {
                    assert!(dt.get(u, w) <= dt.get(u, v) + dt.get(v, w));
                }
            }
        }
        assert_eq!(dt.diameter(), diam);
    }
}

#[test]
fn automorphisms_form_groups() {
    for g in corpus() {
        let group = automorphisms(&g);
        let id: Vec<usize> = (0..g.n()).collect();
        assert_eq!(group[0], id);
        for a in &group {
            assert_eq!(g.relabel(a), g);
            for b in &group {
                let ab: Vec<usize> = (0..g.n()).map(|v| a[b[v]]).collect();
                assert!(group.contains(&ab));
            }
        }
    }
}

/// Every distribution of at most 5 pebbles on every corpus graph: adding a
/// pebble never breaks solvability.
#[test]
fn exhaustive_monotonicity() {
    for g in corpus() {
        let n = g.n();
        let mut s = Solver::new(&g);
        for size in 0..=5 {
            for d in pebbling_core::pebble::enumerate_distributions(n, size, None) {
                for r in 0..n {
                    let rd = RootedDistribution::new(d.clone(), r).unwrap();
                    if !s.is_solvable(&rd, 1, false).unwrap() {
                        continue;
                    }
                    for v in 0..n {
                        let more = RootedDistribution::new(d.with_added(v), r).unwrap();
                        assert!(s.is_solvable(&more, 1, false).unwrap(), "{more}");
                    }
                }
            }
        }
    }
}

#[test]
fn parameter_chain_holds_on_corpus() {
    for g in corpus() {
        let r = full_report(&g).unwrap();
        assert!(r.violations().is_empty(), "{:?}: {:?}", g, r.violations());
        assert!(r.o <= r.two_pow_d && r.two_pow_d <= r.c_r && r.c_r <= r.c_g && r.c_g <= r.p);
        assert!(r.o <= r.c_u && r.c_u <= r.n as u64 && r.n as u64 <= r.c_g);
        assert_eq!(r.c_u, r.c_ru);
    }
}
