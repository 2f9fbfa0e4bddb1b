mod common;

use std::collections::BTreeSet;

use common::*;
use onetwothree::cutflow::{local_optimal_cut, Cut};
use onetwothree::generate::SplitMix64;
use onetwothree::graph::{chordless_path, connected_components, removable_adjacent_pair, Graph, Path};
use onetwothree::inner::{inner_weighting, Handicap};
use onetwothree::parity::bipartite_parity_weighting;
use onetwothree::partition::{alternating_independent_set, check_good};
use onetwothree::solver::{solve, weight_good_partition};
use onetwothree::verify::verify;
use onetwothree::Error;
use proptest::prelude::*;

/// A connected graph: a random tree plus extra edges.
fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, any::<u64>(), 0.0..0.6f64).prop_map(|(n, seed, p)| {
        let mut rng = SplitMix64::new(seed);
        let mut edges = BTreeSet::new();
        for v in 1..n {
            edges.insert((rng.below(v as u64) as usize, v));
        }
        for u in 0..n {
            for v in u + 1..n {
                if rng.next_f64() < p {
                    edges.insert((u, v));
                }
            }
        }
        Graph::from_edges(n, edges).unwrap()
    })
}

/// A connected graph in which every vertex has degree at least 2.
fn dense_connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    connected_graph(max_n).prop_map(|g| {
        let n = g.n();
        let mut edges: BTreeSet<(usize, usize)> = g.edges().iter().map(|e| e.ends()).collect();
        for v in 0..n {
            if n >= 3 && g.degree(v) < 2 {
                let w = (v + 1..n).chain(0..v).find(|&w| !g.has_edge(v, w)).unwrap();
                edges.insert((v.min(w), v.max(w)));
            }
        }
        Graph::from_edges(n, edges).unwrap()
    })
}

fn any_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n, any::<u64>(), 0.0..0.7f64).prop_map(|(n, seed, p)| onetwothree::generate::gnp(n, p, seed).unwrap())
}

fn side_counts(g: &Graph, cut: &Cut, v: usize) -> (usize, usize) {
    let same = g.neighbors(v).iter().filter(|&&w| cut.same_side(v, w)).count();
    (same, g.degree(v) - same)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn components_partition_vertices(g in any_graph(20)) {
        let comps = connected_components(&g);
        let mut all: Vec<usize> = comps.iter().flatten().copied().collect();
        all.sort_unstable();
        prop_assert_eq!(all, (0..g.n()).collect::<Vec<_>>());
        for e in g.edges() {
            prop_assert!(comps.iter().any(|c| c.contains(&e.lo()) && c.contains(&e.hi())));
        }
    }

    #[test]
    fn local_cut_is_locally_optimal(g in any_graph(25)) {
        let cut = local_optimal_cut(&g, None);
        let crossing = g.edges().iter().filter(|e| !cut.same_side(e.lo(), e.hi())).count();
        prop_assert_eq!(cut.size(), crossing);
        for v in 0..g.n() {
            let (same, across) = side_counts(&g, &cut, v);
            prop_assert!(same <= across);
        }
    }

    #[test]
    fn removable_pair_keeps_rest_connected(g in dense_connected_graph(14)) {
        prop_assume!(g.n() >= 3 && g.min_degree() >= Some(2));
        let (x, y) = removable_adjacent_pair(&g).unwrap();
        prop_assert!(g.has_edge(x, y));
        let rest: Vec<usize> = (0..g.n()).filter(|&v| v != x && v != y).collect();
        prop_assert!(g.induced(&rest).graph.is_connected());
    }

    #[test]
    fn chordless_paths_are_chordless(g in connected_graph(16), a in any::<prop::sample::Index>(), b in any::<prop::sample::Index>()) {
        let (a, b) = (a.index(g.n()), b.index(g.n()));
        let p = chordless_path(&g, a, b, &[]).unwrap();
        prop_assert_eq!(p.first(), Some(a));
        prop_assert_eq!(p.last(), Some(b));
        prop_assert!(p.is_path_in(&g));
        prop_assert!(p.is_chordless_in(&g));
    }

    #[test]
    fn alternating_set_gives_good_partition(g in connected_graph(14), a in any::<prop::sample::Index>(), b in any::<prop::sample::Index>()) {
        let (a, b) = (a.index(g.n()), b.index(g.n()));
        let p = chordless_path(&g, a, b, &[]).unwrap();
        let red = alternating_independent_set(&g, &p, true).unwrap();
        for (i, v) in p.vertices().iter().enumerate() {
            prop_assert_eq!(red.contains(v), i % 2 == 0);
        }
        for e in g.edges() {
            prop_assert!(!(red.contains(&e.lo()) && red.contains(&e.hi())));
        }
        // every blue vertex has a red neighbor
        for v in (0..g.n()).filter(|v| !red.contains(v)) {
            prop_assert!(g.neighbors(v).iter().any(|w| red.contains(w)));
        }
    }

    #[test]
    fn good_partitions_are_weighted(g in connected_graph(12), seed in any::<u64>()) {
        prop_assume!(g.n() >= 3);
        let mut rng = SplitMix64::new(seed);
        let start = rng.below(g.n() as u64) as usize;
        let p = Path::new(vec![start]);
        let red = alternating_independent_set(&g, &p, true).unwrap();
        let part = onetwothree::partition::Partition::from_red(&g, red);
        prop_assume!(check_good(&g, &part));
        let w = weight_good_partition(&g, &part).unwrap();
        prop_assert_eq!(check_vertex_coloring(&g, &w), Ok(()));
    }

    #[test]
    fn inner_weighting_meets_designated_colors(g in any_graph(30), seed in any::<u64>()) {
        let mut rng = SplitMix64::new(seed);
        let h: Vec<i64> = (0..g.n()).map(|_| 2 * rng.below(6) as i64).collect();
        let run = inner_weighting(&g, &Handicap::new(h.clone()).unwrap()).unwrap();
        let s = sums_of(&g, &run.weighting);
        for v in 0..g.n() {
            let f = run.colors.get(v);
            prop_assert!(f.rem_euclid(2) == 1);
            prop_assert_eq!((s[v] + h[v] - f).abs(), 1);
        }
        prop_assert!(run.colors.is_proper(&g));
        prop_assert!(run.report.saturated());
        prop_assert!(run.report.strictly_increasing());
    }

    #[test]
    fn bipartite_weighting_properties(seed in any::<u64>()) {
        let inst = random_bipartite_instance(&mut SplitMix64::new(seed));
        let w = bipartite_parity_weighting(&inst.graph, &inst.targets, inst.path.as_ref()).unwrap();
        prop_assert_eq!(check_bipartite_properties(&inst, &w), Ok(()));
    }

    #[test]
    fn solve_is_verify_clean(g in any_graph(16)) {
        let has_k2 = connected_components(&g).iter().any(|c| c.len() == 2);
        match solve(&g) {
            Ok(report) => {
                prop_assert!(!has_k2);
                prop_assert!(verify(&g, &report.weighting).unwrap().is_empty());
                prop_assert_eq!(check_vertex_coloring(&g, &report.weighting), Ok(()));
                prop_assert_eq!(report.sums, sums_of(&g, &report.weighting));
            }
            Err(Error::IsolatedEdge { component }) => {
                prop_assert!(has_k2);
                prop_assert_eq!(component.len(), 2);
            }
            Err(e) => prop_assert!(false, "unexpected error {}", e),
        }
    }

    #[test]
    fn solve_is_deterministic(g in connected_graph(14)) {
        prop_assume!(g.n() != 2);
        prop_assert_eq!(solve(&g).unwrap(), solve(&g).unwrap());
    }
}
