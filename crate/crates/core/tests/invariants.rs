mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;

use common::{enumerate_optimum, graph_from_bits, permutations};
use maxstc_core::incompat::labeling_from_independent_set;
use maxstc_core::reductions::{
    brute_disjointnn, gen_disjointnn_from_3sp, gen_maxstc_from_disjointnn, gen_random_bipartite,
    gen_random_proper_interval, gen_random_trivially_perfect, max_set_packing, SetPackingInstance,
};
use maxstc_core::solvers::pig::{consecutive_strong_violation, dp_on_ordering};
use maxstc_core::solvers::{
    solve_auto, solve_bipartite, solve_oracle, solve_pig_dp, solve_pig_dp_detailed, solve_trivially_perfect,
    AutoOptions, MwisOptions, SolveResult,
};
use maxstc_core::{
    build_incompat, edge_key, recognize, validate_stc, verify_umbrella, Graph, GraphBuilder, StrongWeakLabeling,
    UmbrellaCheck,
};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2)
            .prop_map(move |bits| graph_from_bits(n, &bits))
    })
}

fn small_graph(max_n: usize, max_m: usize) -> impl Strategy<Value = Graph> {
    graph(max_n).prop_filter("too many edges", move |g| g.edge_count() <= max_m)
}

fn oracle_value(g: &Graph) -> u64 {
    solve_oracle(g, MwisOptions::forced()).unwrap().value
}

fn assert_consistent(g: &Graph, r: &SolveResult) {
    assert!(validate_stc(g, &r.labeling).unwrap().is_valid());
    let weight: u64 = r
        .labeling
        .strong
        .iter()
        .map(|(u, v)| g.weight_of(u).unwrap() * g.weight_of(v).unwrap())
        .sum();
    assert_eq!(weight, r.value);
    assert_eq!(r.labeling.strong.len() + r.labeling.weak.len(), g.edge_count());
}

fn closed(g: &Graph, v: usize) -> BTreeSet<usize> {
    g.neighbor_indices(v).iter().copied().chain([v]).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn twin_classes_partition_by_closed_neighborhood(g in graph(9)) {
        let p = g.twin_classes();
        prop_assert_eq!(p.covered_vertices(), g.vertex_count());
        for u in 0..g.vertex_count() {
            for v in 0..g.vertex_count() {
                let same = p.class_of(g.label(u)) == p.class_of(g.label(v));
                prop_assert_eq!(same, closed(&g, u) == closed(&g, v));
            }
        }
    }

    #[test]
    fn contraction_removes_twins_and_keeps_counts(g in graph(9)) {
        let tc = g.contract_twins().unwrap();
        let again = tc.graph.twin_classes();
        prop_assert_eq!(again.len(), tc.graph.vertex_count());
        let size_sum: u64 = (0..tc.graph.vertex_count()).map(|v| tc.graph.weight(v)).sum();
        prop_assert_eq!(size_sum as usize, g.vertex_count());
        prop_assert_eq!(tc.graph.total_edge_weight() + tc.intra_twin_value, g.edge_count() as u64);
    }

    #[test]
    fn accepted_orderings_are_umbrella_with_monotone_reaches(g in graph(10)) {
        if let Ok(ord) = recognize(&g) {
            let order: Vec<&str> = ord.order().iter().map(String::as_str).collect();
            prop_assert_eq!(verify_umbrella(&g, &order).unwrap(), UmbrellaCheck::Valid);
            prop_assert!(ord.left_reaches().windows(2).all(|w| w[0] <= w[1]));
            prop_assert!(ord.right_reaches().windows(2).all(|w| w[0] <= w[1]));
        }
    }

    #[test]
    fn rejections_carry_a_real_violation(g in graph(10)) {
        if let Err(rej) = recognize(&g) {
            let order: Vec<&str> = rej.candidate.iter().map(String::as_str).collect();
            prop_assert!(!verify_umbrella(&g, &order).unwrap().is_valid());
        }
    }

    #[test]
    fn conflicts_are_exactly_induced_wedges(g in graph(8)) {
        let h = build_incompat(&g);
        let triangle_free = g.edges().all(|(u, v)| {
            g.neighbor_indices(u).iter().all(|w| !g.has_edge(v, *w))
        });
        for i in 0..h.node_count() {
            prop_assert!(!h.in_conflict(i, i));
            for j in 0..h.node_count() {
                prop_assert_eq!(h.in_conflict(i, j), h.in_conflict(j, i));
                let (a, b) = h.endpoints(i);
                let (c, d) = h.endpoints(j);
                let shared: Vec<usize> = [a, b].into_iter().filter(|x| [c, d].contains(x)).collect();
                let open = i != j && shared.len() == 1 && {
                    let x = if a == shared[0] { b } else { a };
                    let y = if c == shared[0] { d } else { c };
                    !g.has_edge(x, y)
                };
                prop_assert_eq!(h.in_conflict(i, j), open);
                if triangle_free {
                    prop_assert_eq!(h.in_conflict(i, j), i != j && shared.len() == 1);
                }
            }
        }
    }

    #[test]
    fn valid_labelings_are_independent_sets(g in small_graph(8, 12), mask in any::<u64>()) {
        let h = build_incompat(&g);
        let chosen: Vec<usize> = (0..h.node_count()).filter(|i| mask >> i & 1 == 1).collect();
        let lab = StrongWeakLabeling::from_strong(&g, chosen.iter().map(|&i| h.node(i).clone())).unwrap();
        prop_assert_eq!(validate_stc(&g, &lab).unwrap().is_valid(), h.is_independent(&chosen));
        if h.is_independent(&chosen) {
            let back = labeling_from_independent_set(&g, &h, &chosen).unwrap();
            prop_assert_eq!(back, lab);
        }
    }

    #[test]
    fn twin_contraction_preserves_optimum(g in small_graph(8, 18)) {
        let tc = g.contract_twins().unwrap();
        let contracted = oracle_value(&tc.graph);
        prop_assert_eq!(contracted + tc.intra_twin_value, enumerate_optimum(&g));
    }

    #[test]
    fn oracle_matches_labeling_enumeration(g in small_graph(7, 14)) {
        let r = solve_oracle(&g, MwisOptions::forced()).unwrap();
        assert_consistent(&g, &r);
        prop_assert_eq!(r.value, enumerate_optimum(&g));
    }

    #[test]
    fn pig_dp_matches_oracle(n in 0usize..=10, seed in any::<u64>()) {
        let g = gen_random_proper_interval(n, seed);
        let report = solve_pig_dp_detailed(&g).unwrap();
        assert_consistent(&g, &report.result);
        prop_assert_eq!(report.result.value, oracle_value(&g));
        for comp in &report.components {
            prop_assert_eq!(consecutive_strong_violation(&comp.ordering, &comp.outcome.strong), None);
            let reversed = dp_on_ordering(&comp.graph, &comp.ordering.reverse()).unwrap();
            prop_assert_eq!(reversed.value, comp.outcome.value);
        }
    }

    #[test]
    fn trivially_perfect_matches_oracle(n in 0usize..=10, seed in any::<u64>()) {
        let g = gen_random_trivially_perfect(n, seed);
        let r = solve_trivially_perfect(&g).unwrap();
        assert_consistent(&g, &r);
        prop_assert_eq!(r.value, oracle_value(&g));
    }

    #[test]
    fn bipartite_matches_oracle(n in 0usize..=10, seed in any::<u64>()) {
        let g = gen_random_bipartite(n, 0.4, seed);
        let r = solve_bipartite(&g).unwrap();
        assert_consistent(&g, &r);
        prop_assert_eq!(r.value, oracle_value(&g));
    }

    #[test]
    fn auto_results_validate(g in small_graph(8, 20)) {
        let r = solve_auto(&g, AutoOptions { oracle: MwisOptions::forced() }).unwrap();
        assert_consistent(&g, &r);
        prop_assert_eq!(r.value, oracle_value(&g));
    }

    #[test]
    fn deleting_an_edge_never_raises_the_optimum(g in small_graph(7, 14), pick in any::<usize>()) {
        let edges = g.edge_labels();
        prop_assume!(!edges.is_empty());
        let (du, dv) = &edges[pick % edges.len()];
        let mut b = GraphBuilder::new();
        for l in g.labels() {
            b.add_vertex(l).unwrap();
        }
        for (u, v) in edges.iter().filter(|e| (&e.0, &e.1) != (du, dv)) {
            b.add_edge(u, v).unwrap();
        }
        let smaller = oracle_value(&b.build());
        let full = oracle_value(&g);
        prop_assert!(smaller <= full + 1);
        prop_assert!(smaller <= full);
    }

    #[test]
    fn packing_equals_disjoint_non_neighborhoods(
        n in 3usize..=6,
        picks in proptest::collection::vec(any::<u32>(), 0..=4),
    ) {
        let all: Vec<[usize; 3]> = triplets_of(n);
        let mut chosen: Vec<[usize; 3]> = Vec::new();
        for p in picks {
            let t = all[p as usize % all.len()];
            if !chosen.contains(&t) {
                chosen.push(t);
            }
        }
        let sp = SetPackingInstance::new(n, chosen, 1).unwrap();
        let si = gen_disjointnn_from_3sp(&sp);
        prop_assert!(si.verify().is_ok());
        prop_assert_eq!(brute_disjointnn(&si).unwrap().0, max_set_packing(&sp).0);
        let (gp, _) = gen_maxstc_from_disjointnn(&si).unwrap();
        prop_assert!(gp.verify().is_ok());
    }
}

fn triplets_of(n: usize) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for a in 1..=n {
        for b in a + 1..=n {
            for c in b + 1..=n {
                out.push([a, b, c]);
            }
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn recognition_agrees_with_permutation_search(g in graph(7)) {
        let exists = permutations(g.vertex_count()).into_iter().any(|p| {
            let order: Vec<&str> = p.iter().map(|&v| g.label(v)).collect();
            verify_umbrella(&g, &order).unwrap().is_valid()
        });
        prop_assert_eq!(recognize(&g).is_ok(), exists);
    }
}

#[test]
fn solving_is_deterministic() {
    for seed in 0..20 {
        let g = gen_random_proper_interval(12, seed);
        assert_eq!(solve_pig_dp(&g).unwrap(), solve_pig_dp(&g).unwrap());
        assert_eq!(recognize(&g).unwrap(), recognize(&g).unwrap());
    }
}

#[test]
fn forced_strong_edge_in_triangle_free_graph_blocks_its_neighbors() {
    let g = Graph::from_edges(&[("a", "b"), ("b", "c"), ("c", "d")]).unwrap();
    let lab = StrongWeakLabeling::from_strong(&g, [edge_key("a", "b"), edge_key("b", "c")]).unwrap();
    assert!(!validate_stc(&g, &lab).unwrap().is_valid());
}
