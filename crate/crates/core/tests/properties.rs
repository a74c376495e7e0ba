mod common;

use proptest::prelude::*;

use colour_contraction::generators::{invert_permutation, relabel};
use colour_contraction::invariants::{step_violations, trace_violations};
use colour_contraction::oracle::{canonical_set_of_sets, colour_components_union_find};
use colour_contraction::{
    apply_contraction, apply_contraction_with, build_functional_digraph, compose_total_mapping, contract_to_fixpoint,
    equivalent_contractions, eval_colour_component, eval_colour_partition, evaluate_contraction_mapping,
    iteration_bound, parse_graph_str, permute_enumeration, project_to_roots, serialize_graph,
    simple_gamma_contraction, ColouredGraph, ContractOptions, MergeStrategy,
};

fn arb_graph(max_n: usize, max_colours: u32) -> impl Strategy<Value = ColouredGraph> {
    (1..=max_n, 1..=max_colours).prop_flat_map(|(n, c)| {
        let colours = proptest::collection::vec(0..c, n);
        let edges = proptest::collection::vec((0..n, 0..n), 0..=3 * n);
        (colours, edges).prop_map(move |(colours, edges)| {
            let edges: Vec<(usize, usize)> = edges.into_iter().filter(|(u, v)| u != v).collect();
            ColouredGraph::new(n, &edges, colours).unwrap()
        })
    })
}

fn kept(g: &ColouredGraph, merge: MergeStrategy) -> (ColouredGraph, colour_contraction::ContractionTrace) {
    contract_to_fixpoint(g, &ContractOptions { merge, keep_graphs: true, ..Default::default() }).unwrap()
}

// Pointer chasing to the fixed point, without the in-place sweep.
fn chase(parents: &[usize], mut v: usize) -> usize {
    while parents[v] != v {
        v = parents[v];
    }
    v
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn fixpoint_matches_oracle(g in arb_graph(40, 4)) {
        let (result, trace) = kept(&g, MergeStrategy::Faithful);
        let oracle = eval_colour_partition(&g);
        prop_assert!(equivalent_contractions(&g, &result, &trace, &oracle));
        prop_assert_eq!(result.n(), oracle.len());
        prop_assert!(!result.has_monochromatic_edge());
        prop_assert!(trace.iterations <= iteration_bound(g.n()));
        prop_assert_eq!(compose_total_mapping(&trace).unwrap(), trace.total_map.clone());
        let violations = trace_violations(&g, &result, &trace);
        prop_assert!(violations.is_empty(), "{:?}", violations);
    }

    #[test]
    fn oracle_constructions_agree(g in arb_graph(40, 3)) {
        let partition = eval_colour_partition(&g);
        prop_assert_eq!(partition.canonical_blocks(), colour_components_union_find(&g));
        for v in 0..g.n() {
            let block = &partition.blocks[partition.assignment(g.n())[v]];
            let mut sorted = block.clone();
            sorted.sort_unstable();
            prop_assert_eq!(eval_colour_component(&g, v).unwrap(), sorted);
        }
        let (quotient, assignment) = simple_gamma_contraction(&g);
        let (result, trace) = contract_to_fixpoint(&g, &ContractOptions::default()).unwrap();
        // the engine numbers components by minimum, as does the oracle
        prop_assert_eq!(&result, &quotient);
        prop_assert_eq!(&trace.total_map, &assignment);
    }

    #[test]
    fn one_step_structure(g in arb_graph(40, 3)) {
        let parents = build_functional_digraph(&g);
        for (v, &p) in parents.iter().enumerate() {
            prop_assert!(p <= v);
            prop_assert_eq!(g.colour(p), g.colour(v));
            prop_assert!(p == v || g.neighbours(v).contains(&p));
        }
        let roots = project_to_roots(parents.clone()).unwrap();
        for (v, &root) in roots.iter().enumerate() {
            prop_assert_eq!(root, chase(&parents, v));
        }
        let map = evaluate_contraction_mapping(&g);
        prop_assert!(step_violations(&g, &map).is_empty());
        let faithful = apply_contraction_with(&g, &map, MergeStrategy::Faithful).unwrap();
        let epoch = apply_contraction_with(&g, &map, MergeStrategy::Epoch).unwrap();
        prop_assert_eq!(&faithful, &epoch);
        prop_assert!(faithful.m() <= g.m());
        if g.has_monochromatic_edge() {
            prop_assert!(faithful.n() < g.n());
        } else {
            prop_assert!(map.is_trivial());
            prop_assert_eq!(&apply_contraction(&g, &map).unwrap(), &g);
        }
    }

    #[test]
    fn enumeration_does_not_change_the_partition(g in arb_graph(40, 3), seed in any::<u64>()) {
        let (h, perm) = permute_enumeration(&g, seed);
        prop_assert_eq!(relabel(&h, &invert_permutation(&perm)), g.clone());
        let (rg, tg) = contract_to_fixpoint(&g, &ContractOptions::default()).unwrap();
        let (rh, th) = contract_to_fixpoint(&h, &ContractOptions::default()).unwrap();
        prop_assert_eq!((rg.n(), rg.m()), (rh.n(), rh.m()));
        let fibres = |total: &[usize], n_final: usize| {
            let mut f = vec![Vec::new(); n_final];
            for (v, &t) in total.iter().enumerate() {
                f[t].push(v);
            }
            f
        };
        let of_h = fibres(&th.total_map, rh.n());
        let back = canonical_set_of_sets(of_h.into_iter().map(|f| f.into_iter().map(|v| {
            let inverse = invert_permutation(&perm);
            inverse[v]
        }).collect()));
        prop_assert_eq!(canonical_set_of_sets(fibres(&tg.total_map, rg.n())), back);
        prop_assert!(th.iterations <= iteration_bound(h.n()));
    }

    #[test]
    fn scratchpads_agree_on_whole_runs(g in arb_graph(60, 2)) {
        prop_assert_eq!(kept(&g, MergeStrategy::Faithful), kept(&g, MergeStrategy::Epoch));
    }

    #[test]
    fn text_round_trip(g in arb_graph(30, 6)) {
        let text = serialize_graph(&g);
        let back = parse_graph_str(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(serialize_graph(&back), text);
        prop_assert!(back.validate().is_ok());
    }

    #[test]
    fn fixpoint_is_stable(g in arb_graph(30, 3)) {
        let (result, _) = contract_to_fixpoint(&g, &ContractOptions::default()).unwrap();
        let (again, trace) = contract_to_fixpoint(&result, &ContractOptions::default()).unwrap();
        prop_assert_eq!(trace.iterations, 0);
        prop_assert_eq!(again, result);
    }
}

#[test]
fn bound_is_monotone_and_matches_fibonacci_thresholds() {
    let mut previous = 0;
    let mut thresholds = Vec::new();
    for n in 1..=20_000 {
        let b = iteration_bound(n);
        assert!(b == previous || b == previous + 1, "jump at {n}");
        if b > previous {
            thresholds.push(n);
        }
        previous = b;
    }
    // ceil(phi^k) = L_k for even k and L_k + 1 for odd k, since phi^k = L_k - psi^k
    let (mut a, mut b) = (2usize, 1usize);
    let mut expected = Vec::new();
    for k in 1.. {
        let ceil = if k % 2 == 0 { b } else { b + 1 };
        if ceil > 20_000 {
            break;
        }
        expected.push(ceil);
        (a, b) = (b, a + b);
    }
    assert_eq!(thresholds, expected);
}
