mod common;

use common::*;
use dicut::oracle::{
    exact_global_ec, exact_global_vc, exact_rooted_ec, exact_rooted_vc, sink_constrained_ec, sink_constrained_vc,
};
use dicut::{max_flow, CutOutcome, VertexWeightedDigraph, WeightedDigraph};
use proptest::prelude::*;

#[test]
fn small_examples() {
    let g = WeightedDigraph::new(3, [(0, 1, 1), (0, 2, 2)]).unwrap();
    assert_eq!(exact_rooted_ec(&g, 0).unwrap().weight_units, 1);
    let cycle = WeightedDigraph::new(3, [(0, 1, 1), (1, 2, 2), (2, 0, 3)]).unwrap();
    assert_eq!(exact_global_ec(&cycle).unwrap().weight_units, 1);
    let path = VertexWeightedDigraph::new(vec![1, 4, 1], [(0, 1), (1, 2)]).unwrap();
    let CutOutcome::Cut(c) = exact_rooted_vc(&path, 0).unwrap() else { panic!("path has a cut") };
    assert_eq!(c.weight_units, 4);
}

#[test]
fn enumeration_guard() {
    let g = WeightedDigraph::new(21, (0..20).map(|v| (v, v + 1, 1))).unwrap();
    assert!(sink_constrained_ec(&g, 0, 5, 3).is_err());
    assert!(sink_constrained_ec(&g, 0, 0, 3).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn rooted_ec_matches_enumeration(g in edge_graph(9, 20), r in 0usize..9) {
        let r = r % g.vertex_count();
        let c = exact_rooted_ec(&g, r).unwrap();
        prop_assert_eq!(c.weight_units, brute_edge(&g, r, None, usize::MAX));
        prop_assert!(c.is_valid_edge_cut(&g));
    }

    #[test]
    fn rooted_vc_matches_enumeration(g in vertex_graph(9, 20), r in 0usize..9) {
        let r = r % g.vertex_count();
        let got = match exact_rooted_vc(&g, r).unwrap() {
            CutOutcome::Cut(c) => {
                prop_assert!(c.is_valid_vertex_cut(&g));
                Some(c.weight_units)
            }
            CutOutcome::NoCut => None,
        };
        prop_assert_eq!(got, brute_vertex(&g, r, None, usize::MAX));
    }

    #[test]
    fn global_ec_matches_enumeration(g in edge_graph(8, 20)) {
        let c = exact_global_ec(&g).unwrap();
        prop_assert_eq!(c.weight_units, brute_global_edge(&g));
        prop_assert!(c.is_valid_edge_cut(&g));
    }

    #[test]
    fn global_vc_matches_enumeration(g in vertex_graph(8, 20)) {
        let got = exact_global_vc(&g).unwrap().cut().map(|c| c.weight_units);
        prop_assert_eq!(got, brute_global_vertex(&g));
    }

    #[test]
    fn sink_constrained_cuts(g in edge_graph(8, 20), t in 1usize..8) {
        let n = g.vertex_count();
        let t = t % (n - 1) + 1;
        let mut last = u64::MAX;
        for k in 1..n {
            let w = sink_constrained_ec(&g, 0, t, k).unwrap();
            prop_assert_eq!(w, brute_edge(&g, 0, Some(t), k));
            prop_assert!(w <= last);
            last = w;
        }
        prop_assert_eq!(sink_constrained_ec(&g, 0, t, 1).unwrap(), g.weighted_in_degree(t));
        prop_assert_eq!(last, max_flow(&g, 0, t).unwrap().value);
    }

    #[test]
    fn sink_constrained_vertex_cuts(g in vertex_graph(8, 20), t in 1usize..8) {
        let n = g.vertex_count();
        let t = t % (n - 1) + 1;
        let mut last = None;
        for k in 1..n {
            let w = sink_constrained_vc(&g, 0, t, k).unwrap();
            prop_assert_eq!(w, brute_vertex(&g, 0, Some(t), k));
            if let (Some(a), Some(b)) = (last, w) {
                prop_assert!(b <= a);
            }
            last = w;
        }
    }
}
