mod common;

use common::*;
use dicut::{in_cut_weight, max_flow, vertex_in_cut, vertex_max_flow};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn max_flow_equals_min_cut(g in edge_graph(9, 1000), s in 0usize..9, t in 0usize..9) {
        let n = g.vertex_count();
        let (s, t) = (s % n, t % n);
        prop_assume!(s != t);
        let f = max_flow(&g, s, t).unwrap();
        let sink: Vec<usize> = (0..n).filter(|v| !f.source_side.contains(v)).collect();
        prop_assert!(f.source_side.contains(&s) && sink.contains(&t));
        prop_assert_eq!(f.value, in_cut_weight(&g, &sink));
        prop_assert_eq!(f.value, f.min_cut_edges.iter().map(|&e| g.edge(e).weight).sum::<u64>());
        prop_assert_eq!(f.value, brute_edge(&g, s, Some(t), usize::MAX));
    }

    #[test]
    fn vertex_flow_equals_min_separator(g in vertex_graph(9, 1000), s in 0usize..9, t in 0usize..9) {
        let n = g.vertex_count();
        let (s, t) = (s % n, t % n);
        prop_assume!(s != t && !g.has_edge(s, t));
        let f = vertex_max_flow(&g, s, t).unwrap();
        prop_assert!(f.sink_component.contains(&t));
        prop_assert_eq!(vertex_in_cut(&g, s, &f.sink_component), Some((f.separator.clone(), f.value)));
        prop_assert_eq!(Some(f.value), brute_vertex(&g, s, Some(t), usize::MAX));
    }

    #[test]
    fn flow_is_antisymmetric_under_reversal(g in edge_graph(9, 50), s in 0usize..9, t in 0usize..9) {
        let n = g.vertex_count();
        let (s, t) = (s % n, t % n);
        prop_assume!(s != t);
        prop_assert_eq!(max_flow(&g, s, t).unwrap().value, max_flow(&g.reverse(), t, s).unwrap().value);
    }
}

#[test]
fn adjacent_terminals_are_rejected() {
    let g = dicut::VertexWeightedDigraph::new(vec![1, 1], [(0, 1)]).unwrap();
    assert!(vertex_max_flow(&g, 0, 1).is_err());
    assert!(vertex_max_flow(&g, 1, 1).is_err());
}
