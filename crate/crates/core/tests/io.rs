mod common;

use common::*;
use dicut::{emit_edge_graph, emit_vertex_graph, parse_graph, Error, ParsedGraph, WeightedDigraph};
use proptest::prelude::*;

#[test]
fn parses_both_modes() {
    let ParsedGraph::Edge(g) = parse_graph("# two vertices\n2 1 directed edge\n0 1 5\n").unwrap() else { panic!() };
    assert_eq!((g.vertex_count(), g.edge(0).weight), (2, 5));
    let text = "3 2 directed vertex\n0 1\n1 2.5\n2 1/2\n0 1\n1 2\n";
    let ParsedGraph::Vertex(v) = parse_graph(text).unwrap() else { panic!() };
    assert_eq!(v.denominator(), 2);
    assert_eq!(v.weights(), &[2, 5, 1]);
}

#[test]
fn errors_carry_line_numbers() {
    for (text, line) in [
        ("2 1 directed edge\n0 1\n", 2),
        ("3 0 directed vertex\n0 1\n0 2\n2 1\n", 3),
        ("2 1 directed edge\n0 1 1\n1 0 1\n", 3),
        ("2 1 undirected edge\n0 1 1\n", 1),
        ("2 1 directed edge\n0 1 0\n", 2),
    ] {
        match parse_graph(text) {
            Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
            other => panic!("{text:?} gave {other:?}"),
        }
    }
}

fn rational_graph() -> impl Strategy<Value = WeightedDigraph> {
    (2usize..10, 1u64..=12).prop_flat_map(|(n, den)| {
        prop::collection::vec((0..n, 0..n, 1u64..100), 0..25)
            .prop_map(move |e| WeightedDigraph::with_denominator(n, e, den).unwrap())
    })
}

proptest! {
    #[test]
    fn edge_round_trip(g in rational_graph()) {
        let text = emit_edge_graph(&g);
        let ParsedGraph::Edge(h) = parse_graph(&text).unwrap() else { panic!() };
        prop_assert_eq!(emit_edge_graph(&h), text);
        prop_assert_eq!(h.edge_count(), g.edge_count());
        for (a, b) in g.edges().iter().zip(h.edges()) {
            prop_assert_eq!(g.to_rational(a.weight), h.to_rational(b.weight));
        }
    }

    #[test]
    fn vertex_round_trip(g in vertex_graph(10, 50)) {
        let text = emit_vertex_graph(&g);
        let parsed = parse_graph(&text).unwrap();
        prop_assert_eq!(parsed.emit(), text);
        prop_assert_eq!(parsed, ParsedGraph::Vertex(g));
    }
}
