mod common;

use cliquelab_core::counterexamples::{fig2_graph, laplante_15};
use cliquelab_core::{parse_graph, serialize_graph, Graph, GraphFormat, VertexSet};
use common::naive_degree;
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec((0..n, 0..n), 0..2 * n * n).prop_map(move |pairs| {
            let edges: Vec<_> = pairs.into_iter().filter(|(u, v)| u != v).collect();
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

#[test]
fn labelled_fixtures_round_trip() {
    for g in [fig2_graph(), laplante_15()] {
        for f in [GraphFormat::Dimacs, GraphFormat::EdgeList] {
            let back = parse_graph(&serialize_graph(&g, f), f).unwrap();
            assert_eq!(back, g);
        }
    }
}

#[test]
fn fig2_without_six_and_seven() {
    let g = fig2_graph();
    let rest = g
        .remove_vertices(&g.set_by_labels(&["6", "7"]).unwrap())
        .unwrap();
    assert_eq!(rest.vertex_count(), 5);
    assert_eq!(rest.edge_count(), 8);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn serialization_round_trips(g in arb_graph(20)) {
        for f in [GraphFormat::Dimacs, GraphFormat::EdgeList] {
            let text = serialize_graph(&g, f);
            prop_assert_eq!(&parse_graph(&text, f).unwrap(), &g);
        }
    }

    #[test]
    fn degrees_sum_to_twice_the_edges(g in arb_graph(20)) {
        let total: usize = g.vertices().map(|v| g.degree(v).unwrap()).sum();
        prop_assert_eq!(total, 2 * g.edge_count());
        for v in g.vertices() {
            prop_assert_eq!(g.degree(v).unwrap(), naive_degree(&g, v));
        }
    }

    #[test]
    fn removal_keeps_ids_and_drops_incident_edges(
        g in arb_graph(20),
        picks in proptest::collection::vec(0usize..20, 0..5),
    ) {
        let removed: VertexSet = picks.into_iter().filter(|&v| g.contains(v)).collect();
        let h = g.remove_vertices(&removed).unwrap();
        prop_assert_eq!(h.vertex_count(), g.vertex_count() - removed.len());
        for v in h.vertices() {
            prop_assert!(!removed.contains(v));
            let expected = g.neighbors(v).unwrap().iter().filter(|&&u| !removed.contains(u)).count();
            prop_assert_eq!(h.degree(v).unwrap(), expected);
        }
    }
}
