mod common;

use cliquelab_core::counterexamples::{fig1_graph, fig2_graph, laplante_15, tamta_family};
use cliquelab_core::{has_k_clique, max_clique, maximal_cliques, FamilyParams, Graph, VertexSet};
use common::{naive_max_clique, naive_maximal_cliques, seeded_graph};
use proptest::prelude::*;

#[test]
fn branch_and_bound_matches_brute_force() {
    for seed in 0..100 {
        let g = seeded_graph(seed, 8);
        let r = max_clique(&g);
        assert_eq!(r.size, naive_max_clique(&g), "seed {seed}");
        assert_eq!(r.witness.len(), r.size);
        assert!(g.is_clique(&r.witness).unwrap(), "seed {seed}");
    }
}

#[test]
fn maximal_cliques_match_brute_force() {
    for seed in 0..100 {
        let g = seeded_graph(seed, 10);
        assert_eq!(
            maximal_cliques(&g),
            naive_maximal_cliques(&g),
            "seed {seed}"
        );
    }
    for g in [fig1_graph(), fig2_graph(), laplante_15()] {
        assert_eq!(maximal_cliques(&g), naive_maximal_cliques(&g));
    }
}

#[test]
fn fixture_values() {
    let fig1 = max_clique(&fig1_graph());
    assert_eq!(fig1.size, 3);
    assert_eq!(fig1_graph().format_set(&fig1.witness), "{1,2,5}");

    let g = fig2_graph();
    let r = max_clique(&g);
    assert_eq!(g.format_set(&r.witness), "{4,5,6,7}");
    assert_eq!(naive_maximal_cliques(&g).len(), 7);

    let l = laplante_15();
    assert_eq!(l.format_set(&max_clique(&l).witness), "{1,2,3,4,5}");
    assert_eq!(maximal_cliques(&l).len(), 11);

    for k in 4..=8 {
        let g = tamta_family(FamilyParams::new(k).unwrap());
        assert_eq!(max_clique(&g).size, k);
    }
    assert_eq!(max_clique(&Graph::new(0)).size, 0);
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec((0..n, 0..n), 0..n * n).prop_map(move |pairs| {
            let edges: Vec<_> = pairs.into_iter().filter(|(u, v)| u != v).collect();
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn removal_never_grows_the_clique(g in arb_graph(12), pick in 0usize..12) {
        let v = pick % g.vertex_count();
        let smaller = g.remove_vertices(&VertexSet::from([v])).unwrap();
        let (before, after) = (max_clique(&g).size, max_clique(&smaller).size);
        prop_assert!(after <= before && before <= after + 1);
    }

    #[test]
    fn maximal_cliques_are_maximal(g in arb_graph(12)) {
        let all = maximal_cliques(&g);
        for c in &all {
            prop_assert!(g.is_clique(c).unwrap());
            for v in g.vertices().filter(|&v| !c.contains(v)) {
                let mut bigger = c.clone();
                bigger.insert(v);
                prop_assert!(!g.is_clique(&bigger).unwrap());
            }
        }
        let best = all.iter().map(VertexSet::len).max().unwrap_or(0);
        prop_assert_eq!(best, max_clique(&g).size);
    }

    #[test]
    fn decision_agrees_with_size(g in arb_graph(12), k in 0usize..8) {
        let found = has_k_clique(&g, k);
        prop_assert_eq!(found.is_some(), k <= max_clique(&g).size);
        if let Some(w) = found {
            prop_assert_eq!(w.len(), k);
            prop_assert!(g.is_clique(&w).unwrap());
        }
    }
}
