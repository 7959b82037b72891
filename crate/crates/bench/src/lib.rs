//! Inputs shared by the criterion benchmarks.

use cliquelab_core::counterexamples::{fig2_graph, laplante_15, tamta_family};
use cliquelab_core::{FamilyParams, Graph};

/// Seeded G(n, p) graphs at a few sizes, named `gnp-<n>-<p>`.
pub fn random_graphs() -> Vec<(String, Graph)> {
    [(20, 0.5), (40, 0.5), (60, 0.3), (100, 0.1)]
        .into_iter()
        .map(|(n, p)| (format!("gnp-{n}-{p}"), Graph::random_seeded(n, p, 2024)))
        .collect()
}

pub fn fixtures() -> Vec<(String, Graph)> {
    let mut out = vec![
        ("fig2".to_string(), fig2_graph()),
        ("laplante15".to_string(), laplante_15()),
    ];
    for k in [4, 6, 8] {
        let g = tamta_family(FamilyParams::new(k).expect("k >= 4"));
        out.push((format!("tamta-{k}"), g));
    }
    out
}
