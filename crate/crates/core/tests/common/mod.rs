//! Brute-force reference implementations, deliberately naive and independent
//! of the library's algorithms.
#![allow(dead_code)]

use std::collections::BTreeSet;

use cliquelab_core::{Graph, Pair, Vertex, VertexSet};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Seeded random graph; density cycles through 0.1..=0.9.
pub fn seeded_graph(seed: u64, max_n: usize) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = 1 + (seed as usize % max_n);
    let p = 0.1 + 0.1 * (seed % 9) as f64;
    Graph::random(n, p, &mut rng)
}

fn members(ids: &[Vertex], mask: u32) -> Vec<Vertex> {
    (0..ids.len())
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| ids[i])
        .collect()
}

fn all_adjacent(g: &Graph, s: &[Vertex]) -> bool {
    s.iter()
        .enumerate()
        .all(|(i, &u)| s[i + 1..].iter().all(|&v| g.has_edge(u, v)))
}

/// Every clique, by testing all 2^n subsets.
pub fn all_cliques(g: &Graph) -> Vec<BTreeSet<Vertex>> {
    let ids: Vec<Vertex> = g.vertices().collect();
    assert!(ids.len() <= 20, "brute force is for small graphs");
    (0u32..1 << ids.len())
        .map(|mask| members(&ids, mask))
        .filter(|s| all_adjacent(g, s))
        .map(|s| s.into_iter().collect())
        .collect()
}

pub fn naive_max_clique(g: &Graph) -> usize {
    all_cliques(g).iter().map(BTreeSet::len).max().unwrap_or(0)
}

pub fn naive_maximal_cliques(g: &Graph) -> BTreeSet<VertexSet> {
    let cliques = all_cliques(g);
    cliques
        .iter()
        .filter(|c| !cliques.iter().any(|d| d.len() > c.len() && c.is_subset(d)))
        .map(|c| c.iter().copied().collect())
        .collect()
}

/// Pairs `{p, q}` such that `{v, p, q}` is a triangle, from all triples.
pub fn naive_triangle_pairs(g: &Graph, v: Vertex) -> BTreeSet<Pair> {
    let mut out = BTreeSet::new();
    for p in g.vertices() {
        for q in g.vertices() {
            if v != p && v != q && p < q && all_adjacent(g, &[v, p, q]) {
                out.insert((p, q));
            }
        }
    }
    out
}

pub fn naive_degree(g: &Graph, v: Vertex) -> usize {
    g.vertices().filter(|&u| g.has_edge(u, v)).count()
}

pub fn choose(n: usize, r: usize) -> usize {
    if r > n {
        return 0;
    }
    (0..r).fold(1, |acc, i| acc * (n - i) / (i + 1))
}
