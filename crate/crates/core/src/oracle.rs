//! Exact clique answers, used as ground truth for the heuristics.
//!
//! The searches run on bitset mirrors of the adjacency. Branching always
//! takes candidates in increasing id order and only ever extends a clique
//! with larger ids, so cliques are visited in lexicographic order of their
//! sorted member lists. Combined with pruning that only discards subtrees
//! which cannot *beat* the incumbent, the first maximum clique found is the
//! lexicographically smallest one.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::bitset::BitSet;
use crate::graph::{Graph, Vertex, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CliqueResult {
    pub size: usize,
    pub witness: VertexSet,
    pub nodes_explored: u64,
}

/// Dense bitset view of a graph. Index `i` is the i-th smallest vertex id.
struct Dense {
    ids: Vec<Vertex>,
    adj: Vec<BitSet>,
}

impl Dense {
    fn new(g: &Graph) -> Self {
        let ids: Vec<Vertex> = g.vertices().collect();
        let n = ids.len();
        let adj = ids
            .iter()
            .map(|&v| {
                let mut row = BitSet::empty(n);
                for u in g.neighbors(v).expect("vertex from graph") {
                    row.insert(ids.binary_search(u).expect("neighbor in graph"));
                }
                row
            })
            .collect();
        Dense { ids, adj }
    }

    fn to_set(&self, members: &[usize]) -> VertexSet {
        members.iter().map(|&i| self.ids[i]).collect()
    }

    /// Greedy colouring of `cand`; the number of colours bounds the clique
    /// number of the induced subgraph.
    fn colour_bound(&self, cand: &BitSet) -> usize {
        let mut uncoloured = cand.clone();
        let mut colours = 0;
        while !uncoloured.is_empty() {
            colours += 1;
            let mut class = uncoloured.clone();
            while let Some(v) = class.first() {
                uncoloured.remove(v);
                class.remove(v);
                class = class.and_not(&self.adj[v]);
            }
        }
        colours
    }
}

struct MaxSearch<'a> {
    dense: &'a Dense,
    current: Vec<usize>,
    best: Vec<usize>,
    nodes: u64,
}

impl MaxSearch<'_> {
    fn expand(&mut self, cand: &BitSet) {
        self.nodes += 1;
        if self.current.len() > self.best.len() {
            self.best = self.current.clone();
        }
        if cand.is_empty() || self.current.len() + self.dense.colour_bound(cand) <= self.best.len()
        {
            return;
        }
        for v in cand.iter() {
            let rest = cand.above(v);
            // v plus everything after it is still too small
            if self.current.len() + 1 + rest.count() <= self.best.len() {
                break;
            }
            let next = rest.and(&self.dense.adj[v]);
            self.current.push(v);
            self.expand(&next);
            self.current.pop();
        }
    }
}

/// Maximum clique; the witness is the lexicographically smallest maximum
/// clique.
pub fn max_clique(g: &Graph) -> CliqueResult {
    let dense = Dense::new(g);
    let mut search = MaxSearch {
        dense: &dense,
        current: Vec::new(),
        best: Vec::new(),
        nodes: 0,
    };
    search.expand(&BitSet::full(dense.ids.len()));
    CliqueResult {
        size: search.best.len(),
        witness: dense.to_set(&search.best),
        nodes_explored: search.nodes,
    }
}

fn find_k(dense: &Dense, k: usize, current: &mut Vec<usize>, cand: &BitSet) -> bool {
    if current.len() == k {
        return true;
    }
    if current.len() + cand.count() < k || current.len() + dense.colour_bound(cand) < k {
        return false;
    }
    for v in cand.iter() {
        let next = cand.above(v).and(&dense.adj[v]);
        current.push(v);
        if find_k(dense, k, current, &next) {
            return true;
        }
        current.pop();
    }
    false
}

/// A k-clique witness (the lexicographically smallest) if one exists. `k = 0`
/// yields the empty set.
pub fn has_k_clique(g: &Graph, k: usize) -> Option<VertexSet> {
    let dense = Dense::new(g);
    let mut current = Vec::with_capacity(k);
    find_k(&dense, k, &mut current, &BitSet::full(dense.ids.len())).then(|| dense.to_set(&current))
}

fn bron_kerbosch(
    dense: &Dense,
    r: &mut Vec<usize>,
    p: BitSet,
    mut x: BitSet,
    out: &mut BTreeSet<VertexSet>,
) {
    if p.is_empty() {
        if x.is_empty() {
            out.insert(dense.to_set(r));
        }
        return;
    }
    // Tomita pivot: the vertex of P ∪ X with most neighbours in P.
    let pivot = p
        .or(&x)
        .iter()
        .max_by_key(|&u| (p.and(&dense.adj[u]).count(), std::cmp::Reverse(u)))
        .expect("P is nonempty");
    let mut p = p;
    for v in p.and_not(&dense.adj[pivot]).iter() {
        r.push(v);
        bron_kerbosch(dense, r, p.and(&dense.adj[v]), x.and(&dense.adj[v]), out);
        r.pop();
        p.remove(v);
        x.insert(v);
    }
}

/// Every inclusion-maximal clique, each once. The graph with no vertices has
/// the empty set as its only maximal clique.
pub fn maximal_cliques(g: &Graph) -> BTreeSet<VertexSet> {
    let dense = Dense::new(g);
    let n = dense.ids.len();
    let mut out = BTreeSet::new();
    bron_kerbosch(
        &dense,
        &mut Vec::new(),
        BitSet::full(n),
        BitSet::empty(n),
        &mut out,
    );
    out
}
