//! Reduction from k-clique to maximum-flow network interdiction.
//!
//! [`FlowNetwork::build_gh`] turns an undirected graph into the four-layer
//! network `s -> N1 (edges) -> N2 (vertices) -> t`. Its max flow equals the
//! number of non-isolated vertices ([`check_lemma1`]), and keeping exactly
//! `C(k,2)` source arcs can leave flow `k` only when the kept edges form a
//! k-clique ([`verify_wood_theorem`]).

mod maxflow;
mod network;

use serde::Serialize;

pub use maxflow::{max_flow, solve_max_flow, FlowSolution, FlowValue};
pub use network::{Arc, ArcClass, FlowNetwork, NodeKind};

use crate::error::{Error, Result};
use crate::graph::{Graph, Pair, VertexSet};
use crate::oracle::has_k_clique;

pub const DEFAULT_SUBSET_CAP: u64 = 1_000_000;

pub fn build_gh(g: &Graph) -> FlowNetwork {
    FlowNetwork::build_gh(g)
}

/// `C(n, r)`, saturating at `u64::MAX`.
pub fn binomial(n: u64, r: u64) -> u64 {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    let mut acc: u128 = 1;
    for i in 0..r {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// Number of vertices with at least one incident edge.
pub fn non_isolated(g: &Graph) -> u64 {
    g.vertices()
        .filter(|&v| g.degree(v).unwrap_or(0) > 0)
        .count() as u64
}

/// Max flow through `G^H` equals the number of non-isolated vertices.
pub fn check_lemma1(g: &Graph) -> bool {
    max_flow(&build_gh(g)).0 == non_isolated(g)
}

/// Max flow after interdicting the vertices in `removed`.
///
/// Interdicting a vertex deletes its `j_v` node together with the edge nodes
/// of every incident edge, which is the network of the graph with those
/// vertices removed. The value is the number of surviving vertices that
/// still have a surviving neighbour.
pub fn vertex_interdiction_value(g: &Graph, removed: &VertexSet) -> Result<FlowValue> {
    for v in removed {
        if !g.contains(v) {
            return Err(Error::UnknownVertex(v));
        }
    }
    let net = build_gh(g).without_nodes(|n| match *n {
        NodeKind::VertexNode(v) => removed.contains(v),
        NodeKind::EdgeNode((u, v)) => removed.contains(u) || removed.contains(v),
        _ => false,
    });
    let value = max_flow(&net);
    debug_assert_eq!(value.0, survivors_with_neighbours(g, removed));
    Ok(value)
}

/// Closed form for [`vertex_interdiction_value`].
pub fn survivors_with_neighbours(g: &Graph, removed: &VertexSet) -> u64 {
    g.vertices()
        .filter(|&v| !removed.contains(v))
        .filter(|&v| {
            g.neighbors(v)
                .map(|n| n.iter().any(|&u| !removed.contains(u)))
                .unwrap_or(false)
        })
        .count() as u64
}

/// Outcome of checking the reduction theorem on one instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WoodCertificate {
    pub k: usize,
    /// `|E| - C(k,2)`, or `None` when that is negative.
    pub removal_size: Option<usize>,
    pub subsets_checked: u64,
    /// A removal set `A1'` leaving max flow exactly `k`, if one was found.
    pub flow_witness: Option<Vec<Pair>>,
    pub clique_witness: Option<VertexSet>,
    /// Both sides of the equivalence agree.
    pub holds: bool,
}

/// Checks, by enumerating every `A1'` of size `|E| - C(k,2)`, that some
/// removal leaves max flow `k` exactly when the graph has a k-clique.
///
/// Enumeration stops at the first witnessing removal. Instances needing
/// more than `subset_cap` subsets are refused up front.
pub fn verify_wood_theorem(g: &Graph, k: usize, subset_cap: u64) -> Result<WoodCertificate> {
    let edges = g.edges();
    let kept = binomial(k as u64, 2);
    let clique_witness = has_k_clique(g, k);
    if kept > edges.len() as u64 {
        return Ok(WoodCertificate {
            k,
            removal_size: None,
            subsets_checked: 0,
            flow_witness: None,
            holds: clique_witness.is_none(),
            clique_witness,
        });
    }
    let kept = kept as usize;
    let total = binomial(edges.len() as u64, kept as u64);
    if total > subset_cap {
        return Err(Error::CapExceeded {
            what: "subset",
            cap: subset_cap,
            explored: 0,
        });
    }

    let net = build_gh(g);
    let mut checked = 0;
    let mut flow_witness = None;
    // iterate over the kept edges; the removal set is the complement
    let mut idx: Vec<usize> = (0..kept).collect();
    loop {
        checked += 1;
        let mut keep = vec![false; edges.len()];
        for &i in &idx {
            keep[i] = true;
        }
        let removed: Vec<Pair> = edges
            .iter()
            .zip(&keep)
            .filter(|(_, &k)| !k)
            .map(|(&e, _)| e)
            .collect();
        if max_flow(&net.remove_source_arcs(&removed)?).0 == k as u64 {
            flow_witness = Some(removed);
            break;
        }
        if !next_combination(&mut idx, edges.len()) {
            break;
        }
    }
    Ok(WoodCertificate {
        k,
        removal_size: Some(edges.len() - kept),
        subsets_checked: checked,
        holds: flow_witness.is_some() == clique_witness.is_some(),
        flow_witness,
        clique_witness,
    })
}

/// Advances `idx` to the next r-combination of `0..n` in lexicographic
/// order; false once exhausted.
fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let r = idx.len();
    for i in (0..r).rev() {
        if idx[i] < n - r + i {
            idx[i] += 1;
            for j in i + 1..r {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
