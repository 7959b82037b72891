//! Shortest-augmenting-path maximum flow (Edmonds–Karp).

use std::collections::VecDeque;

use serde::Serialize;

use super::network::FlowNetwork;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct FlowValue(pub u64);

impl FlowValue {
    pub fn value(self) -> u64 {
        self.0
    }
}

/// A maximum flow together with the certificate needed to check it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlowSolution {
    pub value: FlowValue,
    /// Flow on each arc, indexed like [`FlowNetwork::arcs`].
    pub arc_flow: Vec<u64>,
    /// Nodes reachable from the source in the final residual network.
    pub source_side: Vec<bool>,
}

struct Residual {
    // (head, residual capacity, index of reverse entry)
    edges: Vec<(usize, u64, usize)>,
    out: Vec<Vec<usize>>,
}

impl Residual {
    fn new(net: &FlowNetwork) -> Self {
        let mut r = Residual {
            edges: Vec::with_capacity(2 * net.arc_count()),
            out: vec![Vec::new(); net.node_count()],
        };
        for a in net.arcs() {
            let fwd = r.edges.len();
            r.edges.push((a.head, a.capacity, fwd + 1));
            r.edges.push((a.tail, 0, fwd));
            r.out[a.tail].push(fwd);
            r.out[a.head].push(fwd + 1);
        }
        r
    }

    fn reachable(&self, from: usize) -> (Vec<bool>, Vec<Option<usize>>) {
        let mut seen = vec![false; self.out.len()];
        let mut via = vec![None; self.out.len()];
        let mut queue = VecDeque::from([from]);
        seen[from] = true;
        while let Some(u) = queue.pop_front() {
            for &e in &self.out[u] {
                let (head, cap, _) = self.edges[e];
                if cap > 0 && !seen[head] {
                    seen[head] = true;
                    via[head] = Some(e);
                    queue.push_back(head);
                }
            }
        }
        (seen, via)
    }
}

pub fn solve_max_flow(net: &FlowNetwork) -> FlowSolution {
    let (s, t) = (net.source(), net.sink());
    let mut res = Residual::new(net);
    let mut total = 0;
    loop {
        let (seen, via) = res.reachable(s);
        if !seen[t] {
            let arc_flow = (0..net.arc_count())
                .map(|i| res.edges[2 * i + 1].1)
                .collect();
            return FlowSolution {
                value: FlowValue(total),
                arc_flow,
                source_side: seen,
            };
        }
        let mut delta = u64::MAX;
        let mut v = t;
        while let Some(e) = via[v] {
            delta = delta.min(res.edges[e].1);
            v = res.edges[res.edges[e].2].0;
        }
        let mut v = t;
        while let Some(e) = via[v] {
            let rev = res.edges[e].2;
            res.edges[e].1 -= delta;
            res.edges[rev].1 += delta;
            v = res.edges[rev].0;
        }
        total += delta;
    }
}

pub fn max_flow(net: &FlowNetwork) -> FlowValue {
    solve_max_flow(net).value
}
