use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Pair, Vertex, VertexSet};

/// Node identity, tagged with the source-graph object it stands for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum NodeKind {
    Source,
    Sink,
    /// `i_e`, one per source-graph edge.
    EdgeNode(Pair),
    /// `j_v`, one per source-graph vertex.
    VertexNode(Vertex),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ArcClass {
    /// `s -> i_e`, capacity 2.
    A1,
    /// `i_e -> j_u`, capacity 1.
    A2,
    /// `j_v -> t`, capacity 1.
    A3,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Arc {
    pub tail: usize,
    pub head: usize,
    pub capacity: u64,
    pub class: ArcClass,
}

/// Capacitated directed network with a distinguished source and sink.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlowNetwork {
    nodes: Vec<NodeKind>,
    arcs: Vec<Arc>,
}

impl FlowNetwork {
    /// Builds `G^H`: source, one node per edge, one node per vertex, sink.
    /// Edges are taken in sorted order and vertices in id order.
    pub fn build_gh(g: &Graph) -> Self {
        let edges = g.edges();
        let vertices: Vec<Vertex> = g.vertices().collect();
        let mut nodes = Vec::with_capacity(2 + edges.len() + vertices.len());
        nodes.push(NodeKind::Source);
        nodes.extend(edges.iter().map(|&e| NodeKind::EdgeNode(e)));
        nodes.extend(vertices.iter().map(|&v| NodeKind::VertexNode(v)));
        nodes.push(NodeKind::Sink);

        let first_vertex = 1 + edges.len();
        let vertex_node = |v: Vertex| first_vertex + vertices.binary_search(&v).expect("vertex");
        let sink = nodes.len() - 1;

        let mut arcs = Vec::with_capacity(3 * edges.len() + vertices.len());
        for i in 0..edges.len() {
            arcs.push(Arc {
                tail: 0,
                head: 1 + i,
                capacity: 2,
                class: ArcClass::A1,
            });
        }
        for (i, &(u, v)) in edges.iter().enumerate() {
            for end in [u, v] {
                arcs.push(Arc {
                    tail: 1 + i,
                    head: vertex_node(end),
                    capacity: 1,
                    class: ArcClass::A2,
                });
            }
        }
        for &v in &vertices {
            arcs.push(Arc {
                tail: vertex_node(v),
                head: sink,
                capacity: 1,
                class: ArcClass::A3,
            });
        }
        FlowNetwork { nodes, arcs }
    }

    pub fn nodes(&self) -> &[NodeKind] {
        &self.nodes
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs_in(&self, class: ArcClass) -> impl Iterator<Item = &Arc> + '_ {
        self.arcs.iter().filter(move |a| a.class == class)
    }

    pub fn source(&self) -> usize {
        self.index_of(NodeKind::Source)
            .expect("network has a source")
    }

    pub fn sink(&self) -> usize {
        self.index_of(NodeKind::Sink).expect("network has a sink")
    }

    pub fn index_of(&self, kind: NodeKind) -> Option<usize> {
        self.nodes.iter().position(|&n| n == kind)
    }

    /// `G^H - A1'`: drops the `s -> i_e` arc of every listed source edge.
    pub fn remove_source_arcs(&self, edges: &[Pair]) -> Result<FlowNetwork> {
        let mut drop = BTreeSet::new();
        for &(u, v) in edges {
            let e = crate::graph::pair(u, v);
            let node = self
                .index_of(NodeKind::EdgeNode(e))
                .ok_or(Error::UnknownEdge(u, v))?;
            if !self
                .arcs
                .iter()
                .any(|a| a.class == ArcClass::A1 && a.head == node)
            {
                return Err(Error::UnknownEdge(u, v));
            }
            drop.insert(node);
        }
        let arcs = self
            .arcs
            .iter()
            .filter(|a| !(a.class == ArcClass::A1 && drop.contains(&a.head)))
            .copied()
            .collect();
        Ok(FlowNetwork {
            nodes: self.nodes.clone(),
            arcs,
        })
    }

    /// Deletes nodes (and every arc touching them), renumbering the rest.
    pub(crate) fn without_nodes(&self, doomed: impl Fn(&NodeKind) -> bool) -> FlowNetwork {
        let mut remap = vec![None; self.nodes.len()];
        let mut nodes = Vec::new();
        for (i, n) in self.nodes.iter().enumerate() {
            if !doomed(n) {
                remap[i] = Some(nodes.len());
                nodes.push(*n);
            }
        }
        let arcs = self
            .arcs
            .iter()
            .filter_map(|a| {
                Some(Arc {
                    tail: remap[a.tail]?,
                    head: remap[a.head]?,
                    ..*a
                })
            })
            .collect();
        FlowNetwork { nodes, arcs }
    }

    /// Deletes the `j_v` nodes of `removed` and nothing else.
    pub fn remove_vertex_nodes(&self, removed: &VertexSet) -> Result<FlowNetwork> {
        for v in removed {
            self.index_of(NodeKind::VertexNode(v))
                .ok_or(Error::UnknownVertex(v))?;
        }
        Ok(self.without_nodes(|n| matches!(n, NodeKind::VertexNode(v) if removed.contains(*v))))
    }

    /// Layered DOT rendering, `s | N1 | N2 | t` from left to right.
    pub fn to_dot(&self, g: &Graph) -> String {
        let name = |n: &NodeKind| match n {
            NodeKind::Source => "s".to_string(),
            NodeKind::Sink => "t".to_string(),
            NodeKind::EdgeNode((u, v)) => format!("i_{}_{}", g.label(*u), g.label(*v)),
            NodeKind::VertexNode(v) => format!("j_{}", g.label(*v)),
        };
        let mut out = String::from("digraph GH {\n  rankdir=LR;\n");
        type Layer = (&'static str, fn(&NodeKind) -> bool);
        let layers: [Layer; 4] = [
            ("s", |n| matches!(n, NodeKind::Source)),
            ("n1", |n| matches!(n, NodeKind::EdgeNode(_))),
            ("n2", |n| matches!(n, NodeKind::VertexNode(_))),
            ("t", |n| matches!(n, NodeKind::Sink)),
        ];
        for (layer, member) in layers {
            write!(out, "  subgraph {layer} {{ rank=same;").unwrap();
            for (i, n) in self.nodes.iter().enumerate().filter(|(_, n)| member(n)) {
                write!(out, " {i} [label=\"{}\"];", name(n)).unwrap();
            }
            out.push_str(" }\n");
        }
        for a in &self.arcs {
            writeln!(
                out,
                "  {} -> {} [label=\"{}\"];",
                a.tail, a.head, a.capacity
            )
            .unwrap();
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counterexamples::fig1_graph;

    #[test]
    fn gh_sizes() {
        let net = FlowNetwork::build_gh(&fig1_graph());
        assert_eq!(net.node_count(), 15);
        assert_eq!(net.arc_count(), 27);

        let k2 = FlowNetwork::build_gh(&Graph::complete(2));
        assert_eq!((k2.node_count(), k2.arc_count()), (5, 5));

        let empty = FlowNetwork::build_gh(&Graph::new(3));
        assert_eq!((empty.node_count(), empty.arc_count()), (5, 3));
    }

    #[test]
    fn gh_invariants() {
        let g = fig1_graph();
        let net = FlowNetwork::build_gh(&g);
        let (e, v) = (g.edge_count(), g.vertex_count());
        assert_eq!(net.arcs_in(ArcClass::A1).count(), e);
        assert_eq!(net.arcs_in(ArcClass::A2).count(), 2 * e);
        assert_eq!(net.arcs_in(ArcClass::A3).count(), v);
        let layer = |i: usize| match net.nodes()[i] {
            NodeKind::Source => 0,
            NodeKind::EdgeNode(_) => 1,
            NodeKind::VertexNode(_) => 2,
            NodeKind::Sink => 3,
        };
        for a in net.arcs() {
            let expected = if a.class == ArcClass::A1 { 2 } else { 1 };
            assert_eq!(a.capacity, expected);
            assert_eq!(layer(a.head), layer(a.tail) + 1);
        }
    }

    #[test]
    fn removing_unknown_edges_fails() {
        let net = FlowNetwork::build_gh(&Graph::complete(2));
        assert_eq!(
            net.remove_source_arcs(&[(0, 5)]),
            Err(Error::UnknownEdge(0, 5))
        );
        assert_eq!(net.remove_source_arcs(&[(1, 0)]).unwrap().arc_count(), 4);
        assert!(net.remove_vertex_nodes(&VertexSet::from([9])).is_err());
    }

    #[test]
    fn dot_layers() {
        let dot = FlowNetwork::build_gh(&Graph::complete(2)).to_dot(&Graph::complete(2));
        assert!(dot.contains("rankdir=LR"));
        assert_eq!(dot.matches(" -> ").count(), 5);
    }
}
