//! Fixture graphs: the small worked examples and the two counterexample
//! constructions.
//!
//! Numbered vertices keep their printed number as display label and get id
//! `label - 1`. In [`laplante_15`] the lettered vertices follow the numbers.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Graph, Pair, Vertex, VertexSet};

fn numbered(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edges(n, edges.iter().map(|&(u, v)| (u - 1, v - 1)))
        .expect("fixture edges are valid")
        .with_labels((0..n).map(|v| (v, (v + 1).to_string())))
}

/// Six vertices with the single triangle {1,2,5}.
pub fn fig1_graph() -> Graph {
    numbered(6, &[(6, 4), (4, 5), (2, 3), (3, 4), (1, 2), (2, 5), (5, 1)])
}

/// Seven vertices, fifteen edges, maximum clique {4,5,6,7}.
pub fn fig2_graph() -> Graph {
    numbered(
        7,
        &[
            (1, 2),
            (1, 3),
            (2, 3),
            (1, 4),
            (2, 5),
            (3, 4),
            (3, 5),
            (1, 6),
            (2, 7),
            (4, 5),
            (4, 6),
            (4, 7),
            (5, 7),
            (5, 6),
            (6, 7),
        ],
    )
}

/// Letters of [`laplante_15`] in id order with the numbered vertices
/// (1-based) each one is attached to.
pub const LAPLANTE_LETTERS: [(&str, [usize; 3]); 10] = [
    ("A", [1, 2, 3]),
    ("B", [1, 2, 4]),
    ("C", [1, 2, 5]),
    ("D", [1, 3, 4]),
    ("E", [1, 3, 5]),
    ("F", [1, 4, 5]),
    ("G", [2, 3, 4]),
    ("H", [2, 3, 5]),
    ("I", [2, 4, 5]),
    ("J", [3, 4, 5]),
];

/// A 5-clique on 1..5 plus one lettered vertex per 3-subset of it, adjacent
/// to exactly that subset. 15 vertices, 40 edges.
pub fn laplante_15() -> Graph {
    let mut edges = Vec::new();
    for u in 0..5 {
        for v in u + 1..5 {
            edges.push((u, v));
        }
    }
    for (i, (_, members)) in LAPLANTE_LETTERS.iter().enumerate() {
        edges.extend(members.iter().map(|&m| (5 + i, m - 1)));
    }
    let labels = (0..5).map(|v| (v, (v + 1).to_string())).chain(
        LAPLANTE_LETTERS
            .iter()
            .enumerate()
            .map(|(i, (l, _))| (5 + i, l.to_string())),
    );
    Graph::from_edges(15, edges)
        .expect("fixture edges are valid")
        .with_labels(labels)
}

/// Parameters for [`tamta_family`]; the construction needs `k >= 4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilyParams {
    k: usize,
}

impl FamilyParams {
    pub fn new(k: usize) -> Result<Self> {
        if k < 4 {
            return Err(Error::Precondition(format!(
                "the clique-interdiction family needs k >= 4, got {k}"
            )));
        }
        Ok(FamilyParams { k })
    }

    pub fn k(&self) -> usize {
        self.k
    }
}

/// Where each part of a [`tamta_family`] graph sits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyLayout {
    /// The k-clique, ids `0..k`.
    pub big: Vec<Vertex>,
    /// The two (k-1)-cliques.
    pub left: Vec<Vertex>,
    pub right: Vec<Vertex>,
    /// Members of the k-clique with an edge leaving it (`v` and `v'`).
    pub attached: [Vertex; 2],
    /// Their partners in `left` and `right`.
    pub targets: [Vertex; 2],
    /// The k-2 edges joining `left` and `right`.
    pub matching: Vec<Pair>,
}

impl FamilyLayout {
    pub fn new(params: FamilyParams) -> Self {
        let k = params.k;
        let big: Vec<Vertex> = (0..k).collect();
        let left: Vec<Vertex> = (k..2 * k - 1).collect();
        let right: Vec<Vertex> = (2 * k - 1..3 * k - 2).collect();
        let matching = left[1..]
            .iter()
            .copied()
            .zip(right[1..].iter().copied())
            .collect();
        FamilyLayout {
            attached: [big[0], big[1]],
            targets: [left[0], right[0]],
            big,
            left,
            right,
            matching,
        }
    }

    /// Edges inside the k-clique that avoid both attached vertices.
    pub fn inner_pairs(&self) -> Vec<Pair> {
        let free: Vec<Vertex> = self
            .big
            .iter()
            .copied()
            .filter(|v| !self.attached.contains(v))
            .collect();
        let mut out = Vec::new();
        for (i, &u) in free.iter().enumerate() {
            for &v in &free[i + 1..] {
                out.push((u, v));
            }
        }
        out
    }

    pub fn big_clique(&self) -> VertexSet {
        self.big.iter().copied().collect()
    }
}

/// The infinite counterexample family for the interdiction heuristic: a
/// k-clique, two (k-1)-cliques, one edge from each of two k-clique vertices
/// into a different small clique, and a matching between the remaining k-2
/// vertices of the small cliques. 3k-2 vertices; every vertex has degree
/// k-1 except the two attached k-clique vertices, which have degree k.
pub fn tamta_family(params: FamilyParams) -> Graph {
    let layout = FamilyLayout::new(params);
    let mut edges = Vec::new();
    for part in [&layout.big, &layout.left, &layout.right] {
        for (i, &u) in part.iter().enumerate() {
            for &v in &part[i + 1..] {
                edges.push((u, v));
            }
        }
    }
    edges.push((layout.attached[0], layout.targets[0]));
    edges.push((layout.attached[1], layout.targets[1]));
    edges.extend(layout.matching.iter().copied());

    let k = params.k;
    let labels = layout
        .big
        .iter()
        .enumerate()
        .map(|(i, &v)| (v, format!("K{i}")))
        .chain(
            layout
                .left
                .iter()
                .enumerate()
                .map(|(i, &v)| (v, format!("L{i}"))),
        )
        .chain(
            layout
                .right
                .iter()
                .enumerate()
                .map(|(i, &v)| (v, format!("R{i}"))),
        );
    Graph::from_edges(3 * k - 2, edges)
        .expect("construction edges are valid")
        .with_labels(labels)
}

/// Builtin fixture names accepted on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fixture {
    Fig1,
    Fig2,
    Laplante15,
    Tamta(FamilyParams),
}

impl Fixture {
    pub fn graph(&self) -> Graph {
        match self {
            Fixture::Fig1 => fig1_graph(),
            Fixture::Fig2 => fig2_graph(),
            Fixture::Laplante15 => laplante_15(),
            Fixture::Tamta(p) => tamta_family(*p),
        }
    }

    pub const NAMES: &'static str = "fig1, fig2, laplante15, tamta-<k> (k >= 4)";
}

impl FromStr for Fixture {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fig1" => Ok(Fixture::Fig1),
            "fig2" => Ok(Fixture::Fig2),
            "laplante15" | "laplante-15" => Ok(Fixture::Laplante15),
            _ => {
                let k = s
                    .strip_prefix("tamta-")
                    .and_then(|k| k.parse().ok())
                    .ok_or_else(|| {
                        Error::Precondition(format!(
                            "unknown fixture `{s}`; expected one of {}",
                            Fixture::NAMES
                        ))
                    })?;
                Ok(Fixture::Tamta(FamilyParams::new(k)?))
            }
        }
    }
}

impl fmt::Display for Fixture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Fixture::Fig1 => f.write_str("fig1"),
            Fixture::Fig2 => f.write_str("fig2"),
            Fixture::Laplante15 => f.write_str("laplante15"),
            Fixture::Tamta(p) => write!(f, "tamta-{}", p.k),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binom(n: usize, r: usize) -> usize {
        (0..r).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn fig1_shape() {
        let g = fig1_graph();
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.edge_count(), 7);
        assert_eq!(g.degree(g.vertex_by_label("3").unwrap()).unwrap(), 2);
    }

    #[test]
    fn fig2_shape() {
        let g = fig2_graph();
        assert_eq!(g.vertex_count(), 7);
        assert_eq!(g.edge_count(), 15);
    }

    #[test]
    fn laplante_shape() {
        let g = laplante_15();
        assert_eq!(g.vertex_count(), 15);
        assert_eq!(g.edge_count(), 40);
        for v in 0..5 {
            assert_eq!(g.degree(v).unwrap(), 10);
        }
        for v in 5..15 {
            assert_eq!(g.degree(v).unwrap(), 3);
        }
        // one 4-clique per 3-subset
        for (i, (_, members)) in LAPLANTE_LETTERS.iter().enumerate() {
            let four: VertexSet = members.iter().map(|m| m - 1).chain([5 + i]).collect();
            assert!(g.is_clique(&four).unwrap());
        }
    }

    #[test]
    fn family_shape() {
        for k in 4..=10 {
            let p = FamilyParams::new(k).unwrap();
            let g = tamta_family(p);
            let layout = FamilyLayout::new(p);
            assert_eq!(g.vertex_count(), 3 * k - 2);
            assert_eq!(
                g.edge_count(),
                binom(k, 2) + 2 * binom(k - 1, 2) + 2 + (k - 2)
            );
            for v in g.vertices() {
                let expected = if layout.attached.contains(&v) {
                    k
                } else {
                    k - 1
                };
                assert_eq!(g.degree(v).unwrap(), expected, "k={k} v={v}");
            }
            assert!(g.is_clique(&layout.big_clique()).unwrap());
            assert_eq!(layout.inner_pairs().len(), binom(k - 2, 2));
        }
        assert_eq!(tamta_family(FamilyParams::new(4).unwrap()).edge_count(), 16);
    }

    #[test]
    fn family_rejects_small_k() {
        for k in 0..4 {
            assert!(FamilyParams::new(k).is_err());
        }
    }

    #[test]
    fn generators_are_deterministic() {
        assert_eq!(fig2_graph(), fig2_graph());
        assert_eq!(laplante_15(), laplante_15());
        let p = FamilyParams::new(6).unwrap();
        assert_eq!(tamta_family(p), tamta_family(p));
    }

    #[test]
    fn fixture_names() {
        for name in ["fig1", "fig2", "laplante15", "tamta-5"] {
            let f: Fixture = name.parse().unwrap();
            assert_eq!(f.to_string(), name);
        }
        assert!("tamta-3".parse::<Fixture>().is_err());
        assert!("nope".parse::<Fixture>().is_err());
    }
}
