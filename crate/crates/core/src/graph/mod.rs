//! Undirected simple graphs.
//!
//! A [`Graph`] is an immutable value: every removal returns a new graph and
//! leaves the input untouched. Vertex ids are small integers, dense `0..n`
//! when a graph is built, and kept stable when vertices are removed so that
//! traces recorded against the original graph stay meaningful on residuals.

mod io;

use std::borrow::Cow;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use io::{parse_graph, serialize_graph, serialize_graph_dot, GraphFormat};

pub type Vertex = usize;

/// An unordered vertex pair, always stored with the smaller id first.
pub type Pair = (Vertex, Vertex);

/// Normalizes `(u, v)` so the smaller id comes first.
pub fn pair(u: Vertex, v: Vertex) -> Pair {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

/// A set of vertex ids. Ordered, so that comparing two sets compares their
/// sorted member sequences lexicographically.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(BTreeSet<Vertex>);

impl VertexSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.contains(&v)
    }

    pub fn insert(&mut self, v: Vertex) -> bool {
        self.0.insert(v)
    }

    pub fn remove(&mut self, v: Vertex) -> bool {
        self.0.remove(&v)
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.0.iter().copied()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn to_vec(&self) -> Vec<Vertex> {
        self.0.iter().copied().collect()
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        VertexSet(iter.into_iter().collect())
    }
}

impl<const N: usize> From<[Vertex; N]> for VertexSet {
    fn from(arr: [Vertex; N]) -> Self {
        arr.into_iter().collect()
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = Vertex;
    type IntoIter = std::iter::Copied<std::collections::btree_set::Iter<'a, Vertex>>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter().copied()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

/// Undirected simple graph with optional display labels.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct Graph {
    adjacency: BTreeMap<Vertex, BTreeSet<Vertex>>,
    labels: BTreeMap<Vertex, String>,
}

impl Graph {
    /// Edgeless graph on vertices `0..n`.
    pub fn new(n: usize) -> Self {
        Graph {
            adjacency: (0..n).map(|v| (v, BTreeSet::new())).collect(),
            labels: BTreeMap::new(),
        }
    }

    /// Graph on `0..n` with the given edges. Repeated edges collapse.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    /// Complete graph on `0..n`.
    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.insert_edge(u, v).expect("ids in range");
            }
        }
        g
    }

    /// Erdős–Rényi G(n, p) on `0..n`.
    pub fn random<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    g.insert_edge(u, v).expect("ids in range");
                }
            }
        }
        g
    }

    /// [`Graph::random`] driven by ChaCha8 seeded with `seed`.
    pub fn random_seeded(n: usize, p: f64, seed: u64) -> Self {
        Graph::random(n, p, &mut ChaCha8Rng::seed_from_u64(seed))
    }

    /// Attaches display labels, replacing any existing ones.
    pub fn with_labels<I, S>(mut self, labels: I) -> Self
    where
        I: IntoIterator<Item = (Vertex, S)>,
        S: Into<String>,
    {
        self.labels = labels
            .into_iter()
            .filter(|(v, _)| self.adjacency.contains_key(v))
            .map(|(v, s)| (v, s.into()))
            .collect();
        self
    }

    pub(crate) fn insert_edge(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        self.adjacency.get_mut(&u).expect("checked").insert(v);
        self.adjacency.get_mut(&v).expect("checked").insert(u);
        Ok(())
    }

    fn check_vertex(&self, v: Vertex) -> Result<()> {
        if self.adjacency.contains_key(&v) {
            Ok(())
        } else {
            Err(Error::UnknownVertex(v))
        }
    }

    fn check_set(&self, s: &VertexSet) -> Result<()> {
        s.iter().try_for_each(|v| self.check_vertex(v))
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.values().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.adjacency.is_empty()
    }

    /// Vertex ids in increasing order.
    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.adjacency.keys().copied()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices().collect()
    }

    /// One past the largest vertex id, or 0 for the empty graph.
    pub fn id_bound(&self) -> usize {
        self.adjacency.keys().next_back().map_or(0, |v| v + 1)
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.adjacency.contains_key(&v)
    }

    pub fn neighbors(&self, v: Vertex) -> Result<&BTreeSet<Vertex>> {
        self.adjacency.get(&v).ok_or(Error::UnknownVertex(v))
    }

    pub fn degree(&self, v: Vertex) -> Result<usize> {
        self.neighbors(v).map(BTreeSet::len)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adjacency.get(&u).is_some_and(|n| n.contains(&v))
    }

    /// Edges as normalized pairs, sorted lexicographically.
    pub fn edges(&self) -> Vec<Pair> {
        self.adjacency
            .iter()
            .flat_map(|(&u, nbrs)| nbrs.range(u + 1..).map(move |&v| (u, v)))
            .collect()
    }

    /// True iff every pair of members is adjacent. The empty set and
    /// singletons are cliques.
    pub fn is_clique(&self, s: &VertexSet) -> Result<bool> {
        self.check_set(s)?;
        let members = s.to_vec();
        Ok(members
            .iter()
            .enumerate()
            .all(|(i, &u)| members[i + 1..].iter().all(|&v| self.has_edge(u, v))))
    }

    /// The graph with `s` and every incident edge deleted. Surviving vertices
    /// keep their ids and labels.
    pub fn remove_vertices(&self, s: &VertexSet) -> Result<Graph> {
        self.check_set(s)?;
        let adjacency = self
            .adjacency
            .iter()
            .filter(|(v, _)| !s.contains(**v))
            .map(|(&v, nbrs)| {
                let kept = nbrs.iter().copied().filter(|u| !s.contains(*u)).collect();
                (v, kept)
            })
            .collect();
        let labels = self
            .labels
            .iter()
            .filter(|(v, _)| !s.contains(**v))
            .map(|(&v, l)| (v, l.clone()))
            .collect();
        Ok(Graph { adjacency, labels })
    }

    pub fn has_labels(&self) -> bool {
        !self.labels.is_empty()
    }

    /// Display label, falling back to the numeric id.
    pub fn label(&self, v: Vertex) -> Cow<'_, str> {
        match self.labels.get(&v) {
            Some(l) => Cow::Borrowed(l.as_str()),
            None => Cow::Owned(v.to_string()),
        }
    }

    pub(crate) fn explicit_label(&self, v: Vertex) -> Option<&str> {
        self.labels.get(&v).map(String::as_str)
    }

    /// Looks a vertex up by display label (or by numeric id when unlabelled).
    pub fn vertex_by_label(&self, label: &str) -> Option<Vertex> {
        if let Some((&v, _)) = self.labels.iter().find(|(_, l)| l.as_str() == label) {
            return Some(v);
        }
        label
            .parse::<Vertex>()
            .ok()
            .filter(|v| self.contains(*v) && !self.labels.contains_key(v))
    }

    /// Resolves a list of display labels into a vertex set.
    pub fn set_by_labels(&self, labels: &[&str]) -> Option<VertexSet> {
        labels.iter().map(|l| self.vertex_by_label(l)).collect()
    }

    /// Renders a set using display labels, e.g. `{4,5,6,7}`.
    pub fn format_set(&self, s: &VertexSet) -> String {
        let parts: Vec<_> = s.iter().map(|v| self.label(v).into_owned()).collect();
        format!("{{{}}}", parts.join(","))
    }

    pub fn format_pair(&self, (u, v): Pair) -> String {
        format!("({},{})", self.label(u), self.label(v))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("vertices", &self.vertex_count())
            .field("edges", &self.edges())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counterexamples::fig2_graph;

    fn triangle() -> Graph {
        Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    fn lbl(g: &Graph, l: &str) -> Vertex {
        g.vertex_by_label(l).unwrap()
    }

    #[test]
    fn degree_examples() {
        let g = fig2_graph();
        assert_eq!(g.degree(lbl(&g, "4")).unwrap(), 5);
        assert_eq!(Graph::new(1).degree(0).unwrap(), 0);
        let t = triangle();
        assert!(t.vertices().all(|v| t.degree(v).unwrap() == 2));
        assert_eq!(t.degree(7), Err(Error::UnknownVertex(7)));
    }

    #[test]
    fn clique_examples() {
        let g = fig2_graph();
        let red = g.set_by_labels(&["4", "5", "6", "7"]).unwrap();
        assert!(g.is_clique(&red).unwrap());
        let mixed = g.set_by_labels(&["1", "2", "6", "7"]).unwrap();
        assert!(!g.is_clique(&mixed).unwrap());
        assert!(g.is_clique(&VertexSet::from([3])).unwrap());
        assert!(g.is_clique(&VertexSet::new()).unwrap());
        assert_eq!(
            g.is_clique(&VertexSet::from([0, 40])),
            Err(Error::UnknownVertex(40))
        );
    }

    #[test]
    fn duplicate_edges_collapse() {
        let once = Graph::from_edges(3, [(0, 1)]).unwrap();
        let twice = Graph::from_edges(3, [(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(once, twice);
        assert_eq!(twice.edge_count(), 1);
    }

    #[test]
    fn self_loops_rejected() {
        assert_eq!(Graph::from_edges(2, [(1, 1)]), Err(Error::SelfLoop(1)));
    }

    #[test]
    fn removal_examples() {
        let g = fig2_graph();
        let reduced = g
            .remove_vertices(&g.set_by_labels(&["6", "7"]).unwrap())
            .unwrap();
        assert_eq!(reduced.vertex_count(), 5);
        // 15 edges minus the 7 that touch 6 or 7
        assert_eq!(reduced.edge_count(), 8);
        assert_eq!(g.edge_count(), 15);

        assert_eq!(g.remove_vertices(&VertexSet::new()).unwrap(), g);

        let t = triangle().remove_vertices(&VertexSet::from([0])).unwrap();
        assert_eq!(t.vertices().collect::<Vec<_>>(), vec![1, 2]);
        assert_eq!(t.edges(), vec![(1, 2)]);
        assert!(triangle().remove_vertices(&VertexSet::from([5])).is_err());
    }

    #[test]
    fn labels_and_formatting() {
        let g = fig2_graph();
        let s = g.set_by_labels(&["7", "4"]).unwrap();
        assert_eq!(g.format_set(&s), "{4,7}");
        assert_eq!(triangle().format_set(&VertexSet::from([0, 2])), "{0,2}");
        assert_eq!(triangle().vertex_by_label("2"), Some(2));
        assert_eq!(triangle().vertex_by_label("3"), None);
    }
}
