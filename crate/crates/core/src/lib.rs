//! Clique algorithms and the tools to test claims about them: an exact
//! oracle, the k-clique to flow-interdiction reduction, the greedy
//! interdiction heuristic, LaPlante's merge heuristic, and generators for
//! the graphs on which those heuristics go wrong.

mod bitset;
pub mod choice;
pub mod counterexamples;
pub mod error;
pub mod graph;
pub mod laplante;
pub mod oracle;
pub mod poly_clique;
pub mod wood;

pub use choice::{ChoicePolicy, SearchMode, SearchStats, DEFAULT_NODE_CAP};
pub use counterexamples::{FamilyParams, Fixture};
pub use error::{Error, Result};
pub use graph::{pair, parse_graph, serialize_graph, Graph, GraphFormat, Pair, Vertex, VertexSet};
pub use oracle::{has_k_clique, max_clique, maximal_cliques, CliqueResult};
pub use wood::DEFAULT_SUBSET_CAP;
