//! The greedy interdiction heuristic for k-clique ("Poly-Clique").
//!
//! Vertices (`T`) are prioritised by degree and adjacent pairs (`S`) by
//! `deg(u) + deg(v) - 1`, the number of edges their joint removal deletes.
//! With budget `R = |E| - C(k,2)`:
//!
//! 1. while the cheapest pair is affordable, remove both endpoints and pay
//!    its cost;
//! 2. while the cheapest vertex is affordable, remove it and pay its degree;
//! 3. answer "k-clique exists" iff exactly `k` vertices remain.
//!
//! The budget is charged the full pair cost including the `+1`, and all
//! priorities are recomputed from the residual graph after every removal.
//! When several candidates share the minimum cost the choice is left to a
//! [`ChoicePolicy`].

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::str::FromStr;

use serde::Serialize;

use crate::choice::{
    depth_first, ChoicePolicy, Chooser, Interrupt, PolicyChooser, SearchMode, SearchStats,
};
use crate::error::{Error, Result};
use crate::graph::{pair, Graph, Pair, Vertex, VertexSet};
use crate::oracle::has_k_clique;

/// One resolved choice: which pair (Part 1) or vertex (Part 2) to remove.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PolyChoice {
    Pair(Vertex, Vertex),
    Vertex(Vertex),
}

impl fmt::Display for PolyChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyChoice::Pair(u, v) => write!(f, "pair {u} {v}"),
            PolyChoice::Vertex(v) => write!(f, "vertex {v}"),
        }
    }
}

impl FromStr for PolyChoice {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let toks: Vec<&str> = s.split_whitespace().collect();
        let num = |t: &str| {
            t.parse::<Vertex>()
                .map_err(|_| format!("bad vertex id `{t}`"))
        };
        match toks.as_slice() {
            ["pair", u, v] => {
                let (u, v) = pair(num(u)?, num(v)?);
                Ok(PolyChoice::Pair(u, v))
            }
            ["vertex", v] => Ok(PolyChoice::Vertex(num(v)?)),
            _ => Err(format!("expected `pair U V` or `vertex V`, got `{s}`")),
        }
    }
}

/// The priority structures `T` and `S`, the remaining budget and the
/// residual graph they describe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InterdictionState {
    vertex_costs: BTreeMap<Vertex, i64>,
    pair_costs: BTreeMap<Pair, i64>,
    budget: i64,
    residual: Graph,
}

impl InterdictionState {
    /// Fresh state with `R = |E| - C(k,2)`; `R` may be negative.
    pub fn new(g: &Graph, k: usize) -> Result<Self> {
        if k < 1 {
            return Err(Error::Precondition("k must be at least 1".into()));
        }
        let k = k as i64;
        let mut state = InterdictionState {
            vertex_costs: BTreeMap::new(),
            pair_costs: BTreeMap::new(),
            budget: g.edge_count() as i64 - k * (k - 1) / 2,
            residual: g.clone(),
        };
        state.refresh();
        Ok(state)
    }

    /// Recomputes every priority from the residual degrees.
    fn refresh(&mut self) {
        let g = &self.residual;
        let deg = |v: Vertex| g.degree(v).expect("residual vertex") as i64;
        self.vertex_costs = g.vertices().map(|v| (v, deg(v))).collect();
        self.pair_costs = g
            .edges()
            .into_iter()
            .map(|(u, v)| ((u, v), deg(u) + deg(v) - 1))
            .collect();
    }

    pub fn budget(&self) -> i64 {
        self.budget
    }

    pub fn residual(&self) -> &Graph {
        &self.residual
    }

    /// Live vertices `T` with their costs.
    pub fn vertex_costs(&self) -> &BTreeMap<Vertex, i64> {
        &self.vertex_costs
    }

    /// Live pairs `S` with their costs.
    pub fn pair_costs(&self) -> &BTreeMap<Pair, i64> {
        &self.pair_costs
    }

    pub fn pair_cost(&self, u: Vertex, v: Vertex) -> Result<i64> {
        self.pair_costs
            .get(&pair(u, v))
            .copied()
            .ok_or(Error::UnknownEdge(u, v))
    }

    pub fn vertex_cost(&self, v: Vertex) -> Result<i64> {
        self.vertex_costs
            .get(&v)
            .copied()
            .ok_or(Error::UnknownVertex(v))
    }

    /// Minimum pair cost and every pair attaining it, in id order.
    pub fn cheapest_pairs(&self) -> Option<(i64, Vec<Pair>)> {
        let min = *self.pair_costs.values().min()?;
        let ties = self
            .pair_costs
            .iter()
            .filter(|(_, &c)| c == min)
            .map(|(&p, _)| p)
            .collect();
        Some((min, ties))
    }

    pub fn cheapest_vertices(&self) -> Option<(i64, Vec<Vertex>)> {
        let min = *self.vertex_costs.values().min()?;
        let ties = self
            .vertex_costs
            .iter()
            .filter(|(_, &c)| c == min)
            .map(|(&v, _)| v)
            .collect();
        Some((min, ties))
    }

    /// Removes both endpoints of a live pair and charges its cost.
    pub fn interdict_pair(&mut self, u: Vertex, v: Vertex) -> Result<i64> {
        let cost = self.pair_cost(u, v)?;
        self.budget -= cost;
        self.residual = self.residual.remove_vertices(&VertexSet::from([u, v]))?;
        self.refresh();
        Ok(cost)
    }

    /// Removes a live vertex and charges its degree.
    pub fn interdict_vertex(&mut self, v: Vertex) -> Result<i64> {
        let cost = self.vertex_cost(v)?;
        self.budget -= cost;
        self.residual = self.residual.remove_vertices(&VertexSet::from([v]))?;
        self.refresh();
        Ok(cost)
    }

    /// `T` and `S` mirror the residual graph and every stored priority
    /// matches a fresh recomputation.
    pub fn is_consistent(&self) -> bool {
        let g = &self.residual;
        let deg = |v: Vertex| g.degree(v).map(|d| d as i64);
        self.vertex_costs.keys().copied().eq(g.vertices())
            && self.pair_costs.keys().copied().eq(g.edges())
            && self.vertex_costs.iter().all(|(&v, &c)| deg(v) == Ok(c))
            && self
                .pair_costs
                .iter()
                .all(|(&(u, v), &c)| deg(u).and_then(|a| deg(v).map(|b| a + b - 1)) == Ok(c))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "event", rename_all = "kebab-case")]
pub enum PolyEvent {
    InterdictPair { u: Vertex, v: Vertex, cost: i64 },
    InterdictVertex { v: Vertex, cost: i64 },
    EnterPart2,
    EnterPart3,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Decision {
    CliqueExists,
    NoClique,
}

impl Decision {
    pub fn from_bool(exists: bool) -> Self {
        if exists {
            Decision::CliqueExists
        } else {
            Decision::NoClique
        }
    }

    pub fn exists(self) -> bool {
        self == Decision::CliqueExists
    }
}

impl fmt::Display for Decision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Decision::CliqueExists => "clique-exists",
            Decision::NoClique => "no-clique",
        })
    }
}

/// Full record of one run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PolyCliqueTrace {
    pub k: usize,
    pub initial_budget: i64,
    pub steps: Vec<PolyEvent>,
    pub decision: Decision,
    pub final_t_size: usize,
    pub final_budget: i64,
    pub final_t: VertexSet,
    /// Part 3 only counts; this flags a "clique exists" answer whose
    /// surviving vertices are not actually a clique.
    pub final_t_is_clique: bool,
}

impl PolyCliqueTrace {
    /// The choices made, in order; replaying them reproduces this trace.
    pub fn choices(&self) -> Vec<PolyChoice> {
        self.steps
            .iter()
            .filter_map(|e| match *e {
                PolyEvent::InterdictPair { u, v, .. } => Some(PolyChoice::Pair(u, v)),
                PolyEvent::InterdictVertex { v, .. } => Some(PolyChoice::Vertex(v)),
                _ => None,
            })
            .collect()
    }

    pub fn to_text(&self, g: &Graph) -> String {
        let mut out = String::new();
        writeln!(out, "poly-clique k={} R={}", self.k, self.initial_budget).unwrap();
        let mut budget = self.initial_budget;
        for step in &self.steps {
            match *step {
                PolyEvent::InterdictPair { u, v, cost } => {
                    budget -= cost;
                    writeln!(
                        out,
                        "  interdict pair {} cost {cost} -> R={budget}",
                        g.format_pair((u, v))
                    )
                    .unwrap();
                }
                PolyEvent::InterdictVertex { v, cost } => {
                    budget -= cost;
                    writeln!(
                        out,
                        "  interdict vertex {} cost {cost} -> R={budget}",
                        g.label(v)
                    )
                    .unwrap();
                }
                PolyEvent::EnterPart2 => out.push_str("  part 2\n"),
                PolyEvent::EnterPart3 => out.push_str("  part 3\n"),
            }
        }
        writeln!(
            out,
            "decision {} (|T|={} T={} R={})",
            self.decision,
            self.final_t_size,
            g.format_set(&self.final_t),
            self.final_budget
        )
        .unwrap();
        out
    }
}

fn run_with(
    g: &Graph,
    k: usize,
    chooser: &mut dyn Chooser<PolyChoice>,
) -> std::result::Result<PolyCliqueTrace, Interrupt> {
    let fail = |e: Error| Interrupt::Replay {
        index: 0,
        message: e.to_string(),
    };
    let mut state = InterdictionState::new(g, k).map_err(fail)?;
    let initial_budget = state.budget();
    let mut steps = Vec::new();

    // Part 1. An empty S falls through to Part 2.
    while let Some((cost, ties)) = state.cheapest_pairs() {
        if cost > state.budget() {
            break;
        }
        let options: Vec<PolyChoice> = ties.iter().map(|&(u, v)| PolyChoice::Pair(u, v)).collect();
        let (u, v) = ties[chooser.choose(&options)?];
        let cost = state.interdict_pair(u, v).map_err(fail)?;
        steps.push(PolyEvent::InterdictPair { u, v, cost });
    }
    steps.push(PolyEvent::EnterPart2);

    // Part 2. An empty T falls through to Part 3.
    while let Some((cost, ties)) = state.cheapest_vertices() {
        if cost > state.budget() {
            break;
        }
        let options: Vec<PolyChoice> = ties.iter().map(|&v| PolyChoice::Vertex(v)).collect();
        let v = ties[chooser.choose(&options)?];
        let cost = state.interdict_vertex(v).map_err(fail)?;
        steps.push(PolyEvent::InterdictVertex { v, cost });
    }
    steps.push(PolyEvent::EnterPart3);

    let final_t = state.residual().vertex_set();
    Ok(PolyCliqueTrace {
        k,
        initial_budget,
        steps,
        decision: Decision::from_bool(final_t.len() == k),
        final_t_size: final_t.len(),
        final_budget: state.budget(),
        final_t_is_clique: state.residual().is_clique(&final_t).unwrap_or(false),
        final_t,
    })
}

/// Runs Parts 1–3 on `g` for the given `k`.
pub fn run(g: &Graph, k: usize, policy: &ChoicePolicy<PolyChoice>) -> Result<PolyCliqueTrace> {
    if k < 1 {
        return Err(Error::Precondition("k must be at least 1".into()));
    }
    let mut chooser = PolicyChooser::new(policy)?;
    run_with(g, k, &mut chooser).map_err(Interrupt::into_error)
}

/// Largest `k` (from `n` down) for which [`run`] answers "clique exists",
/// or 0 when it never does.
pub fn max_clique_via_decision(g: &Graph, policy: &ChoicePolicy<PolyChoice>) -> Result<usize> {
    for k in (1..=g.vertex_count()).rev() {
        if run(g, k, policy)?.decision.exists() {
            return Ok(k);
        }
    }
    Ok(0)
}

/// Result of [`search_traces`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PolyTraceSearch {
    pub mode: SearchMode,
    pub oracle_decision: Decision,
    pub trace: Option<PolyCliqueTrace>,
    pub stats: SearchStats,
}

/// Explores every resolution of minimum-cost ties, depth first with the
/// lowest candidate first. Adversarial mode returns the first trace whose
/// decision disagrees with the oracle, optimistic mode the first that
/// agrees.
pub fn search_traces(
    g: &Graph,
    k: usize,
    mode: SearchMode,
    node_cap: u64,
) -> Result<PolyTraceSearch> {
    if k < 1 {
        return Err(Error::Precondition("k must be at least 1".into()));
    }
    let oracle_decision = Decision::from_bool(has_k_clique(g, k).is_some());
    let mut stats = SearchStats::new(node_cap);
    let found = depth_first(
        &mut stats,
        None,
        |chooser| run_with(g, k, chooser),
        |trace| (trace.decision == oracle_decision) == (mode == SearchMode::Optimistic),
    )?;
    Ok(PolyTraceSearch {
        mode,
        oracle_decision,
        trace: found.map(|(t, _)| t),
        stats,
    })
}
