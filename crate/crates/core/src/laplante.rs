//! LaPlante's two-phase clique heuristic.
//!
//! Phase 1 ("neighbour introductions") gives every vertex its neighbourhood:
//! the pairs `{p, q}` that close a triangle with it. Phase 2 works on each
//! neighbourhood separately. It picks a start pair not yet merged and one of
//! its two members as the key, then keeps absorbing a vertex `r` through a
//! pair `{key, r}` as long as `r` is paired with every other member merged
//! so far. Merge chains restart from unmerged pairs until every pair of the
//! neighbourhood has been merged at least once.
//!
//! Start pair, key and each absorption are free choices. A [`ChoicePolicy`]
//! resolves them; [`search_traces`] looks for resolutions that miss the
//! maximum clique or find it.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::{self, Write as _};
use std::str::FromStr;

use serde::Serialize;

use crate::choice::{
    depth_first, ChoicePolicy, Chooser, GuidedChooser, Interrupt, PolicyChooser, SearchMode,
    SearchStats,
};
use crate::error::{Error, Result};
use crate::graph::{pair, Graph, Pair, Vertex, VertexSet};
use crate::oracle::max_clique;

/// The triangle pairs around one vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Neighborhood {
    pub center: Vertex,
    pub pairs: BTreeSet<Pair>,
}

impl Neighborhood {
    pub fn contains(&self, u: Vertex, v: Vertex) -> bool {
        self.pairs.contains(&pair(u, v))
    }
}

/// Phase 1 output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Neighborhoods {
    pub by_vertex: BTreeMap<Vertex, Neighborhood>,
    /// Introductions performed: one per (vertex, neighbour, neighbour's
    /// other neighbour) triple, so at most `n^3`.
    pub operations: u64,
}

impl Neighborhoods {
    pub fn get(&self, v: Vertex) -> Option<&Neighborhood> {
        self.by_vertex.get(&v)
    }
}

/// Every neighbour `u` of `v` introduces its other neighbours `w` to `v`;
/// when `v` already knows `w`, `{u, w}` closes a triangle with `v`.
pub fn neighborhoods(g: &Graph) -> Neighborhoods {
    let mut operations = 0;
    let mut by_vertex = BTreeMap::new();
    for v in g.vertices() {
        let own = g.neighbors(v).expect("vertex from graph");
        let mut pairs = BTreeSet::new();
        for &u in own {
            for &w in g.neighbors(u).expect("neighbor in graph") {
                if w == v {
                    continue;
                }
                operations += 1;
                if own.contains(&w) {
                    pairs.insert(pair(u, w));
                }
            }
        }
        by_vertex.insert(v, Neighborhood { center: v, pairs });
    }
    Neighborhoods {
        by_vertex,
        operations,
    }
}

/// One resolved phase-2 choice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(tag = "choice", rename_all = "kebab-case")]
pub enum LaplanteChoice {
    Start {
        center: Vertex,
        p: Vertex,
        q: Vertex,
    },
    Key {
        center: Vertex,
        key: Vertex,
    },
    Absorb {
        center: Vertex,
        vertex: Vertex,
    },
}

impl fmt::Display for LaplanteChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LaplanteChoice::Start { center, p, q } => write!(f, "start {center} {p} {q}"),
            LaplanteChoice::Key { center, key } => write!(f, "key {center} {key}"),
            LaplanteChoice::Absorb { center, vertex } => write!(f, "absorb {center} {vertex}"),
        }
    }
}

impl FromStr for LaplanteChoice {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let toks: Vec<&str> = s.split_whitespace().collect();
        let num = |t: &str| {
            t.parse::<Vertex>()
                .map_err(|_| format!("bad vertex id `{t}`"))
        };
        match toks.as_slice() {
            ["start", c, p, q] => {
                let (p, q) = pair(num(p)?, num(q)?);
                Ok(LaplanteChoice::Start {
                    center: num(c)?,
                    p,
                    q,
                })
            }
            ["key", c, k] => Ok(LaplanteChoice::Key {
                center: num(c)?,
                key: num(k)?,
            }),
            ["absorb", c, v] => Ok(LaplanteChoice::Absorb {
                center: num(c)?,
                vertex: num(v)?,
            }),
            _ => Err(format!(
                "expected `start C P Q`, `key C V` or `absorb C V`, got `{s}`"
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MergeStep {
    /// The `{key, r}` pair that brought `r` in.
    pub absorbed: Pair,
    /// Pairs `{m, r}` confirmed for every earlier non-key member `m`.
    pub checked: Vec<Pair>,
}

/// One merge chain around a center.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MergeTrace {
    pub center: Vertex,
    pub start_pair: Pair,
    pub key: Vertex,
    pub merges: Vec<MergeStep>,
    /// The clique found, center included.
    pub result: VertexSet,
}

impl MergeTrace {
    fn choices(&self) -> impl Iterator<Item = LaplanteChoice> + '_ {
        let center = self.center;
        let (p, q) = self.start_pair;
        [
            LaplanteChoice::Start { center, p, q },
            LaplanteChoice::Key {
                center,
                key: self.key,
            },
        ]
        .into_iter()
        .chain(self.merges.iter().map(move |m| {
            let (a, b) = m.absorbed;
            let vertex = if a == self.key { b } else { a };
            LaplanteChoice::Absorb { center, vertex }
        }))
    }

    pub fn to_text(&self, g: &Graph) -> String {
        let mut out = format!(
            "center {} start {} key {}:",
            g.label(self.center),
            g.format_pair(self.start_pair),
            g.label(self.key)
        );
        for m in &self.merges {
            let checked: Vec<String> = m.checked.iter().map(|&p| g.format_pair(p)).collect();
            write!(
                out,
                " +{} [{}]",
                g.format_pair(m.absorbed),
                checked.join(" ")
            )
            .unwrap();
        }
        write!(out, " => {}", g.format_set(&self.result)).unwrap();
        out
    }
}

fn merge_chain(
    nbhd: &Neighborhood,
    start: Pair,
    key: Vertex,
    chooser: &mut dyn Chooser<LaplanteChoice>,
) -> std::result::Result<MergeTrace, Interrupt> {
    let center = nbhd.center;
    let mut members = VertexSet::from([center, start.0, start.1]);
    let mut merges = Vec::new();
    loop {
        let others: Vec<Vertex> = members
            .iter()
            .filter(|&m| m != center && m != key)
            .collect();
        let candidates: Vec<Vertex> = nbhd
            .pairs
            .iter()
            .filter_map(|&(a, b)| match (a == key, b == key) {
                (true, _) => Some(b),
                (_, true) => Some(a),
                _ => None,
            })
            .filter(|&r| !members.contains(r) && others.iter().all(|&m| nbhd.contains(m, r)))
            .collect();
        if candidates.is_empty() {
            break;
        }
        let options: Vec<LaplanteChoice> = candidates
            .iter()
            .map(|&vertex| LaplanteChoice::Absorb { center, vertex })
            .collect();
        let r = candidates[chooser.choose(&options)?];
        merges.push(MergeStep {
            absorbed: pair(key, r),
            checked: others.iter().map(|&m| pair(m, r)).collect(),
        });
        members.insert(r);
    }
    Ok(MergeTrace {
        center,
        start_pair: start,
        key,
        merges,
        result: members,
    })
}

/// Runs one merge chain from `start_pair` with the given key.
pub fn merge_around(
    nbhd: &Neighborhood,
    start_pair: Pair,
    key: Vertex,
    policy: &ChoicePolicy<LaplanteChoice>,
) -> Result<MergeTrace> {
    let start = pair(start_pair.0, start_pair.1);
    if !nbhd.pairs.contains(&start) {
        return Err(Error::Precondition(format!(
            "{start:?} is not in the neighbourhood of {}",
            nbhd.center
        )));
    }
    if key != start.0 && key != start.1 {
        return Err(Error::Precondition(format!(
            "key {key} is not in {start:?}"
        )));
    }
    let mut chooser = PolicyChooser::new(policy)?;
    merge_chain(nbhd, start, key, &mut chooser).map_err(Interrupt::into_error)
}

/// Phase 2 around one center.
#[derive(Debug, Clone, PartialEq, Eq)]
struct CenterOutcome {
    traces: Vec<MergeTrace>,
    cliques: BTreeSet<VertexSet>,
}

impl CenterOutcome {
    fn best(&self) -> usize {
        self.cliques.iter().map(VertexSet::len).max().unwrap_or(0)
    }
}

fn phase2_center(
    g: &Graph,
    nbhd: &Neighborhood,
    chooser: &mut dyn Chooser<LaplanteChoice>,
) -> std::result::Result<CenterOutcome, Interrupt> {
    let center = nbhd.center;
    let mut cliques = BTreeSet::new();
    let mut traces = Vec::new();

    if nbhd.pairs.is_empty() {
        // No triangles: the center's edges (or the center alone) are all it
        // can report.
        let nbrs = g.neighbors(center).expect("center in graph");
        if nbrs.is_empty() {
            cliques.insert(VertexSet::from([center]));
        }
        for &u in nbrs {
            cliques.insert(VertexSet::from([center, u]));
        }
        chooser.clique_found(cliques.iter().map(VertexSet::len).max().unwrap_or(0))?;
        return Ok(CenterOutcome { traces, cliques });
    }

    let mut merged: BTreeSet<Pair> = BTreeSet::new();
    loop {
        let unmerged: Vec<Pair> = nbhd.pairs.difference(&merged).copied().collect();
        if unmerged.is_empty() {
            break;
        }
        let options: Vec<LaplanteChoice> = unmerged
            .iter()
            .map(|&(p, q)| LaplanteChoice::Start { center, p, q })
            .collect();
        let start = unmerged[chooser.choose(&options)?];
        let keys = [start.0, start.1];
        let options = keys.map(|key| LaplanteChoice::Key { center, key });
        let key = keys[chooser.choose(&options)?];

        let trace = merge_chain(nbhd, start, key, chooser)?;
        merged.insert(start);
        merged.extend(trace.merges.iter().map(|m| m.absorbed));
        chooser.clique_found(trace.result.len())?;
        cliques.insert(trace.result.clone());
        traces.push(trace);
    }
    Ok(CenterOutcome { traces, cliques })
}

/// The largest clique reported, lexicographically smallest on ties.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BestClique {
    pub size: usize,
    pub witness: VertexSet,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LaplanteResult {
    /// Cliques found around each vertex; each contains its center.
    pub per_vertex: BTreeMap<Vertex, BTreeSet<VertexSet>>,
    pub global_max: BestClique,
    pub traces: Vec<MergeTrace>,
    pub phase1_operations: u64,
}

impl LaplanteResult {
    /// All reported cliques, deduplicated across centers.
    pub fn cliques(&self) -> BTreeSet<VertexSet> {
        self.per_vertex.values().flatten().cloned().collect()
    }

    /// The choices made, in order; replaying them reproduces this result.
    pub fn choices(&self) -> Vec<LaplanteChoice> {
        self.traces.iter().flat_map(MergeTrace::choices).collect()
    }

    /// k-clique answer derived from the full run.
    pub fn decides(&self, k: usize) -> bool {
        self.global_max.size >= k
    }
}

fn assemble(
    nbhds: &Neighborhoods,
    mut phase2: impl FnMut(&Neighborhood) -> std::result::Result<CenterOutcome, Interrupt>,
) -> std::result::Result<LaplanteResult, Interrupt> {
    let mut per_vertex = BTreeMap::new();
    let mut traces = Vec::new();
    for (&v, nbhd) in &nbhds.by_vertex {
        let outcome = phase2(nbhd)?;
        per_vertex.insert(v, outcome.cliques);
        traces.extend(outcome.traces);
    }
    let mut global_max = BestClique {
        size: 0,
        witness: VertexSet::new(),
    };
    for c in per_vertex.values().flatten() {
        if c.len() > global_max.size || (c.len() == global_max.size && *c < global_max.witness) {
            global_max = BestClique {
                size: c.len(),
                witness: c.clone(),
            };
        }
    }
    Ok(LaplanteResult {
        per_vertex,
        global_max,
        traces,
        phase1_operations: nbhds.operations,
    })
}

/// Both phases over every vertex under a deterministic policy.
pub fn run(g: &Graph, policy: &ChoicePolicy<LaplanteChoice>) -> Result<LaplanteResult> {
    let nbhds = neighborhoods(g);
    let mut chooser = PolicyChooser::new(policy)?;
    assemble(&nbhds, |nbhd| phase2_center(g, nbhd, &mut chooser)).map_err(Interrupt::into_error)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LaplanteSearch {
    pub mode: SearchMode,
    pub oracle_size: usize,
    /// A complete replayable script, when one exists.
    pub script: Option<Vec<LaplanteChoice>>,
    pub result: Option<LaplanteResult>,
    pub stats: SearchStats,
}

/// Searches phase-2 choices center by center. Centers never interact, so
/// the global maximum misses the oracle exactly when every center misses
/// it. Adversarial mode needs a missing resolution for each center (branches
/// are abandoned as soon as they report a maximum-size clique); optimistic
/// mode needs one center that finds it.
pub fn search_traces(g: &Graph, mode: SearchMode, node_cap: u64) -> Result<LaplanteSearch> {
    let oracle_size = max_clique(g).size;
    let nbhds = neighborhoods(g);
    let mut stats = SearchStats::new(node_cap);
    let mut prefixes: BTreeMap<Vertex, Vec<usize>> = BTreeMap::new();
    let absent = |stats| LaplanteSearch {
        mode,
        oracle_size,
        script: None,
        result: None,
        stats,
    };

    for (&v, nbhd) in &nbhds.by_vertex {
        let prune_at = (mode == SearchMode::Adversarial).then_some(oracle_size);
        let wanted = |o: &CenterOutcome| match mode {
            SearchMode::Adversarial => o.best() < oracle_size,
            SearchMode::Optimistic => o.best() >= oracle_size,
        };
        let found = depth_first(
            &mut stats,
            prune_at,
            |ch| phase2_center(g, nbhd, ch),
            wanted,
        )?;
        match (mode, found) {
            (SearchMode::Adversarial, None) => return Ok(absent(stats)),
            (SearchMode::Adversarial, Some((_, prefix))) => {
                prefixes.insert(v, prefix);
            }
            (SearchMode::Optimistic, Some((_, prefix))) => {
                prefixes.insert(v, prefix);
                break;
            }
            (SearchMode::Optimistic, None) => {}
        }
    }

    let result = assemble(&nbhds, |nbhd| {
        let prefix = prefixes.get(&nbhd.center).map(Vec::as_slice).unwrap_or(&[]);
        phase2_center(g, nbhd, &mut GuidedChooser::new(prefix))
    })
    .map_err(Interrupt::into_error)?;

    let ok = match mode {
        SearchMode::Adversarial => result.global_max.size < oracle_size,
        SearchMode::Optimistic => result.global_max.size == oracle_size,
    };
    if !ok {
        return Ok(absent(stats));
    }
    Ok(LaplanteSearch {
        mode,
        oracle_size,
        script: Some(result.choices()),
        result: Some(result),
        stats,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counterexamples::laplante_15;

    fn lbl(g: &Graph, l: &str) -> Vertex {
        g.vertex_by_label(l).unwrap()
    }

    fn lpair(g: &Graph, a: &str, b: &str) -> Pair {
        pair(lbl(g, a), lbl(g, b))
    }

    #[test]
    fn neighbourhood_sizes() {
        let g = laplante_15();
        let nb = neighborhoods(&g);
        let a = nb.get(lbl(&g, "A")).unwrap();
        let expected: BTreeSet<Pair> = [
            lpair(&g, "1", "2"),
            lpair(&g, "1", "3"),
            lpair(&g, "2", "3"),
        ]
        .into();
        assert_eq!(a.pairs, expected);

        let one = nb.get(lbl(&g, "1")).unwrap();
        assert_eq!(one.pairs.len(), 18);
        let number_pairs = one.pairs.iter().filter(|&&(p, q)| p < 5 && q < 5).count();
        assert_eq!(number_pairs, 6);

        let n = g.vertex_count() as u64;
        assert!(nb.operations <= n * n * n);
    }

    #[test]
    fn triangle_free_neighbourhoods_are_empty() {
        let path = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert!(neighborhoods(&path)
            .by_vertex
            .values()
            .all(|n| n.pairs.is_empty()));
    }

    #[test]
    fn merge_around_letter() {
        let g = laplante_15();
        let nb = neighborhoods(&g);
        let a = nb.get(lbl(&g, "A")).unwrap();
        let t = merge_around(
            a,
            lpair(&g, "1", "2"),
            lbl(&g, "1"),
            &ChoicePolicy::LowestId,
        )
        .unwrap();
        assert_eq!(t.merges.len(), 1);
        assert_eq!(t.merges[0].absorbed, lpair(&g, "1", "3"));
        assert_eq!(t.merges[0].checked, vec![lpair(&g, "2", "3")]);
        assert_eq!(g.format_set(&t.result), "{1,2,3,A}");
    }

    #[test]
    fn merge_around_number_with_letter_key() {
        let g = laplante_15();
        let nb = neighborhoods(&g);
        let one = nb.get(lbl(&g, "1")).unwrap();
        let t = merge_around(
            one,
            lpair(&g, "2", "A"),
            lbl(&g, "A"),
            &ChoicePolicy::LowestId,
        )
        .unwrap();
        assert_eq!(t.merges.len(), 1);
        assert_eq!(t.merges[0].absorbed, lpair(&g, "3", "A"));
        assert_eq!(t.merges[0].checked, vec![lpair(&g, "2", "3")]);
        assert_eq!(g.format_set(&t.result), "{1,2,3,A}");
    }

    #[test]
    fn merge_from_number_pair_depends_on_choice() {
        let g = laplante_15();
        let nb = neighborhoods(&g);
        let one = nb.get(lbl(&g, "1")).unwrap();
        let start = lpair(&g, "2", "3");
        let key = lbl(&g, "2");

        let good = merge_around(one, start, key, &ChoicePolicy::LowestId).unwrap();
        assert_eq!(g.format_set(&good.result), "{1,2,3,4,5}");

        let detour = ChoicePolicy::Scripted(vec![LaplanteChoice::Absorb {
            center: lbl(&g, "1"),
            vertex: lbl(&g, "A"),
        }]);
        let bad = merge_around(one, start, key, &detour).unwrap();
        assert_eq!(g.format_set(&bad.result), "{1,2,3,A}");
    }

    #[test]
    fn merge_around_preconditions() {
        let g = laplante_15();
        let nb = neighborhoods(&g);
        let a = nb.get(lbl(&g, "A")).unwrap();
        assert!(merge_around(
            a,
            lpair(&g, "1", "4"),
            lbl(&g, "1"),
            &ChoicePolicy::LowestId
        )
        .is_err());
        assert!(merge_around(
            a,
            lpair(&g, "1", "2"),
            lbl(&g, "3"),
            &ChoicePolicy::LowestId
        )
        .is_err());
    }

    #[test]
    fn triangle_run() {
        let g = Graph::complete(3);
        let r = run(&g, &ChoicePolicy::LowestId).unwrap();
        for v in 0..3 {
            let all: Vec<_> = r.per_vertex[&v].iter().cloned().collect();
            assert_eq!(all, vec![VertexSet::from([0, 1, 2])]);
        }
        assert_eq!(r.global_max.size, 3);
        assert_eq!(r.cliques().len(), 1);
    }

    #[test]
    fn triangle_free_and_isolated() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2)]).unwrap();
        let r = run(&g, &ChoicePolicy::LowestId).unwrap();
        assert_eq!(r.global_max.size, 2);
        assert_eq!(r.global_max.witness, VertexSet::from([0, 1]));
        assert!(r.per_vertex[&3].contains(&VertexSet::from([3])));
        assert!(r.traces.is_empty());
    }

    #[test]
    fn lowest_id_finds_the_five_clique() {
        let g = laplante_15();
        let r = run(&g, &ChoicePolicy::LowestId).unwrap();
        assert_eq!(r.global_max.size, 5);
        assert_eq!(g.format_set(&r.global_max.witness), "{1,2,3,4,5}");
    }

    #[test]
    fn replay_is_deterministic() {
        let g = laplante_15();
        let r = run(&g, &ChoicePolicy::LowestId).unwrap();
        let again = run(&g, &ChoicePolicy::Scripted(r.choices())).unwrap();
        assert_eq!(r, again);
    }

    #[test]
    fn bad_script_is_a_replay_error() {
        let g = laplante_15();
        let policy = ChoicePolicy::Scripted(vec![LaplanteChoice::Key { center: 0, key: 3 }]);
        assert!(matches!(
            run(&g, &policy),
            Err(Error::Replay { index: 0, .. })
        ));
    }

    #[test]
    fn searches_on_laplante_15() {
        let g = laplante_15();
        let adv = search_traces(&g, SearchMode::Adversarial, 1_000_000).unwrap();
        assert_eq!(adv.oracle_size, 5);
        assert_eq!(adv.result.as_ref().unwrap().global_max.size, 4);
        let replayed = run(&g, &ChoicePolicy::Scripted(adv.script.clone().unwrap())).unwrap();
        assert_eq!(replayed.global_max.size, 4);

        let opt = search_traces(&g, SearchMode::Optimistic, 1_000_000).unwrap();
        let replayed = run(&g, &ChoicePolicy::Scripted(opt.script.unwrap())).unwrap();
        assert_eq!(replayed.global_max.size, 5);
    }

    #[test]
    fn triangle_has_no_adversarial_script() {
        let s = search_traces(&Graph::complete(3), SearchMode::Adversarial, 1000).unwrap();
        assert!(s.script.is_none());
    }

    #[test]
    fn script_lines_parse() {
        for c in [
            LaplanteChoice::Start {
                center: 0,
                p: 1,
                q: 2,
            },
            LaplanteChoice::Key { center: 3, key: 4 },
            LaplanteChoice::Absorb {
                center: 0,
                vertex: 9,
            },
        ] {
            assert_eq!(c.to_string().parse::<LaplanteChoice>(), Ok(c));
        }
        assert!("merge 1 2".parse::<LaplanteChoice>().is_err());
    }
}
