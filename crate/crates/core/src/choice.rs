//! Resolution of the heuristics' unspecified choices.
//!
//! Both heuristics call a [`Chooser`] whenever they must pick one of several
//! equally valid candidates. Candidates are always presented in canonical
//! order, so "lowest id" means index 0. A run under [`ChoicePolicy::Scripted`]
//! replays a recorded choice list; the searches enumerate choice sequences
//! depth-first by replaying prefixes of candidate indices.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

pub const DEFAULT_NODE_CAP: u64 = 1_000_000;

/// How an algorithm resolves ties.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChoicePolicy<C> {
    /// Always the first candidate in canonical order.
    LowestId,
    /// Replay these choices in order, then continue as `LowestId`. Each
    /// scripted choice must be one of the candidates offered at that point.
    Scripted(Vec<C>),
    /// Enumerate every resolution; only meaningful to the trace searches.
    Exhaustive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SearchMode {
    /// Look for a resolution whose answer disagrees with the oracle.
    Adversarial,
    /// Look for a resolution whose answer agrees with the oracle.
    Optimistic,
}

impl FromStr for SearchMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "adversarial" => Ok(SearchMode::Adversarial),
            "optimistic" => Ok(SearchMode::Optimistic),
            other => Err(format!("unknown search mode `{other}`")),
        }
    }
}

impl fmt::Display for SearchMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SearchMode::Adversarial => "adversarial",
            SearchMode::Optimistic => "optimistic",
        })
    }
}

/// Why a run stopped before finishing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Interrupt {
    Replay {
        index: usize,
        message: String,
    },
    /// The search reached an unexplored choice point with this many options.
    Frontier(usize),
    /// The search abandoned this branch.
    Pruned,
}

impl Interrupt {
    pub fn into_error(self) -> Error {
        match self {
            Interrupt::Replay { index, message } => Error::Replay { index, message },
            Interrupt::Frontier(_) | Interrupt::Pruned => {
                Error::Precondition("search interrupt escaped a plain run".into())
            }
        }
    }
}

pub(crate) trait Chooser<C> {
    /// Picks an index into `candidates`, which is nonempty.
    fn choose(&mut self, candidates: &[C]) -> std::result::Result<usize, Interrupt>;

    /// Called when a heuristic reports a clique of `size`; lets a search
    /// abandon the branch.
    fn clique_found(&mut self, _size: usize) -> std::result::Result<(), Interrupt> {
        Ok(())
    }
}

pub(crate) struct PolicyChooser<'a, C> {
    script: &'a [C],
    pos: usize,
}

impl<'a, C> PolicyChooser<'a, C> {
    pub fn new(policy: &'a ChoicePolicy<C>) -> Result<Self> {
        match policy {
            ChoicePolicy::LowestId => Ok(PolicyChooser {
                script: &[],
                pos: 0,
            }),
            ChoicePolicy::Scripted(s) => Ok(PolicyChooser { script: s, pos: 0 }),
            ChoicePolicy::Exhaustive => Err(Error::Precondition(
                "the exhaustive policy is only available through trace search".into(),
            )),
        }
    }
}

impl<C: PartialEq + fmt::Display> Chooser<C> for PolicyChooser<'_, C> {
    fn choose(&mut self, candidates: &[C]) -> std::result::Result<usize, Interrupt> {
        let Some(want) = self.script.get(self.pos) else {
            return Ok(0);
        };
        let index = self.pos;
        self.pos += 1;
        candidates.iter().position(|c| c == want).ok_or_else(|| {
            let offered: Vec<String> = candidates.iter().map(ToString::to_string).collect();
            Interrupt::Replay {
                index,
                message: format!("`{want}` is not among [{}]", offered.join("; ")),
            }
        })
    }
}

/// Follows a prefix of candidate indices, then stops at the next real
/// choice. Single-candidate points are not branch points and are skipped.
pub(crate) struct PrefixChooser<'a> {
    prefix: &'a [usize],
    pos: usize,
    prune_at: Option<usize>,
}

impl<C> Chooser<C> for PrefixChooser<'_> {
    fn choose(&mut self, candidates: &[C]) -> std::result::Result<usize, Interrupt> {
        if candidates.len() == 1 {
            return Ok(0);
        }
        match self.prefix.get(self.pos) {
            Some(&i) => {
                self.pos += 1;
                Ok(i)
            }
            None => Err(Interrupt::Frontier(candidates.len())),
        }
    }

    fn clique_found(&mut self, size: usize) -> std::result::Result<(), Interrupt> {
        match self.prune_at {
            Some(limit) if size >= limit => Err(Interrupt::Pruned),
            _ => Ok(()),
        }
    }
}

/// Follows a prefix of branch-point indices found by [`depth_first`], then
/// takes the lowest candidate.
pub(crate) struct GuidedChooser<'a> {
    prefix: &'a [usize],
    pos: usize,
}

impl<'a> GuidedChooser<'a> {
    pub fn new(prefix: &'a [usize]) -> Self {
        GuidedChooser { prefix, pos: 0 }
    }
}

impl<C> Chooser<C> for GuidedChooser<'_> {
    fn choose(&mut self, candidates: &[C]) -> std::result::Result<usize, Interrupt> {
        if candidates.len() == 1 {
            return Ok(0);
        }
        let i = self.prefix.get(self.pos).copied().unwrap_or(0);
        self.pos += 1;
        Ok(i)
    }
}

/// Counters from one trace search.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    /// Choice-tree nodes visited (each is one replay).
    pub nodes_explored: u64,
    pub leaves: u64,
    pub pruned: u64,
    pub node_cap: u64,
}

impl SearchStats {
    pub fn new(node_cap: u64) -> Self {
        SearchStats {
            node_cap,
            ..Default::default()
        }
    }

    pub fn absorb(&mut self, other: SearchStats) {
        self.nodes_explored += other.nodes_explored;
        self.leaves += other.leaves;
        self.pruned += other.pruned;
    }
}

/// Depth-first search over choice sequences. `exec` runs the algorithm
/// from scratch under the given chooser; the first finished run accepted by
/// `accept` is returned with its branch-point indices.
pub(crate) fn depth_first<T>(
    stats: &mut SearchStats,
    prune_at: Option<usize>,
    mut exec: impl FnMut(&mut PrefixChooser<'_>) -> std::result::Result<T, Interrupt>,
    mut accept: impl FnMut(&T) -> bool,
) -> Result<Option<(T, Vec<usize>)>> {
    let mut stack: Vec<Vec<usize>> = vec![Vec::new()];
    while let Some(prefix) = stack.pop() {
        if stats.nodes_explored >= stats.node_cap {
            return Err(Error::CapExceeded {
                what: "choice-tree node",
                cap: stats.node_cap,
                explored: stats.nodes_explored,
            });
        }
        stats.nodes_explored += 1;
        let mut chooser = PrefixChooser {
            prefix: &prefix,
            pos: 0,
            prune_at,
        };
        match exec(&mut chooser) {
            Ok(done) => {
                stats.leaves += 1;
                if accept(&done) {
                    return Ok(Some((done, prefix)));
                }
            }
            Err(Interrupt::Frontier(n)) => {
                for i in (0..n).rev() {
                    let mut next = prefix.clone();
                    next.push(i);
                    stack.push(next);
                }
            }
            Err(Interrupt::Pruned) => stats.pruned += 1,
            Err(other) => return Err(other.into_error()),
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    // A toy "algorithm": three binary choices, answer is the number of 1s.
    fn toy(ch: &mut dyn Chooser<u8>) -> std::result::Result<u32, Interrupt> {
        let mut ones = 0;
        for _ in 0..3 {
            ones += ch.choose(&[0, 1])? as u32;
            ch.clique_found(ones as usize)?;
        }
        Ok(ones)
    }

    #[test]
    fn dfs_visits_in_lowest_first_order() {
        let mut stats = SearchStats::new(100);
        let mut seen = Vec::new();
        let found = depth_first(
            &mut stats,
            None,
            |c| toy(c),
            |&v| {
                seen.push(v);
                false
            },
        )
        .unwrap();
        assert!(found.is_none());
        assert_eq!(seen, vec![0, 1, 1, 2, 1, 2, 2, 3]);
        assert_eq!(stats.leaves, 8);
        assert_eq!(stats.nodes_explored, 15);
    }

    #[test]
    fn dfs_returns_branch_indices() {
        let mut stats = SearchStats::new(100);
        let (v, prefix) = depth_first(&mut stats, None, |c| toy(c), |&v| v == 3)
            .unwrap()
            .unwrap();
        assert_eq!(v, 3);
        assert_eq!(prefix, vec![1, 1, 1]);
    }

    #[test]
    fn pruning_cuts_branches() {
        let mut stats = SearchStats::new(100);
        let found = depth_first(&mut stats, Some(2), |c| toy(c), |_| false).unwrap();
        assert!(found.is_none());
        assert!(stats.pruned > 0);
        assert_eq!(stats.leaves, 4);
    }

    #[test]
    fn cap_is_enforced() {
        let mut stats = SearchStats::new(3);
        let err = depth_first(&mut stats, None, |c| toy(c), |_| false).unwrap_err();
        assert_eq!(
            err,
            Error::CapExceeded {
                what: "choice-tree node",
                cap: 3,
                explored: 3
            }
        );
    }

    #[test]
    fn scripted_policy_validates() {
        let policy = ChoicePolicy::Scripted(vec![1u8, 7]);
        let mut ch = PolicyChooser::new(&policy).unwrap();
        assert_eq!(ch.choose(&[0, 1]), Ok(1));
        assert!(matches!(
            ch.choose(&[0, 1]),
            Err(Interrupt::Replay { index: 1, .. })
        ));
        // exhausted scripts fall back to the lowest candidate
        assert_eq!(ch.choose(&[4, 5]), Ok(0));
        assert!(PolicyChooser::<u8>::new(&ChoicePolicy::Exhaustive).is_err());
    }
}
