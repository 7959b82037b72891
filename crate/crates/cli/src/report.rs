//! Machine- and human-readable run reports.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use cliquelab_core::{CliqueResult, Graph, SearchStats};
use serde::Serialize;
use serde_json::Value;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InputDescriptor {
    pub source: String,
    pub vertices: usize,
    pub edges: usize,
}

impl InputDescriptor {
    pub fn new(source: impl Into<String>, g: &Graph) -> Self {
        InputDescriptor {
            source: source.into(),
            vertices: g.vertex_count(),
            edges: g.edge_count(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OracleAnswer {
    pub size: usize,
    pub witness: Vec<usize>,
    pub witness_labels: Vec<String>,
}

impl OracleAnswer {
    pub fn new(g: &Graph, r: &CliqueResult) -> Self {
        OracleAnswer {
            size: r.size,
            witness: r.witness.to_vec(),
            witness_labels: r.witness.iter().map(|v| g.label(v).into_owned()).collect(),
        }
    }
}

/// One algorithm's answer next to the oracle's.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Outcome {
    pub algorithm: String,
    pub policy: String,
    /// k-clique answer, when the run decides one.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decision: Option<bool>,
    /// Largest clique reported, for heuristics that report one.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_size: Option<usize>,
    /// Whether the answer equals the oracle's; absent when no run exists.
    pub agreement: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<Value>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SearchSummary {
    pub mode: String,
    pub found: bool,
    pub nodes_explored: u64,
    pub leaves: u64,
    pub pruned: u64,
    pub node_cap: u64,
}

impl SearchSummary {
    pub fn new(mode: impl ToString, found: bool, s: &SearchStats) -> Self {
        SearchSummary {
            mode: mode.to_string(),
            found,
            nodes_explored: s.nodes_explored,
            leaves: s.leaves,
            pruned: s.pruned,
            node_cap: s.node_cap,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Reproduction {
    /// Choice lines; replaying them with `--script` reproduces the outcome.
    pub script: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub script_path: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Claim {
    pub statement: String,
    pub reproduced: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepSummary {
    pub rows: usize,
    pub disagreements: usize,
    pub agreements: usize,
    pub not_found: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub command: String,
    pub seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input: Option<InputDescriptor>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleAnswer>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub outcomes: Vec<Outcome>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub search: Option<SearchSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reproduction: Option<Reproduction>,
    /// Command-specific values (flow values, network sizes, ...).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub details: Option<Value>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub rows: Vec<Report>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub summary: Option<SweepSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub claim: Option<Claim>,
    /// Seconds per stage; only with `--timings`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings: Option<BTreeMap<String, f64>>,
    /// Human-readable trace lines for the text form.
    #[serde(skip)]
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(command: impl Into<String>, seed: u64) -> Self {
        Report {
            schema_version: SCHEMA_VERSION,
            command: command.into(),
            seed,
            input: None,
            k: None,
            oracle: None,
            outcomes: Vec::new(),
            search: None,
            reproduction: None,
            details: None,
            rows: Vec::new(),
            summary: None,
            claim: None,
            timings: None,
            notes: Vec::new(),
        }
    }
}

/// Renders a report. Equal reports render to equal bytes.
pub fn emit_report(r: &Report, format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => {
            let mut s = serde_json::to_string_pretty(r).expect("reports serialize");
            s.push('\n');
            s
        }
        ReportFormat::Text => text(r),
    }
}

const KEY: usize = 16;

fn row(out: &mut String, key: &str, value: impl std::fmt::Display) {
    writeln!(out, "{key:<KEY$}  {value}").unwrap();
}

fn flag(b: Option<bool>) -> &'static str {
    match b {
        Some(true) => "yes",
        Some(false) => "no",
        None => "-",
    }
}

fn text(r: &Report) -> String {
    let mut out = String::new();
    row(&mut out, "command", &r.command);
    if let Some(i) = &r.input {
        row(
            &mut out,
            "input",
            format!("{}  n={}  m={}", i.source, i.vertices, i.edges),
        );
    }
    row(&mut out, "seed", r.seed);
    if let Some(k) = r.k {
        row(&mut out, "k", k);
    }
    if let Some(o) = &r.oracle {
        row(
            &mut out,
            "oracle",
            format!(
                "size {}  witness {{{}}}",
                o.size,
                o.witness_labels.join(",")
            ),
        );
    }
    if !r.outcomes.is_empty() {
        writeln!(
            out,
            "\n{:<14}{:<22}{:<10}{:<10}agrees",
            "algorithm", "policy", "decision", "max"
        )
        .unwrap();
        for o in &r.outcomes {
            let decision = match o.decision {
                Some(true) => "clique",
                Some(false) => "none",
                None => "-",
            };
            let max = o.max_size.map_or("-".to_string(), |m| m.to_string());
            writeln!(
                out,
                "{:<14}{:<22}{:<10}{:<10}{}",
                o.algorithm,
                o.policy,
                decision,
                max,
                flag(o.agreement)
            )
            .unwrap();
        }
        out.push('\n');
    }
    if let Some(s) = &r.search {
        row(
            &mut out,
            "search",
            format!(
                "{}  found {}  nodes {}  leaves {}  pruned {}  cap {}",
                s.mode,
                flag(Some(s.found)),
                s.nodes_explored,
                s.leaves,
                s.pruned,
                s.node_cap
            ),
        );
    }
    if let Some(Value::Object(d)) = &r.details {
        for (key, value) in d {
            row(&mut out, key, value);
        }
    }
    if !r.rows.is_empty() {
        writeln!(
            out,
            "\n{:<6}{:<10}{:<12}{:<10}nodes",
            "k", "oracle", "decision", "agrees"
        )
        .unwrap();
        for sub in &r.rows {
            let o = sub.outcomes.first();
            let decision = match o.and_then(|o| o.decision) {
                Some(true) => "clique",
                Some(false) => "none",
                None => "-",
            };
            writeln!(
                out,
                "{:<6}{:<10}{:<12}{:<10}{}",
                sub.k.unwrap_or(0),
                sub.oracle.as_ref().map_or(0, |o| o.size),
                decision,
                flag(o.and_then(|o| o.agreement)),
                sub.search.as_ref().map_or(0, |s| s.nodes_explored)
            )
            .unwrap();
        }
        out.push('\n');
    }
    if let Some(s) = &r.summary {
        row(
            &mut out,
            "summary",
            format!(
                "{} rows  {} disagree  {} agree  {} without trace",
                s.rows, s.disagreements, s.agreements, s.not_found
            ),
        );
    }
    if let Some(rep) = &r.reproduction {
        let path = rep.script_path.as_deref().unwrap_or("(not written)");
        row(
            &mut out,
            "script",
            format!("{} choices  {path}", rep.script.len()),
        );
    }
    if let Some(c) = &r.claim {
        let verdict = if c.reproduced {
            "REPRODUCED"
        } else {
            "NOT REPRODUCED"
        };
        row(&mut out, "claim", format!("{verdict}: {}", c.statement));
    }
    if let Some(t) = &r.timings {
        for (stage, secs) in t {
            row(&mut out, &format!("time.{stage}"), format!("{secs:.6}s"));
        }
    }
    if !r.notes.is_empty() {
        out.push('\n');
        for n in &r.notes {
            out.push_str(n);
            if !n.ends_with('\n') {
                out.push('\n');
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use cliquelab_core::{max_clique, Graph};

    #[test]
    fn empty_graph_oracle_report() {
        let g = Graph::new(0);
        let mut r = Report::new("oracle", 0);
        r.input = Some(InputDescriptor::new("file:empty.col", &g));
        r.oracle = Some(OracleAnswer::new(&g, &max_clique(&g)));
        let json: Value = serde_json::from_str(&emit_report(&r, ReportFormat::Json)).unwrap();
        assert_eq!(json["oracle"]["size"], 0);
        assert_eq!(json["schema_version"], SCHEMA_VERSION);
        assert!(emit_report(&r, ReportFormat::Text).contains("size 0"));
    }

    #[test]
    fn json_keys_keep_declaration_order() {
        let r = Report::new("oracle", 7);
        let s = emit_report(&r, ReportFormat::Json);
        let schema = s.find("schema_version").unwrap();
        let command = s.find("command").unwrap();
        let seed = s.find("seed").unwrap();
        assert!(schema < command && command < seed);
        assert!(!s.contains("notes"));
        assert_eq!(s, emit_report(&r.clone(), ReportFormat::Json));
    }
}
