//! DIMACS, edge-list and DOT text formats.
//!
//! DIMACS ids are 1-based on disk and 0-based in memory. Edge lists use the
//! in-memory ids directly. Both formats carry display labels in comment
//! lines (`c label <id> <text>` and `# label <id> <text>`), so fixtures keep
//! their labels through a round trip.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{Graph, Vertex, VertexSet};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GraphFormat {
    Dimacs,
    EdgeList,
    /// Export only.
    Dot,
}

impl FromStr for GraphFormat {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "dimacs" | "col" => Ok(GraphFormat::Dimacs),
            "edge-list" | "edge_list" | "edges" => Ok(GraphFormat::EdgeList),
            "dot" => Ok(GraphFormat::Dot),
            other => Err(format!("unknown graph format `{other}`")),
        }
    }
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_num(tok: &str, line: usize, what: &str) -> Result<usize> {
    tok.parse()
        .map_err(|_| parse_err(line, format!("invalid {what} `{tok}`")))
}

/// Parses a graph. Errors name the offending 1-based line number.
pub fn parse_graph(text: &str, format: GraphFormat) -> Result<Graph> {
    match format {
        GraphFormat::Dimacs => parse_dimacs(text),
        GraphFormat::EdgeList => parse_edge_list(text),
        GraphFormat::Dot => Err(parse_err(0, "DOT is an export-only format")),
    }
}

fn label_comment(rest: &str, line: usize, one_based: bool) -> Result<Option<(Vertex, String)>> {
    let rest = rest.trim_start();
    let Some(body) = rest.strip_prefix("label") else {
        return Ok(None);
    };
    let mut parts = body.trim().splitn(2, char::is_whitespace);
    let id = parts.next().unwrap_or("");
    let text = parts.next().unwrap_or("").trim();
    if text.is_empty() {
        return Err(parse_err(line, "label comment needs an id and a label"));
    }
    let mut id = parse_num(id, line, "vertex id")?;
    if one_based {
        id = id
            .checked_sub(1)
            .ok_or_else(|| parse_err(line, "vertex ids are 1-based"))?;
    }
    Ok(Some((id, text.to_string())))
}

fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut graph: Option<Graph> = None;
    let mut labels = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        let mut toks = trimmed.split_whitespace();
        match toks.next() {
            Some("c") => {
                if let Some(label) = label_comment(&trimmed[1..], line, true)? {
                    labels.push((line, label));
                }
            }
            Some("p") => {
                if graph.is_some() {
                    return Err(parse_err(line, "duplicate problem line"));
                }
                let rest: Vec<&str> = toks.collect();
                if rest.len() != 3 || !matches!(rest[0], "edge" | "col") {
                    return Err(parse_err(line, "malformed header, expected `p edge N M`"));
                }
                let n = parse_num(rest[1], line, "vertex count")?;
                parse_num(rest[2], line, "edge count")?;
                graph = Some(Graph::new(n));
            }
            Some("e") => {
                let g = graph
                    .as_mut()
                    .ok_or_else(|| parse_err(line, "edge line before `p edge` header"))?;
                let rest: Vec<&str> = toks.collect();
                if rest.len() != 2 {
                    return Err(parse_err(line, "malformed edge, expected `e u v`"));
                }
                let n = g.vertex_count();
                let mut ends = [0; 2];
                for (slot, tok) in ends.iter_mut().zip(&rest) {
                    let id = parse_num(tok, line, "vertex id")?;
                    if id == 0 || id > n {
                        return Err(parse_err(line, format!("vertex {id} out of range 1..={n}")));
                    }
                    *slot = id - 1;
                }
                if ends[0] == ends[1] {
                    return Err(parse_err(line, format!("self-loop on vertex {}", rest[0])));
                }
                g.insert_edge(ends[0], ends[1])?;
            }
            Some(other) => {
                return Err(parse_err(line, format!("unknown line type `{other}`")));
            }
            None => {}
        }
    }

    let graph = graph.ok_or_else(|| parse_err(0, "missing `p edge N M` header"))?;
    attach_labels(graph, labels)
}

fn attach_labels(graph: Graph, labels: Vec<(usize, (Vertex, String))>) -> Result<Graph> {
    if labels.is_empty() {
        return Ok(graph);
    }
    for (line, (v, _)) in &labels {
        if !graph.contains(*v) {
            return Err(parse_err(*line, format!("label for unknown vertex {v}")));
        }
    }
    Ok(graph.with_labels(labels.into_iter().map(|(_, l)| l)))
}

fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut declared: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut labels = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        if let Some(rest) = trimmed.strip_prefix('#') {
            if let Some(label) = label_comment(rest, line, false)? {
                labels.push((line, label));
            }
            continue;
        }
        let toks: Vec<&str> = trimmed.split_whitespace().collect();
        if toks[0] == "n" {
            if declared.is_some() {
                return Err(parse_err(line, "duplicate `n` header"));
            }
            if toks.len() != 2 {
                return Err(parse_err(line, "malformed header, expected `n N`"));
            }
            declared = Some((parse_num(toks[1], line, "vertex count")?, line));
            continue;
        }
        if toks.len() != 2 {
            return Err(parse_err(line, "malformed edge, expected `u v`"));
        }
        let u = parse_num(toks[0], line, "vertex id")?;
        let v = parse_num(toks[1], line, "vertex id")?;
        if u == v {
            return Err(parse_err(line, format!("self-loop on vertex {u}")));
        }
        edges.push((line, u, v));
    }

    let n = match declared {
        Some((n, _)) => n,
        None => edges
            .iter()
            .map(|&(_, u, v)| u.max(v) + 1)
            .max()
            .unwrap_or(0),
    };
    let mut g = Graph::new(n);
    for (line, u, v) in edges {
        if u >= n || v >= n {
            return Err(parse_err(
                line,
                format!("vertex {} out of range 0..{n}", u.max(v)),
            ));
        }
        g.insert_edge(u, v)?;
    }
    attach_labels(g, labels)
}

/// Writes a graph. DIMACS and edge-list output reparse to an equal graph
/// whenever the ids are dense `0..n`; a graph with gaps in its ids comes
/// back with the gaps filled by isolated vertices.
pub fn serialize_graph(g: &Graph, format: GraphFormat) -> String {
    match format {
        GraphFormat::Dimacs => to_dimacs(g),
        GraphFormat::EdgeList => to_edge_list(g),
        GraphFormat::Dot => serialize_graph_dot(g, None),
    }
}

fn to_dimacs(g: &Graph) -> String {
    let mut out = String::new();
    let edges = g.edges();
    writeln!(out, "p edge {} {}", g.id_bound(), edges.len()).unwrap();
    for v in g.vertices() {
        if let Some(l) = g.explicit_label(v) {
            writeln!(out, "c label {} {l}", v + 1).unwrap();
        }
    }
    for (u, v) in edges {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}

fn to_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "n {}", g.id_bound()).unwrap();
    for v in g.vertices() {
        if let Some(l) = g.explicit_label(v) {
            writeln!(out, "# label {v} {l}").unwrap();
        }
    }
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// DOT rendering. Members of `highlight` and the edges between them are
/// drawn red.
pub fn serialize_graph_dot(g: &Graph, highlight: Option<&VertexSet>) -> String {
    let marked = |v: Vertex| highlight.is_some_and(|s| s.contains(v));
    let mut out = String::from("graph G {\n");
    for v in g.vertices() {
        let label = dot_escape(&g.label(v));
        if marked(v) {
            writeln!(
                out,
                "  {v} [label=\"{label}\", style=filled, fillcolor=red];"
            )
            .unwrap();
        } else {
            writeln!(out, "  {v} [label=\"{label}\"];").unwrap();
        }
    }
    for (u, v) in g.edges() {
        if marked(u) && marked(v) {
            writeln!(out, "  {u} -- {v} [color=red];").unwrap();
        } else {
            writeln!(out, "  {u} -- {v};").unwrap();
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counterexamples::{fig2_graph, laplante_15};

    #[test]
    fn dimacs_triangle() {
        let g = parse_graph(
            "c tiny\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n",
            GraphFormat::Dimacs,
        )
        .unwrap();
        assert_eq!(g, Graph::complete(3));
    }

    #[test]
    fn dimacs_keeps_isolated_and_collapses_duplicates() {
        let g = parse_graph("p edge 4 2\ne 1 2\ne 2 1\n", GraphFormat::Dimacs).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn dimacs_errors_name_the_line() {
        let cases = [
            ("p edge x 1\n", 1),
            ("p edge 3\n", 1),
            ("c hi\np edge 2 1\ne 1 3\n", 3),
            ("p edge 2 1\n\ne 2 2\n", 3),
            ("e 1 2\n", 1),
            ("p edge 2 1\nq 1\n", 2),
            ("p edge 2 0\np edge 2 0\n", 2),
        ];
        for (text, line) in cases {
            match parse_graph(text, GraphFormat::Dimacs) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?} gave {other:?}"),
            }
        }
        assert!(parse_graph("c nothing\n", GraphFormat::Dimacs).is_err());
    }

    #[test]
    fn edge_list_parsing() {
        let g = parse_graph("# comment\n0 1\n1 2\n", GraphFormat::EdgeList).unwrap();
        assert_eq!(g.vertex_count(), 3);
        let g = parse_graph("n 5\n0 1\n", GraphFormat::EdgeList).unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert!(matches!(
            parse_graph("n 2\n0 1\n1 2\n", GraphFormat::EdgeList),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse_graph("0 1\n3 3\n", GraphFormat::EdgeList),
            Err(Error::Parse { line: 2, .. })
        ));
        assert_eq!(
            parse_graph("", GraphFormat::EdgeList).unwrap(),
            Graph::new(0)
        );
    }

    #[test]
    fn labels_survive_round_trip() {
        let g = laplante_15();
        for fmt in [GraphFormat::Dimacs, GraphFormat::EdgeList] {
            let back = parse_graph(&serialize_graph(&g, fmt), fmt).unwrap();
            assert_eq!(back, g);
            assert_eq!(back.label(5), "A");
        }
    }

    #[test]
    fn dot_export() {
        let g = fig2_graph();
        let dot = serialize_graph_dot(&g, None);
        assert_eq!(dot.matches("[label=").count(), 7);
        assert_eq!(dot.matches(" -- ").count(), 15);
        assert!(!dot.contains("red"));

        let g = laplante_15();
        let five = g.set_by_labels(&["1", "2", "3", "4", "5"]).unwrap();
        let dot = serialize_graph_dot(&g, Some(&five));
        assert_eq!(dot.matches("fillcolor=red").count(), 5);
        assert_eq!(dot.matches("[color=red]").count(), 10);
    }
}
