//! One function per subcommand. Each returns a report and its exit code.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use cliquelab_core::counterexamples::Fixture;
use cliquelab_core::laplante::{self, LaplanteChoice, LaplanteResult};
use cliquelab_core::poly_clique::{self, PolyChoice, PolyCliqueTrace};
use cliquelab_core::wood::{self, ArcClass};
use cliquelab_core::{
    max_clique, maximal_cliques, pair, parse_graph, serialize_graph, ChoicePolicy, Graph,
    GraphFormat, Pair, SearchMode, VertexSet,
};
use serde_json::{json, Value};

use crate::args::{FormatArg, GraphArgs, LaplanteCommand, PolyCommand, ReduceCommand, ScriptArgs};
use crate::error::{CliError, EXIT_NOT_REPRODUCED, EXIT_OK};
use crate::report::{
    Claim, InputDescriptor, OracleAnswer, Outcome, Report, Reproduction, SearchSummary,
};
use crate::script::{read_script, render_script, write_file};

/// Per-stage wall clock, recorded only when requested.
pub struct Timer {
    enabled: bool,
    stages: BTreeMap<String, f64>,
}

impl Timer {
    pub fn new(enabled: bool) -> Self {
        Timer {
            enabled,
            stages: BTreeMap::new(),
        }
    }

    pub fn time<T>(&mut self, stage: &str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        if self.enabled {
            *self.stages.entry(stage.to_string()).or_default() += start.elapsed().as_secs_f64();
        }
        out
    }

    pub fn attach(self, r: &mut Report) {
        if self.enabled {
            r.timings = Some(self.stages);
        }
    }
}

pub struct Input {
    pub graph: Graph,
    pub source: String,
    /// Run seed, echoed in the report.
    pub seed: u64,
}

pub fn load_graph(a: &GraphArgs, seed: u64) -> Result<Input, CliError> {
    let given = [a.fixture.is_some(), a.input.is_some(), a.random.is_some()];
    if given.iter().filter(|&&b| b).count() != 1 {
        return Err(CliError::Usage(
            "give exactly one of --fixture, --input or --random".into(),
        ));
    }
    if let Some(name) = &a.fixture {
        let fixture: Fixture = name.parse()?;
        return Ok(Input {
            graph: fixture.graph(),
            source: format!("fixture:{fixture}"),
            seed,
        });
    }
    if let Some(path) = &a.input {
        let text = fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
        let graph = parse_graph(&text, a.format.into())?;
        return Ok(Input {
            graph,
            source: format!("file:{}", path.display()),
            seed,
        });
    }
    let spec = a.random.as_deref().unwrap_or_default();
    let (n, p) = parse_random(spec)?;
    Ok(Input {
        graph: Graph::random_seeded(n, p, seed),
        source: format!("random:n={n},p={p},seed={seed}"),
        seed,
    })
}

fn parse_random(spec: &str) -> Result<(usize, f64), CliError> {
    let bad = || {
        CliError::Usage(format!(
            "--random expects N:P with 0 <= P <= 1, got `{spec}`"
        ))
    };
    let (n, p) = spec.split_once(':').ok_or_else(bad)?;
    let n: usize = n.trim().parse().map_err(|_| bad())?;
    let p: f64 = p.trim().parse().map_err(|_| bad())?;
    if !(0.0..=1.0).contains(&p) {
        return Err(bad());
    }
    Ok((n, p))
}

fn base_report(command: &str, input: &Input) -> Report {
    let mut r = Report::new(command, input.seed);
    r.input = Some(InputDescriptor::new(&input.source, &input.graph));
    r
}

fn resolve(g: &Graph, label: &str) -> Result<usize, CliError> {
    g.vertex_by_label(label.trim())
        .ok_or_else(|| CliError::Input(format!("no vertex labelled `{label}`")))
}

fn script_path_string(p: &Option<PathBuf>) -> Option<String> {
    p.as_ref().map(|p| p.display().to_string())
}

fn policy_name<C>(p: &ChoicePolicy<C>) -> &'static str {
    match p {
        ChoicePolicy::LowestId => "lowest-id",
        ChoicePolicy::Scripted(_) => "scripted",
        ChoicePolicy::Exhaustive => "exhaustive",
    }
}

pub fn oracle(input: &Input, maximal: bool, timer: &mut Timer) -> Report {
    let g = &input.graph;
    let mut r = base_report("oracle", input);
    let best = timer.time("oracle", || max_clique(g));
    r.oracle = Some(OracleAnswer::new(g, &best));
    r.details = Some(json!({ "nodes_explored": best.nodes_explored }));
    if maximal {
        let all = timer.time("maximal", || maximal_cliques(g));
        let listed: Vec<String> = all.iter().map(|c| g.format_set(c)).collect();
        r.details = Some(json!({
            "nodes_explored": best.nodes_explored,
            "maximal_count": listed.len(),
            "maximal_cliques": listed,
        }));
    }
    r
}

// ---- Poly-Clique -----------------------------------------------------------

fn annotate_poly(g: &Graph) -> impl Fn(&PolyChoice) -> String + '_ {
    move |c| match *c {
        PolyChoice::Pair(u, v) => g.format_pair((u, v)),
        PolyChoice::Vertex(v) => g.label(v).into_owned(),
    }
}

fn poly_outcome(policy: &str, trace: Option<&PolyCliqueTrace>, oracle_exists: bool) -> Outcome {
    Outcome {
        algorithm: "poly-clique".into(),
        policy: policy.into(),
        decision: trace.map(|t| t.decision.exists()),
        max_size: None,
        agreement: trace.map(|t| t.decision.exists() == oracle_exists),
        trace: trace.map(|t| serde_json::to_value(t).expect("traces serialize")),
    }
}

/// Records the script in the report and optionally on disk.
fn attach_script<C: std::fmt::Display>(
    r: &mut Report,
    choices: &[C],
    annotate: impl Fn(&C) -> String,
    out: &Option<PathBuf>,
) -> Result<(), CliError> {
    if let Some(path) = out {
        write_file(path, &render_script(choices, annotate))?;
    }
    r.reproduction = Some(Reproduction {
        script: choices.iter().map(ToString::to_string).collect(),
        script_path: script_path_string(out),
    });
    Ok(())
}

/// Report for one Poly-Clique search; shared with the family sweep.
pub fn poly_search_report(
    command: &str,
    input: &Input,
    k: usize,
    mode: SearchMode,
    node_cap: u64,
    script_out: &Option<PathBuf>,
    timer: &mut Timer,
) -> Result<Report, CliError> {
    let g = &input.graph;
    let mut r = base_report(command, input);
    r.k = Some(k);
    let best = timer.time("oracle", || max_clique(g));
    r.oracle = Some(OracleAnswer::new(g, &best));
    let s = timer.time("search", || {
        poly_clique::search_traces(g, k, mode, node_cap)
    })?;
    let policy = format!("{mode}-search");
    r.outcomes.push(poly_outcome(
        &policy,
        s.trace.as_ref(),
        s.oracle_decision.exists(),
    ));
    r.search = Some(SearchSummary::new(mode, s.trace.is_some(), &s.stats));
    if let Some(t) = &s.trace {
        attach_script(&mut r, &t.choices(), annotate_poly(g), script_out)?;
        r.notes.push(t.to_text(g));
    }
    Ok(r)
}

pub fn polyclique(
    cmd: &PolyCommand,
    seed: u64,
    timer: &mut Timer,
) -> Result<(Report, i32), CliError> {
    match cmd {
        PolyCommand::Run { graph, k, script } => {
            let input = load_graph(graph, seed)?;
            let r = poly_run(&input, *k, script, timer)?;
            Ok((r, EXIT_OK))
        }
        PolyCommand::Search {
            graph,
            k,
            mode,
            caps,
            script_out,
        } => {
            let input = load_graph(graph, seed)?;
            let r = poly_search_report(
                "polyclique search",
                &input,
                *k,
                (*mode).into(),
                caps.node_cap,
                script_out,
                timer,
            )?;
            Ok((r, EXIT_OK))
        }
        PolyCommand::VerifyCounterexample {
            graph,
            k,
            caps,
            script_out,
        } => {
            let input = load_graph(graph, seed)?;
            let mut r = poly_search_report(
                "polyclique verify-counterexample",
                &input,
                *k,
                SearchMode::Adversarial,
                caps.node_cap,
                script_out,
                timer,
            )?;
            let reproduced = r.search.as_ref().is_some_and(|s| s.found);
            r.claim = Some(Claim {
                statement: format!(
                    "some tie resolution makes Poly-Clique answer the {k}-clique question wrongly"
                ),
                reproduced,
            });
            Ok((
                r,
                if reproduced {
                    EXIT_OK
                } else {
                    EXIT_NOT_REPRODUCED
                },
            ))
        }
    }
}

fn poly_run(
    input: &Input,
    k: usize,
    script: &ScriptArgs,
    timer: &mut Timer,
) -> Result<Report, CliError> {
    let g = &input.graph;
    let policy = match &script.script {
        Some(path) => ChoicePolicy::Scripted(read_script::<PolyChoice>(path)?),
        None => ChoicePolicy::LowestId,
    };
    let mut r = base_report("polyclique run", input);
    r.k = Some(k);
    let best = timer.time("oracle", || max_clique(g));
    r.oracle = Some(OracleAnswer::new(g, &best));
    let trace = timer.time("run", || poly_clique::run(g, k, &policy))?;
    r.outcomes.push(poly_outcome(
        policy_name(&policy),
        Some(&trace),
        best.size >= k,
    ));
    attach_script(
        &mut r,
        &trace.choices(),
        annotate_poly(g),
        &script.script_out,
    )?;
    r.notes.push(trace.to_text(g));
    Ok(r)
}

// ---- LaPlante ----------------------------------------------------------------

fn annotate_laplante(g: &Graph) -> impl Fn(&LaplanteChoice) -> String + '_ {
    move |c| match *c {
        LaplanteChoice::Start { center, p, q } => {
            format!(
                "around {}: start {}",
                g.label(center),
                g.format_pair((p, q))
            )
        }
        LaplanteChoice::Key { center, key } => {
            format!("around {}: key {}", g.label(center), g.label(key))
        }
        LaplanteChoice::Absorb { center, vertex } => {
            format!("around {}: absorb {}", g.label(center), g.label(vertex))
        }
    }
}

fn laplante_outcome(
    policy: &str,
    result: Option<&LaplanteResult>,
    oracle_size: usize,
    k: Option<usize>,
) -> Outcome {
    let agreement = result.map(|res| match k {
        Some(k) => res.decides(k) == (oracle_size >= k),
        None => res.global_max.size == oracle_size,
    });
    Outcome {
        algorithm: "laplante".into(),
        policy: policy.into(),
        decision: result.zip(k).map(|(res, k)| res.decides(k)),
        max_size: result.map(|res| res.global_max.size),
        agreement,
        trace: result.map(|res| serde_json::to_value(res).expect("results serialize")),
    }
}

fn laplante_notes(g: &Graph, res: &LaplanteResult) -> Vec<String> {
    let mut notes: Vec<String> = res.traces.iter().map(|t| t.to_text(g)).collect();
    notes.push(format!(
        "global max {} witness {}",
        res.global_max.size,
        g.format_set(&res.global_max.witness)
    ));
    notes
}

fn laplante_details(res: &LaplanteResult) -> Value {
    json!({
        "phase1_operations": res.phase1_operations,
        "merge_chains": res.traces.len(),
        "cliques_reported": res.cliques().len(),
    })
}

fn laplante_search_report(
    command: &str,
    input: &Input,
    mode: SearchMode,
    node_cap: u64,
    script_out: &Option<PathBuf>,
    timer: &mut Timer,
) -> Result<Report, CliError> {
    let g = &input.graph;
    let mut r = base_report(command, input);
    let best = timer.time("oracle", || max_clique(g));
    r.oracle = Some(OracleAnswer::new(g, &best));
    let s = timer.time("search", || laplante::search_traces(g, mode, node_cap))?;
    let policy = format!("{mode}-search");
    r.outcomes.push(laplante_outcome(
        &policy,
        s.result.as_ref(),
        best.size,
        None,
    ));
    r.search = Some(SearchSummary::new(mode, s.script.is_some(), &s.stats));
    if let (Some(script), Some(res)) = (&s.script, &s.result) {
        attach_script(&mut r, script, annotate_laplante(g), script_out)?;
        r.details = Some(laplante_details(res));
        r.notes = laplante_notes(g, res);
    }
    Ok(r)
}

pub fn laplante_cmd(
    cmd: &LaplanteCommand,
    seed: u64,
    timer: &mut Timer,
) -> Result<(Report, i32), CliError> {
    match cmd {
        LaplanteCommand::Run { graph, k, script } => {
            let input = load_graph(graph, seed)?;
            let g = &input.graph;
            let policy = match &script.script {
                Some(path) => ChoicePolicy::Scripted(read_script::<LaplanteChoice>(path)?),
                None => ChoicePolicy::LowestId,
            };
            let mut r = base_report("laplante run", &input);
            r.k = *k;
            let best = timer.time("oracle", || max_clique(g));
            r.oracle = Some(OracleAnswer::new(g, &best));
            let res = timer.time("run", || laplante::run(g, &policy))?;
            r.outcomes.push(laplante_outcome(
                policy_name(&policy),
                Some(&res),
                best.size,
                *k,
            ));
            attach_script(
                &mut r,
                &res.choices(),
                annotate_laplante(g),
                &script.script_out,
            )?;
            r.details = Some(laplante_details(&res));
            r.notes = laplante_notes(g, &res);
            Ok((r, EXIT_OK))
        }
        LaplanteCommand::Search {
            graph,
            mode,
            caps,
            script_out,
        } => {
            let input = load_graph(graph, seed)?;
            let r = laplante_search_report(
                "laplante search",
                &input,
                (*mode).into(),
                caps.node_cap,
                script_out,
                timer,
            )?;
            Ok((r, EXIT_OK))
        }
        LaplanteCommand::VerifyCounterexample {
            graph,
            caps,
            script_out,
        } => {
            let input = load_graph(graph, seed)?;
            let mut r = laplante_search_report(
                "laplante verify-counterexample",
                &input,
                SearchMode::Adversarial,
                caps.node_cap,
                script_out,
                timer,
            )?;
            let reproduced = r.search.as_ref().is_some_and(|s| s.found);
            r.claim = Some(Claim {
                statement:
                    "some merge-choice script makes LaPlante's algorithm miss the maximum clique"
                        .into(),
                reproduced,
            });
            Ok((
                r,
                if reproduced {
                    EXIT_OK
                } else {
                    EXIT_NOT_REPRODUCED
                },
            ))
        }
    }
}

// ---- Reduction ---------------------------------------------------------------

fn parse_edge(g: &Graph, s: &str) -> Result<Pair, CliError> {
    let (a, b) = s
        .split_once('-')
        .ok_or_else(|| CliError::Usage(format!("edges are written u-v, got `{s}`")))?;
    Ok(pair(resolve(g, a)?, resolve(g, b)?))
}

pub fn reduce(
    cmd: &ReduceCommand,
    seed: u64,
    timer: &mut Timer,
) -> Result<(Report, i32), CliError> {
    match cmd {
        ReduceCommand::Build { graph, dot } => {
            let input = load_graph(graph, seed)?;
            let g = &input.graph;
            let mut r = base_report("reduce build", &input);
            let net = timer.time("build", || wood::build_gh(g));
            if let Some(path) = dot {
                write_file(path, &net.to_dot(g))?;
            }
            r.details = Some(json!({
                "nodes": net.node_count(),
                "arcs": net.arc_count(),
                "a1_arcs": net.arcs_in(ArcClass::A1).count(),
                "a2_arcs": net.arcs_in(ArcClass::A2).count(),
                "a3_arcs": net.arcs_in(ArcClass::A3).count(),
                "dot_path": script_path_string(dot),
            }));
            Ok((r, EXIT_OK))
        }
        ReduceCommand::Maxflow {
            graph,
            remove_edges,
            remove_vertices,
        } => {
            let input = load_graph(graph, seed)?;
            let g = &input.graph;
            let mut r = base_report("reduce maxflow", &input);
            let edges = remove_edges
                .iter()
                .map(|e| parse_edge(g, e))
                .collect::<Result<Vec<_>, _>>()?;
            let vertices = remove_vertices
                .iter()
                .map(|v| resolve(g, v))
                .collect::<Result<VertexSet, _>>()?;
            let value = timer.time("maxflow", || -> Result<u64, CliError> {
                if vertices.is_empty() {
                    let net = wood::build_gh(g).remove_source_arcs(&edges)?;
                    Ok(wood::max_flow(&net).0)
                } else {
                    Ok(wood::vertex_interdiction_value(g, &vertices)?.0)
                }
            })?;
            r.details = Some(json!({
                "max_flow": value,
                "removed_edges": edges.iter().map(|&e| g.format_pair(e)).collect::<Vec<_>>(),
                "removed_vertices": vertices.iter().map(|v| g.label(v).into_owned()).collect::<Vec<_>>(),
            }));
            Ok((r, EXIT_OK))
        }
        ReduceCommand::Lemma1 { graph } => {
            let input = load_graph(graph, seed)?;
            let g = &input.graph;
            let mut r = base_report("reduce lemma1", &input);
            let flow = timer.time("maxflow", || wood::max_flow(&wood::build_gh(g)).0);
            let expected = wood::non_isolated(g);
            r.details = Some(json!({ "max_flow": flow, "non_isolated": expected }));
            let holds = flow == expected;
            r.claim = Some(Claim {
                statement:
                    "max flow through the network equals the number of non-isolated vertices".into(),
                reproduced: holds,
            });
            Ok((r, if holds { EXIT_OK } else { EXIT_NOT_REPRODUCED }))
        }
        ReduceCommand::Theorem {
            graph,
            k,
            subset_cap,
        } => {
            let input = load_graph(graph, seed)?;
            let g = &input.graph;
            let mut r = base_report("reduce theorem", &input);
            r.k = Some(*k);
            let best = timer.time("oracle", || max_clique(g));
            r.oracle = Some(OracleAnswer::new(g, &best));
            let cert = timer.time("enumerate", || {
                wood::verify_wood_theorem(g, *k, *subset_cap)
            })?;
            r.details = Some(serde_json::to_value(&cert).expect("certificates serialize"));
            r.claim = Some(Claim {
                statement: format!(
                    "a {k}-clique exists iff removing some |E|-C(k,2) source arcs leaves max flow {k}"
                ),
                reproduced: cert.holds,
            });
            Ok((
                r,
                if cert.holds {
                    EXIT_OK
                } else {
                    EXIT_NOT_REPRODUCED
                },
            ))
        }
    }
}

// ---- Fixtures ----------------------------------------------------------------

pub fn fixture_text(name: &str, format: FormatArg, highlight: bool) -> Result<String, CliError> {
    let fixture: Fixture = name.parse()?;
    let g = fixture.graph();
    Ok(match GraphFormat::from(format) {
        GraphFormat::Dot => {
            let best = highlight.then(|| max_clique(&g).witness);
            cliquelab_core::graph::serialize_graph_dot(&g, best.as_ref())
        }
        f => serialize_graph(&g, f),
    })
}

pub fn write_or_print(
    out: &Option<PathBuf>,
    text: &str,
    stdout: &mut dyn std::io::Write,
) -> Result<(), CliError> {
    match out {
        Some(path) => write_file(Path::new(path), text),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|e| CliError::Input(format!("stdout: {e}"))),
    }
}
