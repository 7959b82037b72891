//! Command-line grammar.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cliquelab_core::{SearchMode, DEFAULT_NODE_CAP, DEFAULT_SUBSET_CAP};

#[derive(Debug, Parser)]
#[command(name = "cliquelab", version)]
#[command(about = "Run clique heuristics against an exact oracle and report where they fail")]
pub struct Cli {
    /// Emit the report as JSON instead of a text table.
    #[arg(long, global = true)]
    pub json: bool,

    /// Write the report (or fixture) to this file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,

    /// Seed for `--random` graphs; echoed in every report.
    #[arg(long, global = true, env = "CLIQUELAB_SEED", default_value_t = 0)]
    pub seed: u64,

    /// Include wall-clock timings. Timed reports are not byte-reproducible.
    #[arg(long, global = true)]
    pub timings: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact maximum clique.
    Oracle {
        #[command(flatten)]
        graph: GraphArgs,
        /// Also list every maximal clique.
        #[arg(long)]
        maximal: bool,
    },
    /// Greedy interdiction heuristic (Poly-Clique).
    #[command(subcommand)]
    Polyclique(PolyCommand),
    /// LaPlante's neighbourhood-merge heuristic.
    #[command(subcommand)]
    Laplante(LaplanteCommand),
    /// k-clique to max-flow interdiction reduction.
    #[command(subcommand)]
    Reduce(ReduceCommand),
    /// Print a builtin graph.
    Fixture {
        /// fig1, fig2, laplante15 or tamta-<k>.
        name: String,
        #[arg(long, value_enum, default_value_t = FormatArg::Dimacs)]
        format: FormatArg,
        /// Highlight a maximum clique (DOT only).
        #[arg(long)]
        highlight: bool,
    },
    /// Poly-Clique search over the counterexample family for a range of k.
    Sweep {
        #[arg(long, default_value_t = 4)]
        kmin: usize,
        #[arg(long, default_value_t = 8)]
        kmax: usize,
        #[arg(long, value_enum, default_value_t = ModeArg::Adversarial)]
        mode: ModeArg,
        #[command(flatten)]
        caps: NodeCap,
    },
}

#[derive(Debug, Subcommand)]
pub enum PolyCommand {
    /// One run under the lowest-id policy or a script.
    Run {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(short, long)]
        k: usize,
        #[command(flatten)]
        script: ScriptArgs,
    },
    /// Search tie resolutions for a disagreeing (or agreeing) trace.
    Search {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(short, long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = ModeArg::Adversarial)]
        mode: ModeArg,
        #[command(flatten)]
        caps: NodeCap,
        #[arg(long, value_name = "PATH")]
        script_out: Option<PathBuf>,
    },
    /// Exit 0 iff some tie resolution gives the wrong k-clique answer.
    VerifyCounterexample {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(short, long)]
        k: usize,
        #[command(flatten)]
        caps: NodeCap,
        #[arg(long, value_name = "PATH")]
        script_out: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
pub enum LaplanteCommand {
    /// One run under the lowest-id policy or a script.
    Run {
        #[command(flatten)]
        graph: GraphArgs,
        /// Also report the k-clique decision derived from the run.
        #[arg(short, long)]
        k: Option<usize>,
        #[command(flatten)]
        script: ScriptArgs,
    },
    /// Search merge choices for a run that misses (or finds) the maximum.
    Search {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, value_enum, default_value_t = ModeArg::Adversarial)]
        mode: ModeArg,
        #[command(flatten)]
        caps: NodeCap,
        #[arg(long, value_name = "PATH")]
        script_out: Option<PathBuf>,
    },
    /// Exit 0 iff some choice script misses the maximum clique.
    VerifyCounterexample {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        caps: NodeCap,
        #[arg(long, value_name = "PATH")]
        script_out: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
pub enum ReduceCommand {
    /// Build the flow network and summarise it.
    Build {
        #[command(flatten)]
        graph: GraphArgs,
        /// Write the network as DOT.
        #[arg(long, value_name = "PATH")]
        dot: Option<PathBuf>,
    },
    /// Max flow, optionally after interdiction.
    Maxflow {
        #[command(flatten)]
        graph: GraphArgs,
        /// Edges whose source arcs are removed, as `u-v` labels, comma separated.
        #[arg(long, value_delimiter = ',')]
        remove_edges: Vec<String>,
        /// Vertices to interdict, by label, comma separated.
        #[arg(long, value_delimiter = ',', conflicts_with = "remove_edges")]
        remove_vertices: Vec<String>,
    },
    /// Exit 0 iff max flow equals the number of non-isolated vertices.
    Lemma1 {
        #[command(flatten)]
        graph: GraphArgs,
    },
    /// Exit 0 iff subset enumeration and the oracle agree on k.
    Theorem {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(short, long)]
        k: usize,
        #[arg(long, env = "CLIQUELAB_SUBSET_CAP", default_value_t = DEFAULT_SUBSET_CAP,
              value_parser = clap::value_parser!(u64).range(1..))]
        subset_cap: u64,
    },
}

/// Graph source; exactly one of `--fixture`, `--input`, `--random`.
#[derive(Debug, Args)]
pub struct GraphArgs {
    /// Builtin graph: fig1, fig2, laplante15 or tamta-<k>.
    #[arg(long)]
    pub fixture: Option<String>,
    /// Graph file.
    #[arg(long, value_name = "PATH")]
    pub input: Option<PathBuf>,
    /// Seeded G(n, p) graph, written `N:P`.
    #[arg(long, value_name = "N:P")]
    pub random: Option<String>,
    /// Format of `--input`.
    #[arg(long, value_enum, default_value_t = FormatArg::Dimacs)]
    pub format: FormatArg,
}

#[derive(Debug, Args)]
pub struct ScriptArgs {
    /// Replay choices from this file (one per line), then continue lowest-id.
    #[arg(long, value_name = "PATH")]
    pub script: Option<PathBuf>,
    /// Write the choices made to this file.
    #[arg(long, value_name = "PATH")]
    pub script_out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct NodeCap {
    /// Maximum choice-tree nodes a search may visit.
    #[arg(long, env = "CLIQUELAB_NODE_CAP", default_value_t = DEFAULT_NODE_CAP,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub node_cap: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Dimacs,
    EdgeList,
    Dot,
}

impl From<FormatArg> for cliquelab_core::GraphFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Dimacs => cliquelab_core::GraphFormat::Dimacs,
            FormatArg::EdgeList => cliquelab_core::GraphFormat::EdgeList,
            FormatArg::Dot => cliquelab_core::GraphFormat::Dot,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Adversarial,
    Optimistic,
}

impl From<ModeArg> for SearchMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Adversarial => SearchMode::Adversarial,
            ModeArg::Optimistic => SearchMode::Optimistic,
        }
    }
}
