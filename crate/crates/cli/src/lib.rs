//! The `cliquelab` command-line harness.

pub mod args;
pub mod commands;
pub mod error;
pub mod report;
pub mod script;
pub mod sweep;

use std::ffi::OsString;
use std::io::Write;

use clap::Parser;

use args::{Cli, Command};
use commands::{
    fixture_text, laplante_cmd, load_graph, oracle, polyclique, reduce, write_or_print, Timer,
};
use error::{CliError, EXIT_NOT_REPRODUCED, EXIT_OK, EXIT_USAGE};
use report::{emit_report, Claim, Report, ReportFormat};

/// Parses `argv` (program name first), runs the command and returns the
/// process exit code.
pub fn cmd_dispatch<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(argv, &mut stdout.lock(), &mut stderr.lock())
}

/// [`cmd_dispatch`] with explicit output streams.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                EXIT_USAGE
            } else {
                let _ = write!(out, "{}", e.render());
                EXIT_OK
            };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "cliquelab: {e}");
            e.exit_code()
        }
    }
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    let mut timer = Timer::new(cli.timings);
    let seed = cli.seed;
    let (mut report, code) = match &cli.command {
        Command::Fixture {
            name,
            format,
            highlight,
        } => {
            let text = fixture_text(name, *format, *highlight)?;
            write_or_print(&cli.out, &text, out)?;
            return Ok(EXIT_OK);
        }
        Command::Oracle { graph, maximal } => {
            let input = load_graph(graph, seed)?;
            (oracle(&input, *maximal, &mut timer), EXIT_OK)
        }
        Command::Polyclique(cmd) => polyclique(cmd, seed, &mut timer)?,
        Command::Laplante(cmd) => laplante_cmd(cmd, seed, &mut timer)?,
        Command::Reduce(cmd) => reduce(cmd, seed, &mut timer)?,
        Command::Sweep {
            kmin,
            kmax,
            mode,
            caps,
        } => {
            let mode = (*mode).into();
            let rows = sweep::sweep_family(*kmin, *kmax, mode, caps.node_cap, seed, &mut timer)?;
            let mut r = Report::new("sweep", seed);
            let summary = sweep::summarize(&rows);
            let mut code = EXIT_OK;
            if mode == cliquelab_core::SearchMode::Adversarial {
                let reproduced = summary.disagreements == summary.rows;
                r.claim = Some(Claim {
                    statement: format!(
                        "Poly-Clique has a failing trace on the family for every k in {kmin}..={kmax}"
                    ),
                    reproduced,
                });
                if !reproduced {
                    code = EXIT_NOT_REPRODUCED;
                }
            }
            r.summary = Some(summary);
            r.rows = rows;
            (r, code)
        }
    };
    timer.attach(&mut report);
    let format = if cli.json {
        ReportFormat::Json
    } else {
        ReportFormat::Text
    };
    write_or_print(&cli.out, &emit_report(&report, format), out)?;
    Ok(code)
}
