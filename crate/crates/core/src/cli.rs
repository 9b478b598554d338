//! The `lights-out` command-line tool.
//!
//! Exit status: 0 on success, 1 for bad input or usage, 2 when an internal
//! invariant fails.

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};
use crate::graph::Configuration;
use crate::graph6::{read_graph6, write_graph6};
use crate::montecarlo::{run_estimate_with, trial_graph, EstimateMode, EstimateRequest};
use crate::oracle::exact_counts;
use crate::output::{
    write_check_csv, write_estimate_csv, write_exact_csv, write_json, CheckRecord, CheckSummary,
    GnRecord, GraphRecord, Payload,
};
use crate::sampler::{compute_gn, GnSource, GraphCountTable, PartitionSelector, COMPUTE_GN_MAX_N};
use crate::selfcheck::run_selfcheck;

/// Overrides the default worker count.
pub const WORKERS_ENV: &str = "LIGHTS_OUT_WORKERS";

#[derive(Parser, Debug)]
#[command(
    name = "lights-out",
    version,
    about = "Lights Out solvability on uniformly random graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Monte Carlo estimate of the solvable (and connected) fraction.
    Estimate(EstimateArgs),
    /// Exact unlabeled counts by property (n <= 8).
    Exact(ExactArgs),
    /// Emit uniformly sampled unlabeled graphs.
    Sample(SampleArgs),
    /// Unlabeled graph counts g_n.
    Gn(GnArgs),
    /// Solvability and connectivity of every graph in a graph6 file.
    Check(CheckArgs),
    /// Press set switching off a configuration, for each graph in a file.
    Solve(SolveArgs),
    /// Run the built-in invariant checks.
    Selfcheck,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GraphFormat {
    Graph6,
    Json,
}

#[derive(Args, Debug)]
struct EstimateArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 1_000_000)]
    trials: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Sample uniformly among connected graphs only.
    #[arg(long)]
    connected: bool,
    #[arg(long)]
    workers: Option<usize>,
    #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
    format: TableFormat,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct ExactArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
    format: TableFormat,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct SampleArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 1)]
    count: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    connected: bool,
    #[arg(long, value_enum, default_value_t = GraphFormat::Graph6)]
    format: GraphFormat,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct GnArgs {
    #[arg(long, conflicts_with = "max")]
    n: Option<usize>,
    #[arg(long)]
    max: Option<usize>,
    /// Enumerate partitions instead of reading the embedded table (n <= 60).
    #[arg(long)]
    compute: bool,
    #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
    format: TableFormat,
}

#[derive(Args, Debug)]
struct CheckArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
    format: TableFormat,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct SolveArgs {
    #[arg(long = "in")]
    input: PathBuf,
    /// Lit vertices, 1-based and comma separated; empty for none.
    #[arg(long, allow_hyphen_values = true)]
    config: String,
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run_cli<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{}", e.render());
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{}", e.render());
                    0
                }
                _ => 1,
            };
        }
    };
    match dispatch(cli.command, stdout, stderr) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            if e.is_domain() {
                1
            } else {
                2
            }
        }
    }
}

fn dispatch(command: Command, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Estimate(a) => estimate(a, stdout, stderr),
        Command::Exact(a) => exact(a, stdout),
        Command::Sample(a) => sample(a, stdout),
        Command::Gn(a) => gn(a, stdout),
        Command::Check(a) => check(a, stdout, stderr),
        Command::Solve(a) => solve(a, stdout),
        Command::Selfcheck => selfcheck(stdout),
    }
}

/// Writes to `--out` when given, else to `stdout`.
fn with_output(
    out: Option<&Path>,
    stdout: &mut dyn Write,
    f: impl FnOnce(&mut dyn Write) -> Result<()>,
) -> Result<()> {
    match out {
        Some(path) => {
            let mut w = BufWriter::new(File::create(path)?);
            f(&mut w)?;
            w.flush()?;
            Ok(())
        }
        None => f(stdout),
    }
}

fn resolve_workers(flag: Option<usize>) -> Result<usize> {
    if let Some(w) = flag {
        return Ok(w);
    }
    if let Ok(v) = std::env::var(WORKERS_ENV) {
        return v
            .trim()
            .parse()
            .map_err(|_| Error::invalid(format!("{WORKERS_ENV}={v:?} is not a worker count")));
    }
    Ok(std::thread::available_parallelism().map_or(1, |n| n.get()))
}

fn selector(n: usize) -> Result<PartitionSelector> {
    if n == 0 {
        return Err(Error::invalid("n must be positive"));
    }
    let gn = GnSource::from_env().get(n)?;
    PartitionSelector::new(n, &gn)
}

fn estimate(a: EstimateArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32> {
    let req = EstimateRequest {
        n: a.n,
        trials: a.trials,
        mode: if a.connected {
            EstimateMode::Connected
        } else {
            EstimateMode::All
        },
        seed: a.seed,
        workers: resolve_workers(a.workers)?,
    };
    let sel = selector(a.n)?;
    let result = run_estimate_with(&req, &sel)?;
    with_output(a.out.as_deref(), stdout, |w| match a.format {
        TableFormat::Csv => write_estimate_csv(w, &result),
        TableFormat::Json => write_json(
            w,
            Payload::Estimate {
                result: &result,
                elapsed_ms: result.elapsed.as_millis(),
            },
        ),
    })?;
    if result.rejected_draws > 0 {
        writeln!(
            stderr,
            "rejected {} disconnected draws",
            result.rejected_draws
        )?;
    }
    Ok(0)
}

fn exact(a: ExactArgs, stdout: &mut dyn Write) -> Result<i32> {
    let rows = vec![exact_counts(a.n)?];
    with_output(a.out.as_deref(), stdout, |w| match a.format {
        TableFormat::Csv => write_exact_csv(w, &rows),
        TableFormat::Json => write_json(w, Payload::Exact { rows: &rows }),
    })?;
    Ok(0)
}

fn sample(a: SampleArgs, stdout: &mut dyn Write) -> Result<i32> {
    let sel = selector(a.n)?;
    let mode = if a.connected {
        EstimateMode::Connected
    } else {
        EstimateMode::All
    };
    let mut graphs = Vec::with_capacity(a.count.min(1 << 20) as usize);
    for index in 0..a.count {
        let (g, _) = trial_graph(&sel, mode, a.seed, index)?;
        graphs.push(GraphRecord {
            index,
            graph6: write_graph6(&g),
            edges: g.edges().map(|(i, j)| [i + 1, j + 1]).collect(),
        });
    }
    with_output(a.out.as_deref(), stdout, |w| match a.format {
        GraphFormat::Graph6 => {
            for g in &graphs {
                writeln!(w, "{}", g.graph6)?;
            }
            Ok(())
        }
        GraphFormat::Json => write_json(
            w,
            Payload::Graphs {
                n: a.n,
                seed: a.seed,
                connected: a.connected,
                graphs,
            },
        ),
    })?;
    Ok(0)
}

fn gn(a: GnArgs, stdout: &mut dyn Write) -> Result<i32> {
    let table = GraphCountTable::embedded();
    let default_max = if a.compute {
        COMPUTE_GN_MAX_N
    } else {
        table.max_n()
    };
    let ns: Vec<usize> = match (a.n, a.max) {
        (Some(n), _) => vec![n],
        (None, m) => (1..=m.unwrap_or(default_max)).collect(),
    };
    let mut values = Vec::with_capacity(ns.len());
    for n in ns {
        let g_n = if a.compute {
            compute_gn(n)?
        } else {
            table.get(n).cloned().ok_or_else(|| {
                if n == 0 {
                    Error::invalid("n must be positive")
                } else {
                    Error::UnsupportedSize {
                        what: "n for g_n lookup",
                        value: n,
                        limit: table.max_n(),
                    }
                }
            })?
        };
        values.push(GnRecord { n, g_n });
    }
    match a.format {
        TableFormat::Json => write_json(
            stdout,
            Payload::Gn {
                computed: a.compute,
                values,
            },
        )?,
        TableFormat::Csv if a.n.is_some() => writeln!(stdout, "{}", values[0].g_n)?,
        TableFormat::Csv => {
            writeln!(stdout, "n,g_n")?;
            for v in &values {
                writeln!(stdout, "{},{}", v.n, v.g_n)?;
            }
        }
    }
    Ok(0)
}

fn read_archive(path: &Path) -> Result<Vec<crate::graph::Graph>> {
    let file = File::open(path)
        .map_err(|e| Error::invalid(format!("cannot open {}: {e}", path.display())))?;
    read_graph6(BufReader::new(file))
}

fn check(a: CheckArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32> {
    let graphs = read_archive(&a.input)?;
    let records: Vec<CheckRecord> = graphs
        .iter()
        .enumerate()
        .map(|(k, g)| CheckRecord {
            line: k + 1,
            n: g.vertex_count(),
            universally_solvable: g.is_universally_solvable(),
            connected: g.is_connected(),
            graph6: write_graph6(g),
        })
        .collect();
    let summary = CheckSummary::from_records(&records);
    with_output(a.out.as_deref(), stdout, |w| match a.format {
        TableFormat::Csv => write_check_csv(w, &records),
        TableFormat::Json => write_json(
            w,
            Payload::Check {
                records: &records,
                summary,
            },
        ),
    })?;
    writeln!(
        stderr,
        "graphs={} solvable={} connected={} connected_solvable={}",
        summary.graphs, summary.solvable, summary.connected, summary.connected_solvable
    )?;
    Ok(0)
}

fn parse_config(text: &str) -> Result<Vec<usize>> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| match s.parse::<usize>() {
            Ok(v) if v >= 1 => Ok(v - 1),
            _ => Err(Error::invalid(format!(
                "{s:?} is not a 1-based vertex label"
            ))),
        })
        .collect()
}

fn solve(a: SolveArgs, stdout: &mut dyn Write) -> Result<i32> {
    let lit = parse_config(&a.config)?;
    for g in read_archive(&a.input)? {
        let config = Configuration::new(g.vertex_count(), lit.iter().copied())?;
        match g.solve_configuration(&config)? {
            Some(presses) => {
                let labels: Vec<String> = presses.iter().map(|v| (v + 1).to_string()).collect();
                writeln!(stdout, "{{{}}}", labels.join(","))?;
            }
            None => writeln!(stdout, "unsolvable")?,
        }
    }
    Ok(0)
}

fn selfcheck(stdout: &mut dyn Write) -> Result<i32> {
    let mut failed = false;
    for c in run_selfcheck() {
        writeln!(
            stdout,
            "{} {}: {}",
            if c.passed { "ok" } else { "FAIL" },
            c.name,
            c.detail
        )?;
        failed |= !c.passed;
    }
    Ok(if failed { 2 } else { 0 })
}
