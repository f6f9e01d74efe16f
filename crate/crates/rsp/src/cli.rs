//! Command-line front end. [`run`] holds all behavior so it can be driven from
//! tests without spawning a process.

use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rsp_core::oracle::{compare_all, validate_path, Mismatch};
use rsp_core::{FailedElement, Graph, Mode, ReplacementPaths, SolveError};
use thiserror::Error;

use crate::bench;
use crate::corpus::{corpus, path_with_chords, CorpusParams};
use crate::format::{parse_graph, InputFormat, ParseError, Parsed};
use crate::output::{render_json, render_tsv, rows, OutputFormat};

#[derive(Debug, Parser)]
#[command(
    name = "rsp",
    version,
    about = "Replacement shortest paths for edge and vertex failures"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Replacement distances for every edge of the shortest s-t path.
    Edges(SolveArgs),
    /// Replacement distances for every internal vertex of the shortest s-t path.
    Nodes(SolveArgs),
    /// Edge reports followed by vertex reports.
    All(SolveArgs),
    /// Compare against the brute-force oracle on a file or a random corpus.
    Check(CheckArgs),
    /// Time the fast algorithm and report its work counters.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Graph file.
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, value_enum, default_value_t = InputFormat::Dimacs)]
    pub format: InputFormat,
    /// Source vertex, in the file's id base.
    #[arg(long)]
    pub source: Option<usize>,
    /// Target vertex, in the file's id base.
    #[arg(long)]
    pub target: Option<usize>,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, value_enum, default_value_t = OutputFormat::Tsv)]
    pub output: OutputFormat,
    /// Include the replacement path of each element.
    #[arg(long)]
    pub paths: bool,
}

#[derive(Debug, Args)]
pub struct CorpusArgs {
    /// Seed for the random corpus. The `RSP_SEED` environment variable
    /// overrides it.
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    #[arg(long, default_value_t = 5)]
    pub n_min: usize,
    #[arg(long, default_value_t = 60)]
    pub n_max: usize,
    #[arg(long, default_value_t = 1)]
    pub w_min: u32,
    #[arg(long, default_value_t = 100)]
    pub w_max: u32,
}

impl CorpusArgs {
    fn seed(&self) -> Result<u64, RunError> {
        match std::env::var("RSP_SEED") {
            Ok(v) => v
                .trim()
                .parse()
                .map_err(|_| RunError::Config(format!("RSP_SEED={v} is not an unsigned integer"))),
            Err(std::env::VarError::NotPresent) => Ok(self.seed),
            Err(e) => Err(RunError::Config(format!("RSP_SEED: {e}"))),
        }
    }

    fn params(&self, count: usize) -> Result<CorpusParams, RunError> {
        if self.n_min < 2 || self.n_min > self.n_max {
            return Err(RunError::Config(format!(
                "vertex range {}..={} needs 2 <= n-min <= n-max",
                self.n_min, self.n_max
            )));
        }
        if self.w_min == 0 || self.w_min > self.w_max {
            return Err(RunError::Config(format!(
                "weight range {}..={} needs 1 <= w-min <= w-max",
                self.w_min, self.w_max
            )));
        }
        Ok(CorpusParams {
            count,
            vertices: self.n_min..=self.n_max,
            weights: self.w_min..=self.w_max,
            seed: self.seed()?,
        })
    }
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    /// Graph file to check. Mutually exclusive with `--random`.
    #[arg(long, conflicts_with = "random")]
    pub input: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = InputFormat::Dimacs)]
    pub format: InputFormat,
    #[arg(long)]
    pub source: Option<usize>,
    #[arg(long)]
    pub target: Option<usize>,
    /// Number of random instances to check.
    #[arg(long)]
    pub random: Option<usize>,
    #[command(flatten)]
    pub corpus: CorpusArgs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    /// Long backbone path with pendants and chords, `n = 2^k`.
    PathChords,
    /// Random connected graphs from the check corpus.
    Random,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, value_enum, default_value_t = Family::PathChords)]
    pub family: Family,
    #[arg(long, default_value_t = 8)]
    pub k_min: u32,
    #[arg(long, default_value_t = 14)]
    pub k_max: u32,
    /// Number of graphs for the random family.
    #[arg(long, default_value_t = 20)]
    pub count: usize,
    /// Skip the brute-force timing above this many vertices.
    #[arg(long, default_value_t = 2048)]
    pub brute_max_n: usize,
    #[command(flatten)]
    pub corpus: CorpusArgs,
}

#[derive(Debug, Error)]
pub enum RunError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("cannot read {}: {source}", path.display())]
    Read { path: PathBuf, source: io::Error },
    #[error("invalid arguments: {0}")]
    Config(String),
    #[error("target {target} is not reachable from source {from}")]
    Unreachable { from: usize, target: usize },
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error("write failed: {0}")]
    Output(#[from] io::Error),
}

impl RunError {
    pub fn exit_code(&self) -> i32 {
        match self {
            RunError::Parse(_) | RunError::Read { .. } | RunError::Config(_) => 2,
            RunError::Unreachable { .. } => 3,
            RunError::Invariant(_) => 4,
            RunError::Output(_) => 5,
        }
    }
}

/// Runs one command, writing results to `out` and diagnostics to `err`.
/// Returns the process exit code.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match cli.command {
        Command::Edges(a) => solve(&a, Mode::Edges, out, err),
        Command::Nodes(a) => solve(&a, Mode::Nodes, out, err),
        Command::All(a) => solve(&a, Mode::All, out, err),
        Command::Check(a) => check(&a, out, err),
        Command::Bench(a) => run_bench(&a, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn load(input: &InputArgs, err: &mut dyn Write) -> Result<Parsed, RunError> {
    load_file(&input.input, input.format, input.source, input.target, err)
}

fn load_file(
    path: &PathBuf,
    format: InputFormat,
    source: Option<usize>,
    target: Option<usize>,
    err: &mut dyn Write,
) -> Result<Parsed, RunError> {
    let text = std::fs::read_to_string(path).map_err(|source| RunError::Read {
        path: path.clone(),
        source,
    })?;
    let parsed = parse_graph(&text, format, source, target)?;
    if parsed.dropped_self_loops > 0 {
        writeln!(
            err,
            "warning: dropped {} self-loop edge(s)",
            parsed.dropped_self_loops
        )?;
    }
    Ok(parsed)
}

/// Reports unreachable terminals in the ids the user supplied.
fn unreachable(id_base: usize) -> impl Fn(SolveError) -> RunError {
    move |e| match e {
        SolveError::TargetUnreachable { source, target } => RunError::Unreachable {
            from: source + id_base,
            target: target + id_base,
        },
    }
}

fn solve(
    args: &SolveArgs,
    mode: Mode,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, RunError> {
    let parsed = load(&args.input, err)?;
    let g = &parsed.graph;
    let solution = ReplacementPaths::compute(g, mode).map_err(unreachable(parsed.id_base))?;
    let base_distance = solution.source_tree().dist(g.target());

    for report in solution.reports() {
        let distance = report.distance();
        if distance.is_some_and(|d| d < base_distance) {
            return Err(RunError::Invariant(format!(
                "{} is shorter than the unfailed distance",
                describe(report.element, parsed.id_base)
            )));
        }
        if args.paths {
            let path = solution.path(report);
            validate_path(g, report.element, distance, path.as_deref()).map_err(|defect| {
                RunError::Invariant(format!(
                    "{}: {defect:?}",
                    describe(report.element, parsed.id_base)
                ))
            })?;
        }
    }

    let table = rows(&solution, solution.reports(), parsed.id_base, args.paths);
    let text = match args.output {
        OutputFormat::Tsv => render_tsv(&table, args.paths),
        OutputFormat::Json => render_json(&table),
    };
    out.write_all(text.as_bytes())?;
    Ok(0)
}

fn describe(element: FailedElement, id_base: usize) -> String {
    match element {
        FailedElement::Edge { index, .. } => format!("edge e_{index}"),
        FailedElement::Vertex { index, vertex } => {
            format!("vertex v_{index} (id {})", vertex + id_base)
        }
    }
}

fn report_mismatch(
    out: &mut dyn Write,
    instance: usize,
    m: &Mismatch,
    id_base: usize,
) -> io::Result<()> {
    let show = |d: Option<f64>| d.map_or_else(|| "INF".to_string(), |d| d.to_string());
    write!(
        out,
        "mismatch\tinstance {instance}\t{}\tfast {}\toracle {}",
        describe(m.element, id_base),
        show(m.fast),
        show(m.oracle)
    )?;
    match &m.defect {
        Some(d) => writeln!(out, "\t{d:?}"),
        None => writeln!(out),
    }
}

fn check(args: &CheckArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, RunError> {
    let (graphs, id_base) = match (&args.input, args.random) {
        (Some(path), _) => {
            let parsed = load_file(path, args.format, args.source, args.target, err)?;
            (vec![parsed.graph], parsed.id_base)
        }
        (None, Some(count)) => (corpus(&args.corpus.params(count)?), 0),
        (None, None) => {
            return Err(RunError::Config("check needs --input or --random".into()));
        }
    };

    let (mut edges, mut nodes, mut forest, mut mismatches) = (0, 0, 0, 0);
    for (k, g) in graphs.iter().enumerate() {
        let cmp = compare_all(g).map_err(unreachable(id_base))?;
        edges += cmp.edge_checks;
        nodes += cmp.node_checks;
        forest += cmp.forest_wins;
        mismatches += cmp.mismatches.len();
        for m in &cmp.mismatches {
            report_mismatch(out, k, m, id_base)?;
        }
    }
    writeln!(out, "instances\t{}", graphs.len())?;
    writeln!(out, "edge_checks\t{edges}")?;
    writeln!(out, "node_checks\t{nodes}")?;
    writeln!(out, "forest_wins\t{forest}")?;
    writeln!(out, "{mismatches} mismatches")?;
    Ok(if mismatches == 0 { 0 } else { 1 })
}

fn run_bench(args: &BenchArgs, out: &mut dyn Write) -> Result<i32, RunError> {
    let graphs: Vec<Graph> = match args.family {
        Family::PathChords => {
            if args.k_min < 2 || args.k_min > args.k_max || args.k_max > 24 {
                return Err(RunError::Config(format!(
                    "k range {}..={} needs 2 <= k-min <= k-max <= 24",
                    args.k_min, args.k_max
                )));
            }
            let seed = args.corpus.seed()?;
            (args.k_min..=args.k_max)
                .map(|k| path_with_chords(k, seed))
                .collect()
        }
        Family::Random => corpus(&args.corpus.params(args.count)?),
    };
    let mut table = Vec::with_capacity(graphs.len());
    for g in &graphs {
        let row =
            bench::measure(g, g.vertex_count() <= args.brute_max_n).map_err(unreachable(0))?;
        table.push(row);
    }
    out.write_all(bench::render(&table).as_bytes())?;
    Ok(0)
}
