//! `geohull`: intervals, hulls, hull numbers and prism checks from the
//! command line.

use std::fmt::Write as _;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use geohull::harness::{Harness, TheoremId};
use geohull::{
    all_pairs_distances, convex_hull, hull_number, hull_number_prism, interval_set, read_edge_list,
    write_edge_list, FamilySpec, Graph, ParseError, SearchConfig, SolverError, VertexSet,
};
use thiserror::Error;

#[derive(Debug, Parser)]
#[command(
    name = "geohull",
    version,
    about = "Geodetic hulls and hull numbers of graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the closed interval I[S].
    Interval {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        set: SetArg,
    },
    /// Print each step I^p[S] and the convex hull of S.
    Hull {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        set: SetArg,
    },
    /// Compute the hull number with a lexicographically first witness.
    Hullnum {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        solver: SolverArgs,
    },
    /// Write the complementary prism as an edge list.
    Prism {
        #[command(flatten)]
        input: Input,
    },
    /// Write the graph as an edge list.
    Gen {
        #[command(flatten)]
        input: Input,
    },
    /// Check closed-form prism hull numbers and bounds against the solver.
    Verify {
        /// Only report checks of this id, e.g. T9 or T2.1.
        #[arg(long)]
        theorem: Option<String>,
        /// Inclusive parameter range `a..b` for the families indexed by n.
        #[arg(long)]
        range: Option<String>,
        #[command(flatten)]
        solver: SolverArgs,
    },
}

#[derive(Debug, Args)]
struct Input {
    /// Edge-list file.
    #[arg(conflicts_with = "gen", required_unless_present = "gen")]
    file: Option<PathBuf>,
    /// Family expression such as `prism(cycle:5)` or `tree:8:seed=7`.
    #[arg(long, value_name = "DSL")]
    gen: Option<String>,
    /// Seed for random families that do not name one.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Debug, Args)]
struct SetArg {
    /// Comma-separated vertices.
    #[arg(long, value_name = "S", allow_hyphen_values = true)]
    set: String,
}

#[derive(Debug, Args)]
struct SolverArgs {
    #[arg(long, default_value_t = geohull::solver::DEFAULT_MAX_VERTICES)]
    max_vertices: usize,
    /// Solver threads.
    #[arg(long, default_value_t = 1)]
    workers: usize,
}

impl SolverArgs {
    fn config(&self) -> SearchConfig {
        SearchConfig {
            max_vertices: self.max_vertices,
            parallel_width: self.workers,
            ..SearchConfig::default()
        }
    }
}

#[derive(Debug, Error)]
enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("range error: {0}")]
    Range(String),
    #[error("cap error: {0}")]
    Cap(String),
    #[error("io error: {0}")]
    Io(String),
    #[error("verification failed: {0} failing check(s)")]
    Verification(usize),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Io(_) => 1,
            CliError::Parse(_) => 2,
            CliError::Range(_) => 3,
            CliError::Cap(_) => 4,
            CliError::Verification(_) => 5,
        }
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        if e.is_range_error() {
            CliError::Range(e.to_string())
        } else {
            CliError::Parse(e.to_string())
        }
    }
}

impl From<SolverError> for CliError {
    fn from(e: SolverError) -> Self {
        match e {
            SolverError::TooLarge { .. } => CliError::Cap(e.to_string()),
            SolverError::Config(_) => CliError::Parse(e.to_string()),
            _ => CliError::Range(e.to_string()),
        }
    }
}

/// A graph read from a file or generated from a family expression, with
/// the parsed expression kept for prism-aware solving.
struct Loaded {
    graph: Graph,
    spec: Option<FamilySpec>,
}

fn load(input: &Input) -> Result<Loaded, CliError> {
    if let Some(dsl) = &input.gen {
        let spec = FamilySpec::parse_with_seed(dsl, input.seed)?;
        let graph = spec
            .generate()
            .map_err(|e| CliError::Parse(e.to_string()))?;
        return Ok(Loaded {
            graph,
            spec: Some(spec),
        });
    }
    let path = input.file.as_ref().expect("clap requires a file or --gen");
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    Ok(Loaded {
        graph: read_edge_list(&text)?,
        spec: None,
    })
}

fn parse_set(text: &str, n: usize) -> Result<VertexSet, CliError> {
    let mut set = VertexSet::new(n);
    for token in text.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let v: usize = token
            .parse()
            .map_err(|_| CliError::Parse(format!("set: expected a vertex index: `{token}`")))?;
        if v >= n {
            return Err(CliError::Range(format!(
                "set: vertex `{token}` out of range for graph on {n} vertices"
            )));
        }
        set.insert(v);
    }
    Ok(set)
}

fn parse_range(text: &str) -> Result<RangeInclusive<usize>, CliError> {
    let bad = |token: &str| CliError::Parse(format!("range: expected `a..b`: `{token}`"));
    let (a, b) = text.split_once("..").ok_or_else(|| bad(text))?;
    let a: usize = a.trim().parse().map_err(|_| bad(a))?;
    let b: usize = b.trim().parse().map_err(|_| bad(b))?;
    if a > b {
        return Err(CliError::Range(format!(
            "range: start exceeds end: `{text}`"
        )));
    }
    Ok(a..=b)
}

fn pairs_text(pairs: &[(usize, usize)]) -> String {
    if pairs.is_empty() {
        return "-".to_string();
    }
    pairs
        .iter()
        .map(|(a, b)| format!("{{{a},{b}}}"))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Output text and the number of failing checks.
fn run(command: &Command) -> Result<(String, usize), CliError> {
    let mut out = String::new();
    let mut failures = 0;
    match command {
        Command::Interval { input, set } => {
            let g = load(input)?.graph;
            let s = parse_set(&set.set, g.order())?;
            let dm = all_pairs_distances(&g);
            let _ = writeln!(out, "{}", interval_set(&g, &dm, &s));
        }
        Command::Hull { input, set } => {
            let g = load(input)?.graph;
            let s = parse_set(&set.set, g.order())?;
            let trace = convex_hull(&g, &all_pairs_distances(&g), &s);
            for (p, step) in trace.steps[..=trace.fixpoint_index].iter().enumerate() {
                let _ = writeln!(out, "I^{p} = {step}");
            }
            let _ = writeln!(out, "hull = {}", trace.final_set());
        }
        Command::Hullnum { input, solver } => {
            let loaded = load(input)?;
            let cfg = solver.config();
            let report = match &loaded.spec {
                Some(FamilySpec::Prism(base)) => {
                    let base = base
                        .generate()
                        .map_err(|e| CliError::Parse(e.to_string()))?;
                    hull_number_prism(&base, &cfg)?
                }
                _ => hull_number(&loaded.graph, &cfg)?,
            };
            let _ = writeln!(out, "h = {}", report.hull_number);
            let _ = writeln!(out, "witness = {}", report.witness);
            let _ = writeln!(out, "forced = {}", report.forced);
            let _ = writeln!(out, "pairs = {}", pairs_text(&report.pairs));
            let _ = writeln!(out, "sets_tested = {}", report.sets_tested);
        }
        Command::Prism { input } => {
            out = write_edge_list(&load(input)?.graph.complementary_prism());
        }
        Command::Gen { input } => {
            out = write_edge_list(&load(input)?.graph);
        }
        Command::Verify {
            theorem,
            range,
            solver,
        } => {
            let filter = theorem
                .as_deref()
                .map(|t| t.parse::<TheoremId>())
                .transpose()
                .map_err(|e| CliError::Parse(e.to_string()))?;
            let range = range.as_deref().map(parse_range).transpose()?;
            let report = Harness::new(solver.config()).suite(filter, range);
            out = report.render();
            failures = report.failures().count();
        }
    }
    Ok((out, failures))
}

fn emit(text: &str, path: Option<&PathBuf>) -> Result<(), CliError> {
    match path {
        Some(p) => {
            std::fs::write(p, text).map_err(|e| CliError::Io(format!("{}: {e}", p.display())))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli.command).and_then(|(text, failures)| {
        emit(&text, cli.out.as_ref())?;
        match failures {
            0 => Ok(()),
            n => Err(CliError::Verification(n)),
        }
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("geohull: {e}");
            ExitCode::from(e.code())
        }
    }
}
