//! `chromavuln`: removal parameters, closed formulas, theorem sweeps, graph
//! generation and extremal scans from the command line.
//!
//! Every invocation prints one JSON document on stdout with sorted keys:
//! `{command, status, payload | error, version}`. Diagnostics and progress go
//! to stderr. Exit codes: 0 ok, 2 parse error, 3 domain error, 4 cap
//! exceeded, 5 verification disagreement.

mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use chromavuln::closed_forms::{
    dispatch, formula_value, verify, verify_with, Family, FormulaQuery, Sweep,
};
use chromavuln::extremal::{extremal_scan, ScanQuery};
use chromavuln::io::{emit_edge_list, emit_graph6, parse_edge_list, parse_graph6};
use chromavuln::turan::turan;
use chromavuln::{Error, Graph, Limits, ParameterKind};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "chromavuln",
    version,
    about = "Chromatic vulnerability parameters of small graphs"
)]
struct Cli {
    /// Print a human-readable table instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,

    /// Vertex cap for the exact solvers.
    #[arg(long, global = true, env = "CHROMAVULN_MAX_N")]
    max_n: Option<usize>,

    /// Edge cap for the exact edge-coloring solvers.
    #[arg(long, global = true, env = "CHROMAVULN_MAX_M")]
    max_m: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Serialize)]
#[serde(tag = "name", rename_all = "kebab-case")]
enum Command {
    /// Compute a parameter for one graph.
    Compute(ComputeArgs),
    /// Evaluate a closed formula.
    Formula(FormulaArgs),
    /// Check the closed formulas against the exact solvers.
    Verify(VerifyArgs),
    /// Generate a family graph.
    Gen(GenArgs),
    /// Minimum and maximum of a parameter over all graphs of given order and size.
    Extremal(ExtremalArgs),
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum GenFamily {
    Path,
    Cycle,
    Complete,
    Turan,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum Format {
    EdgeList,
    Graph6,
}

#[derive(Args, Serialize)]
struct ComputeArgs {
    #[arg(long)]
    kind: ParameterKind,
    #[arg(short)]
    k: usize,
    /// Vertices removed first (mixed kinds only).
    #[arg(short, default_value_t = 0)]
    j: usize,
    /// Edge-list (`.el`) or graph6 (`.g6`) file.
    #[arg(long, conflicts_with = "family")]
    graph: Option<PathBuf>,
    /// Generate the input instead of reading a file.
    #[arg(long, requires = "order")]
    family: Option<GenFamily>,
    #[arg(short = 'n', long = "order")]
    order: Option<usize>,
    /// Part count for `--family turan`.
    #[arg(long)]
    parts: Option<usize>,
    /// Always run the exact solver.
    #[arg(long)]
    exact: bool,
}

#[derive(Args, Serialize)]
struct FormulaArgs {
    #[arg(long)]
    family: Family,
    #[arg(short = 'n', long = "order")]
    order: u64,
    #[arg(long)]
    kind: ParameterKind,
    #[arg(short)]
    k: u64,
    #[arg(short, default_value_t = 0)]
    j: u64,
}

#[derive(Args, Serialize)]
struct VerifyArgs {
    #[arg(long, value_delimiter = ',', default_value = "path,cycle,complete")]
    families: Vec<Family>,
    #[arg(long)]
    n_max: usize,
    /// Restrict the sweep to these kinds.
    #[arg(long, value_delimiter = ',')]
    kinds: Vec<ParameterKind>,
    /// Add 1 to every formula value; checks that the sweep reports failures.
    #[arg(long, hide = true)]
    inject_fault: bool,
}

#[derive(Args, Serialize)]
struct GenArgs {
    #[arg(long)]
    family: GenFamily,
    #[arg(short = 'n', long = "order")]
    order: usize,
    /// Part count for `--family turan`.
    #[arg(short, long = "parts")]
    k: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::EdgeList)]
    format: Format,
    /// Print only the encoded graph.
    #[arg(long)]
    raw: bool,
}

#[derive(Args, Serialize)]
struct ExtremalArgs {
    #[arg(short = 'n', long = "order")]
    order: usize,
    #[arg(short = 'm', long = "size")]
    size: usize,
    #[arg(long)]
    kind: ParameterKind,
    #[arg(short)]
    k: usize,
    #[arg(short, default_value_t = 0)]
    j: usize,
    /// Scan every labeled graph instead of one per isomorphism class.
    #[arg(long)]
    labeled: bool,
    /// Worker threads; defaults to the available parallelism.
    #[arg(long, env = "CHROMAVULN_JOBS")]
    jobs: Option<usize>,
    /// Report the running graph count on stderr.
    #[arg(long)]
    progress: bool,
}

struct Outcome {
    payload: Value,
    /// Printed instead of the JSON document when set.
    raw: Option<String>,
    exit: u8,
}

impl Outcome {
    fn ok(payload: Value) -> Self {
        Outcome {
            payload,
            raw: None,
            exit: 0,
        }
    }
}

fn build(family: GenFamily, n: usize, parts: Option<usize>) -> Result<(Graph, Value)> {
    let built = match family {
        GenFamily::Path => (chromavuln::path_graph(n)?, Value::Null),
        GenFamily::Cycle => (chromavuln::cycle_graph(n)?, Value::Null),
        GenFamily::Complete => (chromavuln::complete_graph(n)?, Value::Null),
        GenFamily::Turan => {
            let k =
                parts.ok_or_else(|| Error::InvalidArgument("turan needs a part count".into()))?;
            let (spec, g) = turan(n, k)?;
            (g, serde_json::to_value(spec)?)
        }
    };
    Ok(built)
}

fn read_graph(path: &PathBuf) -> Result<Graph> {
    let bytes = std::fs::read(path).with_context(|| format!("cannot read {}", path.display()))?;
    let g = match path.extension().and_then(|e| e.to_str()) {
        Some("el") => parse_edge_list(&bytes),
        Some("g6") => parse_graph6(&bytes),
        _ => bail!("{}: expected a .el or .g6 file", path.display()),
    };
    Ok(g.map_err(Error::from)?)
}

fn compute(a: &ComputeArgs, limits: &Limits) -> Result<Outcome> {
    let g = match (&a.graph, a.family, a.order) {
        (Some(path), _, _) => read_graph(path)?,
        (None, Some(family), Some(n)) => build(family, n, a.parts)?.0,
        _ => return Err(Error::InvalidArgument("give --graph or --family with -n".into()).into()),
    };
    let d = dispatch(&g, a.kind, a.k, a.j, limits, a.exact)?;
    Ok(Outcome::ok(json!({
        "value": d.value,
        "source": d.source,
        "certificate": d.certificate,
        "order": g.order(),
        "size": g.size(),
    })))
}

fn formula(a: &FormulaArgs) -> Result<Outcome> {
    let q = FormulaQuery {
        family: a.family,
        n: a.order,
        kind: a.kind,
        k: a.k,
        j: a.j,
    };
    Ok(Outcome::ok(json!({ "value": formula_value(&q)? })))
}

fn run_verify(a: &VerifyArgs, limits: &Limits) -> Result<Outcome> {
    let mut sweep = Sweep::up_to(&a.families, a.n_max);
    if !a.kinds.is_empty() {
        sweep.kinds = a.kinds.clone();
    }
    let report = if a.inject_fault {
        verify_with(&sweep, limits, |q| formula_value(q).map(|v| v + 1))?
    } else {
        verify(&sweep, limits)?
    };
    let exit = if report.is_clean() { 0 } else { 5 };
    if exit != 0 {
        eprintln!("{} disagreement(s)", report.disagreements.len());
    }
    Ok(Outcome {
        payload: serde_json::to_value(report)?,
        raw: None,
        exit,
    })
}

fn gen(a: &GenArgs) -> Result<Outcome> {
    let (g, turan) = build(a.family, a.order, a.k)?;
    let text = match a.format {
        Format::EdgeList => emit_edge_list(&g),
        Format::Graph6 => emit_graph6(&g).map_err(Error::from)? + "\n",
    };
    let payload = json!({
        "order": g.order(),
        "size": g.size(),
        "edges": g.edges(),
        "format": a.format,
        "encoded": text,
        "turan": turan,
    });
    Ok(Outcome {
        payload,
        raw: a.raw.then_some(text),
        exit: 0,
    })
}

fn extremal(a: &ExtremalArgs, limits: &Limits) -> Result<Outcome> {
    let q = ScanQuery {
        n: a.order,
        m: a.size,
        kind: a.kind,
        k: a.k,
        j: a.j,
        dedup: !a.labeled,
    };
    let jobs = a
        .jobs
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    let progress = a.progress;
    let report = extremal_scan(&q, jobs, limits, |seen| {
        if progress {
            eprintln!("examined {seen}");
        }
    })?;
    Ok(Outcome::ok(serde_json::to_value(report)?))
}

fn status(err: &anyhow::Error) -> (&'static str, u8) {
    match err.downcast_ref::<Error>() {
        Some(Error::Parse(_)) => ("parse-error", 2),
        Some(Error::CapExceeded { .. }) => ("cap-exceeded", 4),
        Some(_) => ("domain-error", 3),
        // unreadable or unrecognized input files
        None => ("parse-error", 2),
    }
}

fn run(cli: &Cli) -> Result<Outcome> {
    let defaults = Limits::DEFAULT;
    let limits = Limits::new(
        cli.max_n.unwrap_or(defaults.max_order),
        cli.max_m.unwrap_or(defaults.max_size),
    )?;
    match &cli.command {
        Command::Compute(a) => compute(a, &limits),
        Command::Formula(a) => formula(a),
        Command::Verify(a) => run_verify(a, &limits),
        Command::Gen(a) => gen(a),
        Command::Extremal(a) => extremal(a, &limits),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut doc = json!({
        "command": cli.command,
        "version": env!("CARGO_PKG_VERSION"),
    });
    let exit = match run(&cli) {
        Ok(Outcome {
            raw: Some(text), ..
        }) => {
            print!("{text}");
            return ExitCode::SUCCESS;
        }
        Ok(outcome) => {
            doc["status"] = json!("ok");
            doc["payload"] = outcome.payload;
            outcome.exit
        }
        Err(err) => {
            let (name, code) = status(&err);
            eprintln!("error: {err:#}");
            doc["status"] = json!(name);
            doc["error"] = json!(format!("{err:#}"));
            code
        }
    };
    if cli.pretty {
        print!("{}", output::table(&doc));
    } else {
        println!("{doc}");
    }
    ExitCode::from(exit)
}
