//! Command-line front end: `color`, `gen`, `verify`, `bench`.
//!
//! Diagnostics go to stderr, data to stdout or files. Exit codes: 0 on
//! success, 1 on operational failure, 2 on usage errors.

use anyhow::{anyhow, Context, Result};
use clap::{Args, Parser, Subcommand};
use dblac::algo::AlgorithmId;
use dblac::bench::{
    aggregate, emit_plots, parse_manifest, run_suite_with_progress, write_records_csv,
    write_summary_csv, BenchConfig, SummaryRow,
};
use dblac::colorfile::{parse_coloring, write_coloring};
use dblac::dimacs::{parse_dimacs, write_dimacs, ParsedCol};
use dblac::gen::gen_erdos_renyi;
use dblac::graph::Graph;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser)]
#[command(name = "dblac", version, about = "Vertex coloring with DBLAC, LDF, DSATUR and RLF")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Color a DIMACS .col graph and emit the coloring
    Color(ColorArgs),
    /// Generate a seeded Erdős–Rényi graph as DIMACS .col
    Gen(GenArgs),
    /// Check a coloring file against a graph
    Verify(VerifyArgs),
    /// Run the benchmark harness over a manifest of instances
    Bench(BenchArgs),
}

#[derive(Args)]
struct ColorArgs {
    /// Algorithm: dblac, ldf, dsatur or rlf
    #[arg(long, value_parser = parse_algo)]
    algo: AlgorithmId,
    /// Input graph (DIMACS .col)
    #[arg(long)]
    input: PathBuf,
    /// Coloring output path (default: stdout)
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct GenArgs {
    /// Vertex count (>= 1)
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    n: u64,
    /// Edge probability in [0, 1]
    #[arg(long, value_parser = parse_probability)]
    p: f64,
    /// Generator seed
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output path (default: stdout)
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Graph file (DIMACS .col)
    #[arg(long)]
    graph: PathBuf,
    /// Coloring file (`s`/`v` lines)
    #[arg(long)]
    coloring: PathBuf,
}

#[derive(Args)]
struct BenchArgs {
    /// Manifest: one `file <path>` or `er <n> <p> <seed>` per line
    #[arg(long)]
    manifest: PathBuf,
    /// Comma-separated algorithms to run
    #[arg(long, value_delimiter = ',', value_parser = parse_algo,
          default_value = "dblac,dsatur,rlf")]
    algos: Vec<AlgorithmId>,
    /// Timed repetitions per (instance, algorithm)
    #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u64).range(1..))]
    reps: u64,
    /// Untimed warmup runs
    #[arg(long, default_value_t = 1)]
    warmup: u64,
    /// Worker threads (1 = serial, for clean timing)
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    jobs: u64,
    /// Write the summary CSV here
    #[arg(long)]
    csv: Option<PathBuf>,
    /// Write the raw per-repetition CSV here
    #[arg(long)]
    records_csv: Option<PathBuf>,
    /// Emit colors.svg and runtime.svg into this directory
    #[arg(long)]
    plots: Option<PathBuf>,
    /// Keep going when an instance fails; exit 1 at the end
    #[arg(long)]
    continue_on_error: bool,
}

fn parse_algo(s: &str) -> Result<AlgorithmId, String> {
    s.parse().map_err(|e: dblac::algo::UnknownAlgorithm| e.to_string())
}

fn parse_probability(s: &str) -> Result<f64, String> {
    let p: f64 = s.parse().map_err(|_| format!("`{s}` is not a number"))?;
    if (0.0..=1.0).contains(&p) {
        Ok(p)
    } else {
        Err(format!("probability {p} outside [0, 1]"))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Color(args) => cmd_color(args),
        Command::Gen(args) => cmd_gen(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Bench(args) => cmd_bench(args),
    };
    match result {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(1)
        }
    }
}

fn load_graph(path: &Path) -> Result<Graph> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))?;
    let ParsedCol { graph, warnings } =
        parse_dimacs(&text).with_context(|| format!("parsing {}", path.display()))?;
    for w in warnings {
        eprintln!("warning: {}: {}", path.display(), w);
    }
    Ok(graph)
}

fn write_or_stdout(path: Option<&Path>, content: &str) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, content).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn cmd_color(args: ColorArgs) -> Result<ExitCode> {
    let g = load_graph(&args.input)?;
    let start = Instant::now();
    let coloring = dblac::run_algorithm(args.algo, &g);
    let seconds = start.elapsed().as_secs_f64();
    let instance = args
        .input
        .file_name()
        .map(|f| f.to_string_lossy().into_owned())
        .unwrap_or_else(|| args.input.display().to_string());
    eprintln!(
        "{instance} {} colors={} time={seconds:.6}",
        args.algo, coloring.k
    );
    write_or_stdout(args.output.as_deref(), &write_coloring(&coloring))?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_gen(args: GenArgs) -> Result<ExitCode> {
    let g = gen_erdos_renyi(args.n as usize, args.p, args.seed)?;
    eprintln!("n={} m={}", g.n(), g.m());
    write_or_stdout(args.output.as_deref(), &write_dimacs(&g))?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode> {
    let g = load_graph(&args.graph)?;
    let text = std::fs::read_to_string(&args.coloring)
        .with_context(|| format!("reading {}", args.coloring.display()))?;
    let (declared_k, assignment) = parse_coloring(&text, g.n())
        .with_context(|| format!("parsing {}", args.coloring.display()))?;
    let distinct = {
        let mut cols = assignment.clone();
        cols.sort_unstable();
        cols.dedup();
        cols.len()
    };
    if declared_k != distinct {
        eprintln!("warning: file declares {declared_k} colors but uses {distinct}");
    }
    match g.violating_edge(&assignment)? {
        None => {
            println!("PROPER k={distinct}");
            Ok(ExitCode::SUCCESS)
        }
        Some((u, v)) => {
            println!("IMPROPER edge {} {}", u + 1, v + 1);
            Ok(ExitCode::from(1))
        }
    }
}

fn cmd_bench(args: BenchArgs) -> Result<ExitCode> {
    let manifest_text = std::fs::read_to_string(&args.manifest)
        .with_context(|| format!("reading {}", args.manifest.display()))?;
    let instances = parse_manifest(&manifest_text)?;
    if instances.is_empty() {
        return Err(anyhow!("manifest lists no instances"));
    }
    let cfg = BenchConfig {
        instances,
        algorithms: args.algos.clone(),
        repetitions: args.reps as usize,
        warmup: args.warmup as usize,
        jobs: args.jobs as usize,
        continue_on_error: args.continue_on_error,
    };
    let outcome = run_suite_with_progress(&cfg, |name, algo| {
        eprintln!("running {name} / {algo}");
    })?;
    let rows = aggregate(&outcome.records)?;

    print_table(&rows, &args.algos);
    if let Some(path) = &args.csv {
        std::fs::write(path, write_summary_csv(&rows))
            .with_context(|| format!("writing {}", path.display()))?;
    }
    if let Some(path) = &args.records_csv {
        std::fs::write(path, write_records_csv(&outcome.records))
            .with_context(|| format!("writing {}", path.display()))?;
    }
    if let Some(dir) = &args.plots {
        std::fs::create_dir_all(dir)
            .with_context(|| format!("creating {}", dir.display()))?;
        let paths = emit_plots(&rows, dir)?;
        eprintln!("wrote {} and {}", paths[0].display(), paths[1].display());
    }
    if outcome.failed_cells > 0 {
        eprintln!("error: {} benchmark cell(s) failed", outcome.failed_cells);
        return Ok(ExitCode::from(1));
    }
    Ok(ExitCode::SUCCESS)
}

/// Aligned per-instance table: one colors and one runtime column per
/// algorithm.
fn print_table(rows: &[SummaryRow], algos: &[AlgorithmId]) {
    let mut instances: Vec<&str> = Vec::new();
    for r in rows {
        if !instances.contains(&r.instance.as_str()) {
            instances.push(&r.instance);
        }
    }
    let name_width = instances
        .iter()
        .map(|i| i.len())
        .chain(["instance".len()])
        .max()
        .unwrap();

    print!("{:<name_width$}", "instance");
    for a in algos {
        print!("  {:>10} {:>12}", format!("{a}"), "runtime_s");
    }
    println!();
    for instance in instances {
        print!("{instance:<name_width$}");
        for a in algos {
            match rows
                .iter()
                .find(|r| r.instance == instance && r.algorithm == *a)
            {
                Some(r) => print!("  {:>10} {:>12.6}", r.mean_colors, r.mean_runtime_s),
                None => print!("  {:>10} {:>12}", "-", "-"),
            }
        }
        println!();
    }
}
