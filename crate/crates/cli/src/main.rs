//! `hrank`: exact H-rank analysis of mixed graphs from the command line.

mod input;
mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hrank::algebra::{adjacency_matrix, char_poly, hermitian_matrix};
use hrank::classify::{classify, classify_oriented};
use hrank::verify::{
    basic_subgraph_coefficients, count_maximum_matchings, elementary_subgraph_coefficients,
    simple_cycles, sweep, verify_graph, OrientationCode, SweepConfig, SweepMode, ORACLE_N_MAX,
};
use serde_json::json;

use input::{load, InputError, Loaded};

#[derive(Parser)]
#[command(
    name = "hrank",
    version,
    about = "Exact H-rank analysis of mixed graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print rk, r, d, m, ω, cycles, rk - r and the bound status.
    Analyze(GraphArgs),
    /// Also print the clause-by-clause optimality breakdown and verdicts.
    Classify(GraphArgs),
    /// Run the lemma checks on each input graph.
    Verify(VerifyArgs),
    /// Run the checks over enumerated or sampled mixed graphs.
    Sweep(SweepArgs),
    /// Compare characteristic polynomials with brute-force subgraph sums and
    /// count cycles and maximum matchings.
    Oracle(GraphArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Exhaustive,
    Sampled,
}

#[derive(Args)]
struct GraphArgs {
    /// Mixed-graph files (`MG <n>` header) or graph6 lists.
    #[arg(required = true)]
    inputs: Vec<PathBuf>,
    /// Base-3 orientation code applied to graph6 input; without it every
    /// orientation is enumerated.
    #[arg(long)]
    orientation: Option<String>,
    /// Refuse to enumerate orientations of graphs with more edges.
    #[arg(long, default_value_t = 20)]
    cap_edges: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    graphs: GraphArgs,
    /// Check characteristic-polynomial coefficients up to this order.
    #[arg(long, default_value_t = 8)]
    coefficient_max_n: usize,
}

#[derive(Args)]
struct SweepArgs {
    /// Largest order (exhaustive) or the order of every sample (sampled).
    #[arg(long)]
    n: usize,
    /// Defaults to exhaustive for n <= 4 and sampled otherwise.
    #[arg(long, value_enum)]
    mode: Option<Mode>,
    #[arg(long, default_value_t = 10_000)]
    samples: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 20)]
    cap_edges: usize,
    /// Probability that a vertex pair is joined in sampled mode.
    #[arg(long, default_value_t = 0.75)]
    edge_probability: f64,
    #[arg(long, default_value_t = 4)]
    coefficient_max_n: usize,
    #[arg(long, default_value_t = 1)]
    threads: usize,
    #[arg(long, default_value_t = 50)]
    max_failures: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Also write the structured report to this file.
    #[arg(long)]
    report: Option<PathBuf>,
}

enum Failure {
    Input(InputError),
    Check,
}

impl From<InputError> for Failure {
    fn from(e: InputError) -> Self {
        Failure::Input(e)
    }
}

fn load_all(args: &GraphArgs) -> Result<Vec<Loaded>, InputError> {
    let code = args
        .orientation
        .as_deref()
        .map(|s| s.parse::<OrientationCode>())
        .transpose()
        .map_err(|e| InputError(format!("--orientation: {e}")))?;
    let mut all = Vec::new();
    for path in &args.inputs {
        all.extend(load(path, code.as_ref(), args.cap_edges)?);
    }
    Ok(all)
}

fn strings<T: std::fmt::Display>(v: &[T]) -> Vec<String> {
    v.iter().map(|c| c.to_string()).collect()
}

fn emit(out: &mut impl Write, text: &str) {
    out.write_all(text.as_bytes()).expect("stdout is writable");
}

fn analyze(args: &GraphArgs, detail: bool) -> Result<(), Failure> {
    let graphs = load_all(args)?;
    let mut out = std::io::stdout().lock();
    let mut consistent = true;
    for (i, Loaded { label, graph }) in graphs.iter().enumerate() {
        let r = classify(graph);
        consistent &= r.bound_ok
            && r.upper_by_rank == r.upper_by_conditions
            && r.lower_by_rank == r.lower_by_conditions;
        let oriented = if detail && graph.is_oriented() {
            classify_oriented(graph).ok()
        } else {
            None
        };
        match args.format {
            Format::Text => {
                if i > 0 {
                    emit(&mut out, "\n");
                }
                emit(
                    &mut out,
                    &report::analysis_text(label, &r, detail, oriented.as_ref()),
                );
            }
            Format::Structured => {
                let v = report::analysis_json(label, &r, detail, oriented.as_ref());
                emit(&mut out, &format!("{v}\n"));
            }
        }
    }
    if consistent {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn verify(args: &VerifyArgs) -> Result<(), Failure> {
    let graphs = load_all(&args.graphs)?;
    let mut out = std::io::stdout().lock();
    let mut all_passed = true;
    for (i, Loaded { label, graph }) in graphs.iter().enumerate() {
        let r = verify_graph(graph, args.coefficient_max_n)
            .map_err(|e| InputError(format!("{label}: {e}")))?;
        all_passed &= r.all_passed();
        match args.graphs.format {
            Format::Text => {
                if i > 0 {
                    emit(&mut out, "\n");
                }
                emit(&mut out, &format!("graph {label}\n{}", r.summary()));
            }
            Format::Structured => {
                let config = SweepConfig::exhaustive(graph.n());
                let mut v = report::sweep_json(&r, &config);
                v["graph"] = json!(label);
                emit(&mut out, &format!("{v}\n"));
            }
        }
    }
    if all_passed {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn run_sweep(args: &SweepArgs) -> Result<(), Failure> {
    let mode = args.mode.unwrap_or(if args.n <= 4 {
        Mode::Exhaustive
    } else {
        Mode::Sampled
    });
    let config = SweepConfig {
        n_max: args.n,
        mode: match mode {
            Mode::Exhaustive => SweepMode::Exhaustive,
            Mode::Sampled => SweepMode::Sampled {
                samples: args.samples,
            },
        },
        seed: args.seed,
        cap_edges: args.cap_edges,
        coefficient_max_n: args.coefficient_max_n.min(ORACLE_N_MAX),
        threads: args.threads,
        max_failures: args.max_failures,
        edge_probability: args.edge_probability,
    };
    let report = sweep(&config).map_err(|e| InputError(e.to_string()))?;
    let structured = report::sweep_json(&report, &config);
    if let Some(path) = &args.report {
        std::fs::write(path, format!("{structured:#}\n"))
            .map_err(|e| InputError(format!("{}: cannot write: {e}", path.display())))?;
    }
    let mut out = std::io::stdout().lock();
    match args.format {
        Format::Text => emit(&mut out, &report.summary()),
        Format::Structured => emit(&mut out, &format!("{structured}\n")),
    }
    eprintln!("elapsed {:.3}s", report.elapsed.as_secs_f64());
    if report.all_passed() {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn oracle(args: &GraphArgs) -> Result<(), Failure> {
    let graphs = load_all(args)?;
    let mut out = std::io::stdout().lock();
    let mut all_match = true;
    for (i, Loaded { label, graph }) in graphs.iter().enumerate() {
        if graph.n() > ORACLE_N_MAX {
            return Err(InputError(format!(
                "{label}: oracles support at most {ORACLE_N_MAX} vertices, graph has {}",
                graph.n()
            ))
            .into());
        }
        let u = graph.underlying();
        let h_poly = char_poly(&hermitian_matrix(graph)).expect("Hermitian char poly is real");
        let a_poly = char_poly(&adjacency_matrix(&u)).expect("adjacency char poly is integral");
        let basic = basic_subgraph_coefficients(graph);
        let elementary = elementary_subgraph_coefficients(&u);
        let h_match = h_poly.coefficients() == basic.as_slice();
        let a_match = a_poly.coefficients() == elementary.as_slice();
        all_match &= h_match && a_match;
        let cycles = simple_cycles(&u).len();
        let max_matchings = count_maximum_matchings(&u).expect("order checked above");
        let m = hrank::structure::matching_number(&u);
        match args.format {
            Format::Text => {
                if i > 0 {
                    emit(&mut out, "\n");
                }
                let yes = |b: bool| if b { "match" } else { "MISMATCH" };
                emit(
                    &mut out,
                    &format!(
                        "graph              {label}\n\
                         hermitian poly     {h_poly}\n\
                         basic sums         [{}] {}\n\
                         adjacency poly     {a_poly}\n\
                         elementary sums    [{}] {}\n\
                         simple cycles      {cycles}\n\
                         matching number    {m}\n\
                         maximum matchings  {max_matchings}\n",
                        strings(&basic).join(", "),
                        yes(h_match),
                        strings(&elementary).join(", "),
                        yes(a_match),
                    ),
                );
            }
            Format::Structured => {
                let v = json!({
                    "graph": label,
                    "hermitian_coefficients": strings(h_poly.coefficients()),
                    "basic_sums": strings(&basic),
                    "hermitian_match": h_match,
                    "adjacency_coefficients": strings(a_poly.coefficients()),
                    "elementary_sums": strings(&elementary),
                    "adjacency_match": a_match,
                    "simple_cycles": cycles,
                    "m": m,
                    "maximum_matchings": max_matchings,
                });
                emit(&mut out, &format!("{v}\n"));
            }
        }
    }
    if all_match {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Analyze(a) => analyze(a, false),
        Command::Classify(a) => analyze(a, true),
        Command::Verify(a) => verify(a),
        Command::Sweep(a) => run_sweep(a),
        Command::Oracle(a) => oracle(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Input(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
