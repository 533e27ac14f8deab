//! `nbk`: runs solver experiments and writes per-iteration metrics as CSV.

use bregman_kaczmarz::harness::{
    emit_csv, preset, run_experiment, write_summary, ExperimentResult, ExperimentSpec, Family, HarnessError, RunRecord,
    SummaryRow, PRESET_NAMES,
};
use bregman_kaczmarz::par::Execution;
use bregman_kaczmarz::problems::{Dist, ProblemError};
use bregman_kaczmarz::solvers::Method;
use clap::parser::ValueSource;
use clap::{ArgMatches, CommandFactory, FromArgMatches, Parser, Subcommand};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "nbk", version, about = "Nonlinear Bregman-Kaczmarz experiment runner")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one experiment, or every experiment of a preset, and write the
    /// metrics CSV.
    Run(Box<RunArgs>),
    /// List the experiment presets.
    Presets {
        /// Show full-scale sizes.
        #[arg(long)]
        full_scale: bool,
    },
}

#[derive(clap::Args)]
struct RunArgs {
    /// Problem family.
    #[arg(long, value_parser = parse_family, required_unless_present = "preset", conflicts_with = "preset")]
    family: Option<Family>,
    /// Named experiment bundle; explicitly given options override its settings.
    #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(PRESET_NAMES))]
    preset: Option<String>,
    /// Rows n (components) or r for lsd [default: family size, see --full-scale].
    #[arg(long)]
    rows: Option<usize>,
    /// Columns d (unknowns) or m for lsd [default: family size, see --full-scale].
    #[arg(long)]
    cols: Option<usize>,
    /// Nonzeros of the planted sparse solution [default: 5, or 50 with --full-scale].
    #[arg(long)]
    nnz: Option<usize>,
    /// Weight of the l1 term in the sparse-quadratic DGF.
    #[arg(long, default_value_t = 10.0)]
    lambda: f64,
    /// Entry distribution of simplex-linear matrices (stdn, u01, u09).
    #[arg(long, default_value = "stdn", value_parser = parse_dist)]
    dist: Dist,
    /// Comma-separated methods (nbk, rnbk, nk, pocs, pnk) [default: the family's three].
    #[arg(long, value_delimiter = ',', value_parser = parse_method)]
    methods: Option<Vec<Method>>,
    /// Random repeats per method.
    #[arg(long, default_value_t = 10)]
    repeats: usize,
    /// Base seed; each repeat derives its own streams from it.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Tolerance on |g'(t)| in the line search.
    #[arg(long, default_value_t = 1e-9)]
    eps: f64,
    /// Iteration budget per run.
    #[arg(long, default_value_t = 10_000)]
    max_iters: usize,
    /// Stop once the residual norm falls below this value.
    #[arg(long, default_value_t = 1e-10)]
    stop_residual: f64,
    /// Record metrics every this many iterations.
    #[arg(long, default_value_t = 10)]
    record_every: usize,
    /// Use the original large problem sizes.
    #[arg(long)]
    full_scale: bool,
    /// Skip the explicit feasibility test before each NBK line search.
    #[arg(long)]
    no_feasibility_check: bool,
    /// Leave the elapsed_s column empty so output is reproducible byte for byte.
    #[arg(long)]
    no_timing: bool,
    /// Run repeats one after another instead of in parallel.
    #[arg(long)]
    sequential: bool,
    /// Metrics CSV.
    #[arg(long)]
    out: PathBuf,
    /// Optional CSV of residual quantiles per method and iteration.
    #[arg(long)]
    summary: Option<PathBuf>,
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: HarnessError| e.to_string())
}

fn parse_dist(s: &str) -> Result<Dist, String> {
    s.parse().map_err(|e: ProblemError| e.to_string())
}

fn parse_method(s: &str) -> Result<Method, String> {
    s.parse()
        .map_err(|e: bregman_kaczmarz::solvers::SolverError| e.to_string())
}

/// Whether `id` was given on the command line rather than defaulted.
fn explicit(m: &ArgMatches, id: &str) -> bool {
    m.value_source(id) == Some(ValueSource::CommandLine)
}

fn specs(args: &RunArgs, m: &ArgMatches) -> Result<Vec<ExperimentSpec>, HarnessError> {
    let base = match (&args.preset, args.family) {
        (Some(name), _) => {
            preset(name, args.full_scale).ok_or_else(|| HarnessError::Config(format!("unknown preset `{name}`")))?
        }
        (None, Some(family)) => {
            let (rows, cols) = family.default_dims(args.full_scale);
            let mut s = ExperimentSpec::new(family, rows, cols);
            s.nnz = Family::default_nnz(args.full_scale).min(cols);
            vec![s]
        }
        (None, None) => return Err(HarnessError::Config("either --family or --preset is required".into())),
    };
    let execution = if args.sequential {
        Execution::Sequential
    } else {
        Execution::Parallel
    };
    let standalone = args.preset.is_none();
    let set = |id: &str| standalone || explicit(m, id);
    let specs = base
        .into_iter()
        .map(|mut s| {
            let mut resized = false;
            if let Some(r) = args.rows {
                s.rows = r;
                resized = true;
            }
            if let Some(c) = args.cols {
                s.cols = c;
                resized = true;
            }
            if resized && standalone {
                s.id = format!("{}-{}x{}", s.family, s.rows, s.cols);
            }
            s.nnz = args.nnz.unwrap_or(s.nnz.min(s.cols));
            if let Some(methods) = &args.methods {
                s.methods = methods.clone();
            }
            if set("lambda") {
                s.lambda = args.lambda;
            }
            if set("dist") {
                s.dist = args.dist;
            }
            if set("repeats") {
                s.repeats = args.repeats;
            }
            if set("seed") {
                s.seed = args.seed;
            }
            if set("eps") {
                s.eps = args.eps;
            }
            if set("max_iters") {
                s.max_iterations = args.max_iters;
            }
            if set("stop_residual") {
                s.stop_residual = args.stop_residual;
            }
            if set("record_every") {
                s.record_every = args.record_every;
            }
            if args.no_feasibility_check {
                s.check_feasibility = false;
            }
            s.timing = !args.no_timing;
            s.execution = execution;
            s
        })
        .collect::<Vec<_>>();
    for s in &specs {
        s.validate()?;
    }
    Ok(specs)
}

fn report(spec: &ExperimentSpec, result: &ExperimentResult) {
    for &method in &spec.methods {
        let runs: Vec<_> = result.runs.iter().filter(|r| r.method == method).collect();
        let mut iters: Vec<usize> = runs.iter().map(|r| r.iterations).collect();
        iters.sort_unstable();
        let stopped = runs.iter().filter(|r| r.reached_stop).count();
        let (exact, relaxed, skipped) = runs.iter().fold((0, 0, 0), |(e, r, s), run| {
            (e + run.steps.exact, r + run.steps.relaxed, s + run.steps.skipped)
        });
        let final_residual = result
            .summary
            .iter()
            .rfind(|row| row.method == method.name())
            .map(|row| row.residual.median);
        println!(
            "{:<24} {:<5} runs {:>3}  converged {:>3}  median iters {:>7}  median final residual {}  steps exact/relaxed/skipped {}/{}/{}",
            spec.id,
            method.name(),
            runs.len(),
            stopped,
            iters.get(iters.len() / 2).copied().unwrap_or(0),
            final_residual.map_or("-".to_owned(), |v| format!("{v:.3e}")),
            exact,
            relaxed,
            skipped,
        );
    }
}

fn run(args: &RunArgs, m: &ArgMatches) -> Result<(), HarnessError> {
    let specs = specs(args, m)?;
    let mut records: Vec<RunRecord> = Vec::new();
    let mut summary: Vec<SummaryRow> = Vec::new();
    for spec in &specs {
        let result = run_experiment(spec)?;
        report(spec, &result);
        records.extend(result.records.iter().cloned());
        summary.extend(result.summary);
    }
    emit_csv(&records, &args.out)?;
    if let Some(path) = &args.summary {
        write_summary(&summary, std::io::BufWriter::new(std::fs::File::create(path)?))?;
    }
    Ok(())
}

fn list_presets(full_scale: bool) {
    for name in PRESET_NAMES {
        for s in preset(name, full_scale).unwrap_or_default() {
            let methods: Vec<&str> = s.methods.iter().map(|m| m.name()).collect();
            println!(
                "{name:<5} {:<24} {:<16} {:>4}x{:<4} repeats {:>3}  iters {:>6}  methods {}",
                s.id,
                s.family.name(),
                s.rows,
                s.cols,
                s.repeats,
                s.max_iterations,
                methods.join(",")
            );
        }
    }
}

fn is_config_error(e: &HarnessError) -> bool {
    matches!(
        e,
        HarnessError::Config(_)
            | HarnessError::Solver(_)
            | HarnessError::Dgf(_)
            | HarnessError::Problem(ProblemError::InvalidParameter(_) | ProblemError::DimensionMismatch { .. })
    )
}

fn main() -> ExitCode {
    let matches = Cli::command().get_matches();
    let cli = match Cli::from_arg_matches(&matches) {
        Ok(c) => c,
        Err(e) => e.exit(),
    };
    match cli.command {
        Command::Presets { full_scale } => {
            list_presets(full_scale);
            ExitCode::SUCCESS
        }
        Command::Run(args) => {
            let sub = matches.subcommand_matches("run").expect("run subcommand");
            match run(&args, sub) {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => {
                    eprintln!("error: {e}");
                    if is_config_error(&e) {
                        ExitCode::from(2)
                    } else {
                        ExitCode::FAILURE
                    }
                }
            }
        }
    }
}
