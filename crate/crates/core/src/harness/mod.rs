//! Experiment driver: random problem families, repeated runs of several
//! methods from a common start, quantile summaries and CSV output.

mod output;
mod presets;
mod stats;

pub use output::{emit_csv, read_records, write_records, write_summary, RECORD_HEADER, SUMMARY_HEADER};
pub use presets::{preset, PRESET_NAMES};
pub use stats::{iteration_summary, quantiles, time_summary, QuantileSummary, SummaryRow};

use crate::dgf::{soft_threshold, Dgf, DgfError, PrimalDualPair};
use crate::linesearch::LineSearchConfig;
use crate::par::{self, Execution};
use crate::problems::{
    gen_lsd_with, gen_simplex_linear_with, gen_sparse_quadratic_with, sample_simplex_uniform, Dist, NonlinearSystem,
    ProblemError,
};
use crate::rng::{seeded_rng, INIT, PROBLEM};
use crate::solvers::{run, Method, SolverConfig, SolverError, StepCounts};
use rand::Rng;
use rand_distr::StandardNormal;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("configuration error: {0}")]
    Config(String),
    #[error("empty input")]
    EmptyInput,
    #[error("records carry no timing information")]
    MissingTiming,
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Solver(#[from] SolverError),
    #[error(transparent)]
    Problem(#[from] ProblemError),
    #[error(transparent)]
    Dgf(#[from] DgfError),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    SparseQuadratic,
    SimplexLinear,
    Lsd,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::SparseQuadratic => "sparse-quadratic",
            Family::SimplexLinear => "simplex-linear",
            Family::Lsd => "lsd",
        }
    }

    /// Methods that make sense for this family.
    pub fn methods(self) -> [Method; 3] {
        match self {
            Family::SparseQuadratic => [Method::Nbk, Method::Rnbk, Method::Nk],
            Family::SimplexLinear => [Method::Nbk, Method::Rnbk, Method::Pocs],
            Family::Lsd => [Method::Nbk, Method::Rnbk, Method::Pnk],
        }
    }

    /// `(rows, cols)` used when none are given.
    pub fn default_dims(self, full_scale: bool) -> (usize, usize) {
        match (self, full_scale) {
            (Family::SparseQuadratic, false) => (100, 50),
            (Family::SparseQuadratic, true) => (1000, 500),
            (Family::SimplexLinear, false) => (50, 20),
            (Family::SimplexLinear, true) => (500, 200),
            (Family::Lsd, false) => (10, 5),
            (Family::Lsd, true) => (100, 50),
        }
    }

    pub fn default_nnz(full_scale: bool) -> usize {
        if full_scale {
            50
        } else {
            5
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        [Family::SparseQuadratic, Family::SimplexLinear, Family::Lsd]
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| HarnessError::Config(format!("unknown family `{s}`")))
    }
}

/// One experiment: a problem family at fixed size, several methods, several
/// random repeats.
///
/// `rows`/`cols` are `(n, d)` for the quadratic and linear families and
/// `(r, m)` for LSD.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentSpec {
    pub id: String,
    pub family: Family,
    pub rows: usize,
    pub cols: usize,
    pub nnz: usize,
    pub lambda: f64,
    pub dist: Dist,
    pub methods: Vec<Method>,
    pub repeats: usize,
    pub seed: u64,
    pub eps: f64,
    pub max_iterations: usize,
    pub stop_residual: f64,
    pub record_every: usize,
    /// Run the explicit feasibility test before each NBK line search.
    pub check_feasibility: bool,
    /// When false, elapsed times are left out so output is byte-identical
    /// across runs.
    pub timing: bool,
    pub execution: Execution,
}

impl ExperimentSpec {
    pub fn new(family: Family, rows: usize, cols: usize) -> Self {
        ExperimentSpec {
            id: format!("{family}-{rows}x{cols}"),
            family,
            rows,
            cols,
            nnz: Family::default_nnz(false).min(cols),
            lambda: 10.0,
            dist: Dist::StdNormal,
            methods: family.methods().to_vec(),
            repeats: 10,
            seed: 0,
            eps: LineSearchConfig::default().eps,
            max_iterations: 10_000,
            stop_residual: 1e-10,
            record_every: 10,
            check_feasibility: true,
            timing: true,
            execution: Execution::Parallel,
        }
    }

    pub fn validate(&self) -> Result<(), HarnessError> {
        let bad = |m: String| Err(HarnessError::Config(m));
        if self.rows == 0 || self.cols == 0 {
            return bad("dimensions must be positive".into());
        }
        if self.repeats == 0 {
            return bad("repeats must be at least 1".into());
        }
        if self.methods.is_empty() {
            return bad("no methods given".into());
        }
        for m in &self.methods {
            if !self.family.methods().contains(m) {
                return bad(format!("method `{m}` is not available for family `{}`", self.family));
            }
        }
        if self.family == Family::SparseQuadratic {
            if self.nnz > self.cols {
                return bad(format!("nnz = {} exceeds d = {}", self.nnz, self.cols));
            }
            if self.lambda.is_nan() || self.lambda < 0.0 {
                return bad("lambda must be nonnegative".into());
            }
        }
        if self.eps.is_nan() || self.eps <= 0.0 {
            return bad("eps must be positive".into());
        }
        if self.stop_residual.is_nan() || self.stop_residual < 0.0 {
            return bad("stop residual must be nonnegative".into());
        }
        if self.record_every == 0 {
            return bad("record interval must be positive".into());
        }
        Ok(())
    }

    pub fn dgf(&self) -> Result<Dgf, HarnessError> {
        Ok(match self.family {
            Family::SparseQuadratic => Dgf::l1_half_square(self.lambda, self.cols)?,
            Family::SimplexLinear => Dgf::simplex_entropy(self.cols)?,
            Family::Lsd => Dgf::entropy_columns(self.rows, self.cols)?,
        })
    }

    pub fn system(&self, repeat: usize) -> Result<Box<dyn NonlinearSystem>, HarnessError> {
        let mut rng = seeded_rng(self.seed, repeat as u64, PROBLEM);
        Ok(match self.family {
            Family::SparseQuadratic => Box::new(gen_sparse_quadratic_with(self.rows, self.cols, self.nnz, &mut rng)?),
            Family::SimplexLinear => Box::new(gen_simplex_linear_with(self.rows, self.cols, self.dist, &mut rng)?),
            Family::Lsd => Box::new(gen_lsd_with(self.rows, self.cols, &mut rng)?),
        })
    }

    /// Starting pair of repeat `repeat` for the DGF-based methods and for the
    /// euclidean baselines.
    ///
    /// - sparse-quadratic: `x₀*` standard normal, `x₀ = S_λ(x₀*)`.
    /// - simplex-linear: the barycenter.
    /// - lsd: columns drawn uniformly from the simplex.
    pub fn initial_pairs(&self, dgf: &Dgf, repeat: usize) -> Result<(PrimalDualPair, PrimalDualPair), HarnessError> {
        let mut rng = seeded_rng(self.seed, repeat as u64, INIT);
        let (pair, x0) = match self.family {
            Family::SparseQuadratic => {
                let xs: Vec<f64> = (0..self.cols).map(|_| rng.sample(StandardNormal)).collect();
                let x0 = xs.iter().map(|v| soft_threshold(*v, self.lambda)).collect();
                (PrimalDualPair::from_dual(dgf, xs)?, x0)
            }
            Family::SimplexLinear => {
                let pair = PrimalDualPair::from_dual(dgf, vec![0.0; self.cols])?;
                let x0 = pair.x.clone();
                (pair, x0)
            }
            Family::Lsd => {
                let x0: Vec<f64> = (0..self.cols)
                    .flat_map(|_| sample_simplex_uniform(self.rows, &mut rng))
                    .collect();
                let x_star = x0.iter().map(|v| v.ln()).collect();
                (PrimalDualPair::from_dual(dgf, x_star)?, x0)
            }
        };
        let euclid = PrimalDualPair {
            x: x0.clone(),
            x_star: x0,
        };
        Ok((pair, euclid))
    }

    /// Solver settings of repeat `repeat`.
    pub fn solver_config(&self, repeat: usize, execution: Execution) -> SolverConfig {
        SolverConfig {
            linesearch: LineSearchConfig {
                eps: self.eps,
                ..LineSearchConfig::default()
            },
            max_iterations: self.max_iterations,
            stop_residual: self.stop_residual,
            seed: self.seed,
            repeat: repeat as u64,
            record_every: self.record_every,
            check_feasibility: self.check_feasibility,
            execution,
            ..SolverConfig::default()
        }
    }
}

/// One metrics row of one run.
#[derive(Debug, Clone, PartialEq)]
pub struct RunRecord {
    pub experiment: String,
    pub method: String,
    pub repeat: usize,
    pub iter: usize,
    pub elapsed_s: Option<f64>,
    pub residual: f64,
    pub dist_to_sol: Option<f64>,
    pub bregman_dist: Option<f64>,
}

/// Outcome of one (method, repeat) run.
#[derive(Debug, Clone, PartialEq)]
pub struct RunInfo {
    pub method: Method,
    pub repeat: usize,
    pub iterations: usize,
    pub reached_stop: bool,
    pub steps: StepCounts,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentResult {
    /// Ordered by repeat, then method (in spec order), then iteration.
    pub records: Vec<RunRecord>,
    pub runs: Vec<RunInfo>,
    pub summary: Vec<SummaryRow>,
}

/// Runs every method of `spec` on every repeat.
///
/// Repeats are independent and run in parallel under
/// [`Execution::Parallel`]; each run itself is sequential. Results do not
/// depend on the execution mode.
pub fn run_experiment(spec: &ExperimentSpec) -> Result<ExperimentResult, HarnessError> {
    spec.validate()?;
    let dgf = spec.dgf()?;
    let per_repeat = par::map_indices(spec.execution, spec.repeats, |repeat| run_repeat(spec, &dgf, repeat));
    let mut records = Vec::new();
    let mut runs = Vec::new();
    for r in per_repeat {
        let (rec, info) = r?;
        records.extend(rec);
        runs.extend(info);
    }
    let summary = iteration_summary(&records)?;
    Ok(ExperimentResult { records, runs, summary })
}

fn run_repeat(spec: &ExperimentSpec, dgf: &Dgf, repeat: usize) -> Result<(Vec<RunRecord>, Vec<RunInfo>), HarnessError> {
    let sys = spec.system(repeat)?;
    let (pair, euclid) = spec.initial_pairs(dgf, repeat)?;
    let cfg = spec.solver_config(repeat, Execution::Sequential);
    let mut records = Vec::new();
    let mut runs = Vec::new();
    for &method in &spec.methods {
        let init = if method.uses_dgf() {
            pair.clone()
        } else {
            euclid.clone()
        };
        let out = run(sys.as_ref(), dgf, method, &cfg, init)?;
        records.extend(out.records.iter().map(|m| RunRecord {
            experiment: spec.id.clone(),
            method: method.name().to_owned(),
            repeat,
            iter: m.iter,
            elapsed_s: spec.timing.then_some(m.elapsed_s),
            residual: m.residual,
            dist_to_sol: m.dist_to_sol,
            bregman_dist: m.bregman_dist,
        }));
        runs.push(RunInfo {
            method,
            repeat,
            iterations: out.iterations,
            reached_stop: out.reached_stop,
            steps: out.steps,
        });
    }
    Ok((records, runs))
}
