//! Iteration engines: NBK, relaxed NBK, euclidean nonlinear Kaczmarz,
//! POCS and PNK.
//!
//! A run is strictly sequential. Independent runs share only immutable
//! inputs and may execute concurrently.

mod step;

pub use step::{nbk_step_at, nk_step_at, pnk_step_at, pocs_step_at, projection_step, rnbk_step_at};

use crate::dgf::{Dgf, PrimalDualPair};
use crate::linalg::{dist2, norm2_sq};
use crate::linesearch::{LineSearchConfig, DEFAULT_MASK_DELTA};
use crate::par::Execution;
use crate::problems::NonlinearSystem;
use crate::rng::{seeded_rng, StreamRng, SAMPLING};
use rand::distr::weighted::WeightedIndex;
use rand::distr::Distribution;
use rand::Rng;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SolverError {
    #[error("configuration mismatch: {0}")]
    ConfigMismatch(String),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    Nbk,
    Rnbk,
    Nk,
    Pocs,
    Pnk,
}

impl Method {
    pub const ALL: [Method; 5] = [Method::Nbk, Method::Rnbk, Method::Nk, Method::Pocs, Method::Pnk];

    pub fn name(self) -> &'static str {
        match self {
            Method::Nbk => "nbk",
            Method::Rnbk => "rnbk",
            Method::Nk => "nk",
            Method::Pocs => "pocs",
            Method::Pnk => "pnk",
        }
    }

    /// Whether the method moves in the geometry of the given DGF rather
    /// than the euclidean one.
    pub fn uses_dgf(self) -> bool {
        matches!(self, Method::Nbk | Method::Rnbk)
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = SolverError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| SolverError::InvalidConfig(format!("unknown method `{s}`")))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolverConfig {
    /// Sampling weights; `None` means uniform.
    pub probabilities: Option<Vec<f64>>,
    /// `σ` of the relaxed step; `None` uses the DGF's modulus.
    pub sigma: Option<f64>,
    pub linesearch: LineSearchConfig,
    pub max_iterations: usize,
    pub stop_residual: f64,
    /// `|fᵢ|` or `‖∇fᵢ‖₂` at or below this skips the step.
    pub zero_tolerance: f64,
    pub seed: u64,
    /// Stream index for the sampler, see [`crate::rng`].
    pub repeat: u64,
    /// Metrics are evaluated every this many iterations (and at the end).
    pub record_every: usize,
    pub feasibility_delta: f64,
    /// Test whether the hyperplane meets the domain before the line search.
    pub check_feasibility: bool,
    /// Scheduling of residual evaluations.
    pub execution: Execution,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            probabilities: None,
            sigma: None,
            linesearch: LineSearchConfig::default(),
            max_iterations: 10_000,
            stop_residual: 0.0,
            zero_tolerance: 1e-14,
            seed: 0,
            repeat: 0,
            record_every: 1,
            feasibility_delta: DEFAULT_MASK_DELTA,
            check_feasibility: true,
            execution: Execution::Sequential,
        }
    }
}

impl SolverConfig {
    pub fn sigma_for(&self, dgf: &Dgf) -> f64 {
        self.sigma.unwrap_or_else(|| dgf.sigma())
    }

    fn validate(&self, n: usize) -> Result<(), SolverError> {
        if let Some(p) = &self.probabilities {
            if p.len() != n {
                return Err(SolverError::InvalidConfig(format!(
                    "{} probabilities for {n} components",
                    p.len()
                )));
            }
            if p.iter().any(|v| v.is_nan() || *v < 0.0) {
                return Err(SolverError::InvalidConfig("negative probability".into()));
            }
            let s: f64 = p.iter().sum();
            if (s - 1.0).abs() > 1e-12 {
                return Err(SolverError::InvalidConfig(format!("probabilities sum to {s}")));
            }
        }
        if let Some(s) = self.sigma {
            if s.is_nan() || s <= 0.0 {
                return Err(SolverError::InvalidConfig("sigma must be positive".into()));
            }
        }
        if self.linesearch.eps.is_nan() || self.linesearch.eps <= 0.0 {
            return Err(SolverError::InvalidConfig("eps must be positive".into()));
        }
        if self.record_every == 0 {
            return Err(SolverError::InvalidConfig("record_every must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StepKind {
    Exact,
    Relaxed,
    Skipped,
}

/// Why an NBK step used the relaxed step size instead of the projection.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FallbackReason {
    /// The hyperplane misses the relative interior of the domain.
    Infeasible,
    /// Globalized Newton left the trust range.
    RelaxedFallback,
    /// Bisection found no sign change of `g'` within the `|t|` threshold.
    NoBracket,
    ZeroCurvature,
    SolverError,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StepReport {
    pub index: usize,
    /// `f_i(x_k)` before the step.
    pub f: f64,
    /// Dual step size: `x*_{k+1} = x*_k − t ∇f_i(x_k)`.
    pub t: f64,
    pub kind: StepKind,
    pub fallback: Option<FallbackReason>,
}

/// Metrics at one iteration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Metrics {
    pub iter: usize,
    /// Accumulated time spent inside step calls.
    pub elapsed_s: f64,
    pub residual: f64,
    pub dist_to_sol: Option<f64>,
    pub bregman_dist: Option<f64>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct StepCounts {
    pub exact: usize,
    pub relaxed: usize,
    pub skipped: usize,
    pub fallbacks: BTreeMap<FallbackReason, usize>,
}

impl StepCounts {
    fn add(&mut self, r: &StepReport) {
        match r.kind {
            StepKind::Exact => self.exact += 1,
            StepKind::Relaxed => self.relaxed += 1,
            StepKind::Skipped => self.skipped += 1,
        }
        if let Some(reason) = r.fallback {
            *self.fallbacks.entry(reason).or_default() += 1;
        }
    }

    pub fn count(&self, reason: FallbackReason) -> usize {
        self.fallbacks.get(&reason).copied().unwrap_or(0)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunOutcome {
    pub records: Vec<Metrics>,
    pub iterations: usize,
    pub final_pair: PrimalDualPair,
    pub reached_stop: bool,
    pub steps: StepCounts,
}

enum Sampler {
    Uniform(usize),
    Weighted(WeightedIndex<f64>),
}

impl Sampler {
    fn new(n: usize, p: Option<&[f64]>) -> Result<Self, SolverError> {
        match p {
            None => Ok(Sampler::Uniform(n)),
            Some(w) => WeightedIndex::new(w.iter().copied())
                .map(Sampler::Weighted)
                .map_err(|e| SolverError::InvalidConfig(e.to_string())),
        }
    }

    fn sample(&self, rng: &mut StreamRng) -> usize {
        match self {
            Sampler::Uniform(n) => rng.random_range(0..*n),
            Sampler::Weighted(w) => w.sample(rng),
        }
    }
}

/// Iterate state of a run: counter, current pair, sampler stream and the
/// last step.
pub struct SolverState {
    pub k: usize,
    pub pair: PrimalDualPair,
    pub last_step: Option<StepReport>,
    rng: StreamRng,
    sampler: Sampler,
}

impl SolverState {
    pub fn new<S: NonlinearSystem + ?Sized>(
        sys: &S,
        cfg: &SolverConfig,
        pair: PrimalDualPair,
    ) -> Result<Self, SolverError> {
        cfg.validate(sys.n_components())?;
        if sys.n_components() == 0 {
            return Err(SolverError::InvalidConfig("system has no components".into()));
        }
        if pair.dim() != sys.dim() {
            return Err(SolverError::ConfigMismatch(format!(
                "initial point has dimension {}, system has {}",
                pair.dim(),
                sys.dim()
            )));
        }
        Ok(SolverState {
            k: 0,
            pair,
            last_step: None,
            rng: seeded_rng(cfg.seed, cfg.repeat, SAMPLING),
            sampler: Sampler::new(sys.n_components(), cfg.probabilities.as_deref())?,
        })
    }

    pub fn sample_index(&mut self) -> usize {
        self.sampler.sample(&mut self.rng)
    }
}

fn check_compatible<S: NonlinearSystem + ?Sized>(sys: &S, dgf: &Dgf, method: Method) -> Result<(), SolverError> {
    match method {
        Method::Nbk | Method::Rnbk if dgf.dim() != sys.dim() => Err(SolverError::ConfigMismatch(format!(
            "DGF dimension {} differs from system dimension {}",
            dgf.dim(),
            sys.dim()
        ))),
        Method::Pocs if sys.as_linear().is_none() => {
            Err(SolverError::ConfigMismatch("pocs requires a linear system".into()))
        }
        Method::Pnk if sys.as_lsd().is_none() => Err(SolverError::ConfigMismatch("pnk requires an LSD system".into())),
        _ => Ok(()),
    }
}

/// Samples an index and advances `state` by one step of `method`.
pub fn step<S: NonlinearSystem + ?Sized>(
    sys: &S,
    dgf: &Dgf,
    method: Method,
    cfg: &SolverConfig,
    state: &mut SolverState,
) -> StepReport {
    let i = state.sample_index();
    let pair = &mut state.pair;
    let report = match method {
        Method::Nbk => nbk_step_at(sys, dgf, cfg, pair, i),
        Method::Rnbk => rnbk_step_at(sys, dgf, cfg, pair, i),
        Method::Nk => nk_step_at(sys, cfg, pair, i),
        Method::Pocs => {
            let lin = sys.as_linear().expect("checked by run");
            let r = pocs_step_at(lin, cfg, &mut pair.x, i);
            pair.x_star.copy_from_slice(&pair.x);
            r
        }
        Method::Pnk => {
            let lsd = sys.as_lsd().expect("checked by run");
            let r = pnk_step_at(lsd, cfg, &mut pair.x, i);
            pair.x_star.copy_from_slice(&pair.x);
            r
        }
    };
    state.k += 1;
    state.last_step = Some(report);
    report
}

fn metrics<S: NonlinearSystem + ?Sized>(
    sys: &S,
    dgf: &Dgf,
    method: Method,
    pair: &PrimalDualPair,
    iter: usize,
    elapsed: Duration,
    exec: Execution,
) -> Metrics {
    let residual = sys.residual_norm(&pair.x, exec);
    let (dist_to_sol, bregman_dist) = match sys.solution() {
        Some(sol) => {
            let b = if method.uses_dgf() {
                dgf.bregman_from_dual(&pair.x_star, sol)
            } else {
                0.5 * pair.x.iter().zip(sol).map(|(a, b)| (a - b) * (a - b)).sum::<f64>()
            };
            (Some(dist2(&pair.x, sol)), b.is_finite().then_some(b))
        }
        None => (None, None),
    };
    Metrics {
        iter,
        elapsed_s: elapsed.as_secs_f64(),
        residual,
        dist_to_sol,
        bregman_dist,
    }
}

/// Runs `method` from `init` until `max_iterations` or until the residual
/// drops to `stop_residual` at a recording point.
pub fn run<S: NonlinearSystem + ?Sized>(
    sys: &S,
    dgf: &Dgf,
    method: Method,
    cfg: &SolverConfig,
    init: PrimalDualPair,
) -> Result<RunOutcome, SolverError> {
    run_observed(sys, dgf, method, cfg, init, |_, _| {})
}

/// [`run`] with a callback receiving every step report and the pair after
/// the step.
pub fn run_observed<S, F>(
    sys: &S,
    dgf: &Dgf,
    method: Method,
    cfg: &SolverConfig,
    init: PrimalDualPair,
    mut on_step: F,
) -> Result<RunOutcome, SolverError>
where
    S: NonlinearSystem + ?Sized,
    F: FnMut(&StepReport, &PrimalDualPair),
{
    check_compatible(sys, dgf, method)?;
    let mut state = SolverState::new(sys, cfg, init)?;
    let mut elapsed = Duration::ZERO;
    let mut steps = StepCounts::default();
    let first = metrics(sys, dgf, method, &state.pair, 0, elapsed, cfg.execution);
    let mut reached_stop = first.residual <= cfg.stop_residual;
    let mut records = vec![first];
    while !reached_stop && state.k < cfg.max_iterations {
        let t0 = Instant::now();
        let report = step(sys, dgf, method, cfg, &mut state);
        elapsed += t0.elapsed();
        steps.add(&report);
        on_step(&report, &state.pair);
        if state.k % cfg.record_every == 0 || state.k == cfg.max_iterations {
            let m = metrics(sys, dgf, method, &state.pair, state.k, elapsed, cfg.execution);
            reached_stop = m.residual <= cfg.stop_residual;
            records.push(m);
        }
    }
    Ok(RunOutcome {
        records,
        iterations: state.k,
        final_pair: state.pair,
        reached_stop,
        steps,
    })
}

/// Whether every component is solved or has a vanishing gradient at `x`,
/// i.e. whether `x` is a fixed point of the NBK iteration.
pub fn fixed_point_check<S: NonlinearSystem + ?Sized>(sys: &S, x: &[f64], tol: f64) -> bool {
    (0..sys.n_components()).all(|i| sys.value(i, x).abs() <= tol || norm2_sq(&sys.gradient(i, x)).sqrt() <= tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dgf::in_simplex;
    use crate::problems::{
        gen_lsd, gen_simplex_linear, gen_sparse_quadratic, Dist, LinearSystem, LsdSystem, QuadraticComponent,
        QuadraticSystem,
    };

    fn cfg() -> SolverConfig {
        SolverConfig::default()
    }

    #[test]
    fn nbk_euclidean_projects_orthogonally() {
        let sys = LinearSystem::new(vec![1.0, 0.0], vec![1.0], 1, 2).unwrap();
        let dgf = Dgf::euclidean(2);
        let mut pair = PrimalDualPair::from_dual(&dgf, vec![0.0, 0.0]).unwrap();
        let r = nbk_step_at(&sys, &dgf, &cfg(), &mut pair, 0);
        assert_eq!(r.kind, StepKind::Exact);
        assert!((pair.x[0] - 1.0).abs() < 1e-15 && pair.x[1].abs() < 1e-15);
    }

    #[test]
    fn nbk_entropy_lands_on_the_single_feasible_point() {
        let sys = LinearSystem::new(vec![1.0, 0.0], vec![0.8], 1, 2).unwrap();
        let dgf = Dgf::simplex_entropy(2).unwrap();
        let mut pair = PrimalDualPair::from_primal(&dgf, &[0.5, 0.5]).unwrap();
        let r = nbk_step_at(&sys, &dgf, &cfg(), &mut pair, 0);
        assert_eq!(r.kind, StepKind::Exact);
        assert!((pair.x[0] - 0.8).abs() < 1e-9 && (pair.x[1] - 0.2).abs() < 1e-9);
    }

    #[test]
    fn nbk_entropy_infeasible_takes_relaxed_step() {
        let sys = LinearSystem::new(vec![1.0, 0.0], vec![1.5], 1, 2).unwrap();
        let dgf = Dgf::simplex_entropy(2).unwrap();
        let mut pair = PrimalDualPair::from_primal(&dgf, &[0.5, 0.5]).unwrap();
        let r = nbk_step_at(&sys, &dgf, &cfg(), &mut pair, 0);
        assert_eq!(r.kind, StepKind::Relaxed);
        assert_eq!(r.fallback, Some(FallbackReason::Infeasible));
        assert!(pair.x.iter().all(|&v| v > 0.0));
        assert!((pair.x.iter().sum::<f64>() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn unchecked_infeasible_step_falls_back_inside_the_line_search() {
        let sys = LinearSystem::new(vec![1.0, 0.0], vec![1.5], 1, 2).unwrap();
        let dgf = Dgf::simplex_entropy(2).unwrap();
        let mut pair = PrimalDualPair::from_primal(&dgf, &[0.5, 0.5]).unwrap();
        let c = SolverConfig {
            check_feasibility: false,
            ..cfg()
        };
        let r = nbk_step_at(&sys, &dgf, &c, &mut pair, 0);
        assert_eq!(r.kind, StepKind::Relaxed);
        assert!(matches!(
            r.fallback,
            Some(FallbackReason::RelaxedFallback | FallbackReason::NoBracket | FallbackReason::ZeroCurvature)
        ));
        assert!((pair.x.iter().sum::<f64>() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn rnbk_examples() {
        let sys = gen_simplex_linear(10, 4, Dist::StdNormal, 1).unwrap();
        let dgf = Dgf::euclidean(4);
        let init = PrimalDualPair::from_dual(&dgf, vec![0.25; 4]).unwrap();
        let c = SolverConfig {
            max_iterations: 50,
            ..cfg()
        };
        let a = run(&sys, &dgf, Method::Nbk, &c, init.clone()).unwrap();
        let b = run(&sys, &dgf, Method::Rnbk, &c, init).unwrap();
        for (x, y) in a.final_pair.x.iter().zip(&b.final_pair.x) {
            assert!((x - y).abs() < 1e-12);
        }

        // f = x₀ = 0.1 with ‖∇f‖_∞ = 1
        let sys = LinearSystem::new(vec![1.0, 0.0, 0.0], vec![0.0], 1, 3).unwrap();
        let ent = Dgf::simplex_entropy(3).unwrap();
        let mut pair = PrimalDualPair::from_primal(&ent, &[0.1, 0.45, 0.45]).unwrap();
        let r = rnbk_step_at(&sys, &ent, &cfg(), &mut pair, 0);
        assert!((r.t - 0.1).abs() < 1e-15);

        let sys = LinearSystem::new(vec![1.0, 0.0], vec![0.5], 1, 2).unwrap();
        let mut pair = PrimalDualPair::from_primal(&Dgf::euclidean(2), &[0.5, 0.5]).unwrap();
        let before = pair.clone();
        let r = rnbk_step_at(&sys, &Dgf::euclidean(2), &cfg(), &mut pair, 0);
        assert_eq!(r.kind, StepKind::Skipped);
        assert_eq!(pair, before);
    }

    #[test]
    fn pocs_examples() {
        let sys = LinearSystem::new(vec![0.0, 1.0], vec![0.5], 1, 2).unwrap();
        let mut x = vec![1.0, 0.0];
        pocs_step_at(&sys, &cfg(), &mut x, 0);
        assert!((x[0] - 0.75).abs() < 1e-15 && (x[1] - 0.25).abs() < 1e-15);

        let mut y = vec![0.5, 0.5];
        let r = pocs_step_at(&sys, &cfg(), &mut y, 0);
        assert_eq!(r.kind, StepKind::Skipped);
        assert_eq!(y, vec![0.5, 0.5]);

        let sys = LinearSystem::new(vec![0.0, 0.0], vec![0.5], 1, 2).unwrap();
        assert_eq!(pocs_step_at(&sys, &cfg(), &mut y, 0).kind, StepKind::Skipped);
    }

    #[test]
    fn pnk_examples() {
        let sys = LsdSystem::new(2, 2, vec![0.5, 0.5, 0.5, 0.5]).unwrap();
        let mut x = vec![0.5, 0.5, 0.5, 0.5];
        assert_eq!(pnk_step_at(&sys, &cfg(), &mut x, 0).kind, StepKind::Skipped);
        assert_eq!(pnk_step_at(&sys, &cfg(), &mut x, 1).kind, StepKind::Skipped);
        assert_eq!(x, vec![0.5, 0.5, 0.5, 0.5]);

        let mut x = vec![1.0, 0.0, 0.0, 1.0];
        let r = pnk_step_at(&sys, &cfg(), &mut x, 1);
        assert!((r.t + 0.25).abs() < 1e-15);
        // (1, 0.25) and (0.25, 1) projected onto Δ¹
        let want = [0.875, 0.125, 0.125, 0.875];
        for (a, b) in x.iter().zip(want) {
            assert!((a - b).abs() < 1e-15);
        }
    }

    #[test]
    fn run_smoke_and_determinism() {
        let sys = gen_simplex_linear(20, 8, Dist::StdNormal, 2).unwrap();
        let dgf = Dgf::euclidean(8);
        let init = PrimalDualPair::from_dual(&dgf, vec![0.0; 8]).unwrap();
        let c = SolverConfig {
            max_iterations: 5000,
            stop_residual: 1e-8,
            seed: 4,
            ..cfg()
        };
        let a = run(&sys, &dgf, Method::Nbk, &c, init.clone()).unwrap();
        assert!(a.reached_stop);
        assert!(a.records.last().unwrap().residual < 1e-8);
        let b = run(&sys, &dgf, Method::Nbk, &c, init).unwrap();
        let strip = |r: &[Metrics]| {
            r.iter()
                .map(|m| (m.iter, m.residual, m.dist_to_sol))
                .collect::<Vec<_>>()
        };
        assert_eq!(strip(&a.records), strip(&b.records));
    }

    #[test]
    fn bregman_distance_decreases_on_linear_entropy_run() {
        let sys = gen_simplex_linear(30, 10, Dist::StdNormal, 8).unwrap();
        let dgf = Dgf::simplex_entropy(10).unwrap();
        let init = PrimalDualPair::from_dual(&dgf, vec![0.0; 10]).unwrap();
        let c = SolverConfig {
            max_iterations: 300,
            ..cfg()
        };
        let out = run(&sys, &dgf, Method::Nbk, &c, init).unwrap();
        for w in out.records.windows(2) {
            assert!(w[1].bregman_dist.unwrap() <= w[0].bregman_dist.unwrap() + 1e-9);
        }
        assert!(in_simplex(&out.final_pair.x));
    }

    #[test]
    fn configuration_errors() {
        let sys = gen_sparse_quadratic(5, 4, 2, 1).unwrap();
        let dgf = Dgf::euclidean(4);
        let init = PrimalDualPair::from_dual(&dgf, vec![0.0; 4]).unwrap();
        assert!(matches!(
            run(&sys, &dgf, Method::Pnk, &cfg(), init.clone()),
            Err(SolverError::ConfigMismatch(_))
        ));
        assert!(matches!(
            run(&sys, &dgf, Method::Pocs, &cfg(), init.clone()),
            Err(SolverError::ConfigMismatch(_))
        ));
        assert!(matches!(
            run(&sys, &Dgf::euclidean(3), Method::Nbk, &cfg(), init.clone()),
            Err(SolverError::ConfigMismatch(_))
        ));
        let bad = SolverConfig {
            probabilities: Some(vec![0.5; 5]),
            ..cfg()
        };
        assert!(matches!(
            run(&sys, &dgf, Method::Nbk, &bad, init),
            Err(SolverError::InvalidConfig(_))
        ));
        assert_eq!("rnbk".parse::<Method>().unwrap(), Method::Rnbk);
    }

    #[test]
    fn weighted_sampling_only_hits_supported_indices() {
        let sys = gen_simplex_linear(4, 3, Dist::StdNormal, 1).unwrap();
        let c = SolverConfig {
            probabilities: Some(vec![0.0, 1.0, 0.0, 0.0]),
            ..cfg()
        };
        let dgf = Dgf::euclidean(3);
        let init = PrimalDualPair::from_dual(&dgf, vec![0.0; 3]).unwrap();
        let mut st = SolverState::new(&sys, &c, init).unwrap();
        for _ in 0..50 {
            assert_eq!(st.sample_index(), 1);
        }
    }

    #[test]
    fn fixed_points() {
        let sys = gen_lsd(4, 3, 2).unwrap();
        assert!(fixed_point_check(&sys, sys.solution().unwrap(), 1e-12));
        let sys = gen_simplex_linear(10, 5, Dist::StdNormal, 3).unwrap();
        assert!(!fixed_point_check(&sys, &[0.2; 5], 1e-12));
        let q = QuadraticComponent {
            a: vec![2.0],
            b: vec![0.0],
            c: 1.0,
        };
        let sys = QuadraticSystem::new(1, vec![q]).unwrap();
        assert!(fixed_point_check(&sys, &[0.0], 1e-12));
    }
}
