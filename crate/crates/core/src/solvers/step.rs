use super::{FallbackReason, SolverConfig, StepKind, StepReport};
use crate::dgf::{Dgf, PrimalDualPair};
use crate::linalg::{axpy, dot, norm2_sq};
use crate::linesearch::{
    bisection_solve, exact_sorted_solve, globalized_newton_solve, hyperplane_meets_domain, newton_solve,
    relaxed_step_with_sigma, Hyperplane, LineSearchConfig, LineSearchError,
};
use crate::problems::{simplex_projection_into, LinearSystem, LsdSystem, NonlinearSystem};

fn skipped(index: usize, f: f64) -> StepReport {
    StepReport {
        index,
        f,
        t: 0.0,
        kind: StepKind::Skipped,
        fallback: None,
    }
}

/// Evaluates component `i` at `x` and applies the zero guards.
fn linearize<S: NonlinearSystem + ?Sized>(sys: &S, x: &[f64], i: usize, zero_tol: f64) -> Result<(f64, Vec<f64>), f64> {
    let f = sys.value(i, x);
    if f.abs() <= zero_tol {
        return Err(f);
    }
    let g = sys.gradient(i, x);
    if norm2_sq(&g).sqrt() <= zero_tol {
        return Err(f);
    }
    Ok((f, g))
}

fn apply_dual_step(dgf: &Dgf, pair: &mut PrimalDualPair, t: f64, alpha: &[f64]) {
    axpy(-t, alpha, &mut pair.x_star);
    pair.sync_primal(dgf);
}

/// Exact line search for DGFs with a closed-form solver.
fn exact_step(dgf: &Dgf, x_star: &[f64], hp: &Hyperplane) -> Option<Result<f64, LineSearchError>> {
    match dgf {
        Dgf::EuclideanHalfSquare { .. } => Some(exact_sorted_solve(0.0, x_star, &hp.alpha, hp.beta)),
        Dgf::L1HalfSquare { lambda, .. } => Some(exact_sorted_solve(*lambda, x_star, &hp.alpha, hp.beta)),
        _ => None,
    }
}

fn reason_of(err: &LineSearchError) -> FallbackReason {
    match err {
        LineSearchError::RelaxedFallback { .. } => FallbackReason::RelaxedFallback,
        LineSearchError::NoBracket => FallbackReason::NoBracket,
        LineSearchError::ZeroCurvature { .. } => FallbackReason::ZeroCurvature,
        LineSearchError::InfeasibleDirection | LineSearchError::EmptyMask => FallbackReason::Infeasible,
        _ => FallbackReason::SolverError,
    }
}

/// Step size of the Bregman projection onto `hp`, or the reason it could
/// not be computed.
///
/// Escalation: closed form where available; otherwise Newton, then
/// globalized Newton for twice differentiable conjugates and bisection for
/// the rest. Bisection also takes over when globalized Newton runs out of
/// iterations without crossing the `|t|` threshold. Scaled DGFs are solved
/// through their inner DGF.
///
/// With `cfg.check_feasibility` off, infeasible hyperplanes are only
/// detected by the line search itself, e.g. by the `|t|` threshold.
pub fn projection_step(
    dgf: &Dgf,
    pair: &PrimalDualPair,
    hp: &Hyperplane,
    cfg: &SolverConfig,
) -> Result<f64, FallbackReason> {
    if cfg.check_feasibility && !hyperplane_meets_domain(dgf, hp, &pair.x, cfg.feasibility_delta) {
        return Err(FallbackReason::Infeasible);
    }
    solve_step(dgf, pair, hp, &cfg.linesearch)
}

fn solve_step(dgf: &Dgf, pair: &PrimalDualPair, hp: &Hyperplane, ls: &LineSearchConfig) -> Result<f64, FallbackReason> {
    if let Dgf::Scaled { factor, inner } = dgf {
        // g for c·φ at x* is c·g_φ(t/c) at x*/c. Solving for t/c keeps the
        // |t| thresholds independent of c.
        let inner_pair = PrimalDualPair {
            x: pair.x.clone(),
            x_star: pair.x_star.iter().map(|v| v / factor).collect(),
        };
        return solve_step(inner, &inner_pair, hp, ls).map(|t| t * factor);
    }
    if let Some(r) = exact_step(dgf, &pair.x_star, hp) {
        return r.map_err(|e| reason_of(&e));
    }
    if dgf.has_twice_differentiable_conjugate() {
        if let Ok(s) = newton_solve(dgf, pair, hp, ls) {
            if s.converged {
                return Ok(s.t);
            }
        }
        match globalized_newton_solve(dgf, pair, hp, ls) {
            Ok(s) if s.converged => return Ok(s.t),
            Ok(_) => {}
            Err(e) => return Err(reason_of(&e)),
        }
    }
    bisection_solve(dgf, pair, hp, ls)
        .map(|s| s.t)
        .map_err(|e| reason_of(&e))
}

/// One NBK step on component `i`.
pub fn nbk_step_at<S: NonlinearSystem + ?Sized>(
    sys: &S,
    dgf: &Dgf,
    cfg: &SolverConfig,
    pair: &mut PrimalDualPair,
    i: usize,
) -> StepReport {
    let (f, grad) = match linearize(sys, &pair.x, i, cfg.zero_tolerance) {
        Ok(v) => v,
        Err(f) => return skipped(i, f),
    };
    let hp = Hyperplane::linearization(grad, &pair.x, f);
    let (t, kind, fallback) = match projection_step(dgf, pair, &hp, cfg) {
        Ok(t) => (t, StepKind::Exact, None),
        Err(reason) => match relaxed_step_with_sigma(cfg.sigma_for(dgf), dgf, f, &hp.alpha) {
            Ok(t) => (t, StepKind::Relaxed, Some(reason)),
            Err(_) => return skipped(i, f),
        },
    };
    apply_dual_step(dgf, pair, t, &hp.alpha);
    StepReport {
        index: i,
        f,
        t,
        kind,
        fallback,
    }
}

/// One relaxed NBK step on component `i`.
pub fn rnbk_step_at<S: NonlinearSystem + ?Sized>(
    sys: &S,
    dgf: &Dgf,
    cfg: &SolverConfig,
    pair: &mut PrimalDualPair,
    i: usize,
) -> StepReport {
    let (f, grad) = match linearize(sys, &pair.x, i, cfg.zero_tolerance) {
        Ok(v) => v,
        Err(f) => return skipped(i, f),
    };
    let t = match relaxed_step_with_sigma(cfg.sigma_for(dgf), dgf, f, &grad) {
        Ok(t) => t,
        Err(_) => return skipped(i, f),
    };
    apply_dual_step(dgf, pair, t, &grad);
    StepReport {
        index: i,
        f,
        t,
        kind: StepKind::Relaxed,
        fallback: None,
    }
}

/// Euclidean nonlinear Kaczmarz `x ← x − f/‖∇f‖² ∇f`. Keeps `x* = x`.
pub fn nk_step_at<S: NonlinearSystem + ?Sized>(
    sys: &S,
    cfg: &SolverConfig,
    pair: &mut PrimalDualPair,
    i: usize,
) -> StepReport {
    let (f, grad) = match linearize(sys, &pair.x, i, cfg.zero_tolerance) {
        Ok(v) => v,
        Err(f) => return skipped(i, f),
    };
    let t = f / norm2_sq(&grad);
    axpy(-t, &grad, &mut pair.x);
    pair.x_star.copy_from_slice(&pair.x);
    StepReport {
        index: i,
        f,
        t,
        kind: StepKind::Exact,
        fallback: None,
    }
}

/// Hyperplane projection for row `i` followed by the simplex projection.
pub fn pocs_step_at(sys: &LinearSystem, cfg: &SolverConfig, x: &mut [f64], i: usize) -> StepReport {
    let row = sys.row(i);
    let f = dot(row, x) - sys.rhs()[i];
    let a2 = norm2_sq(row);
    if f.abs() <= cfg.zero_tolerance || a2.sqrt() <= cfg.zero_tolerance {
        return skipped(i, f);
    }
    let t = f / a2;
    let mut y = x.to_vec();
    axpy(-t, row, &mut y);
    simplex_projection_into(&y, x);
    StepReport {
        index: i,
        f,
        t,
        kind: StepKind::Exact,
        fallback: None,
    }
}

/// Projected nonlinear Kaczmarz on the pair `(i, j)` encoded by `c`.
///
/// For `i = j` column `i` is projected onto the linearization hyperplane and
/// then onto the simplex. For `i ≠ j` both columns are moved simultaneously,
/// `X_i ← X_i − t X_j` and `X_j ← X_j − t X_i` with
/// `t = f/(‖X_i‖² + ‖X_j‖²)`, then each is projected onto the simplex.
pub fn pnk_step_at(sys: &LsdSystem, cfg: &SolverConfig, x: &mut [f64], c: usize) -> StepReport {
    let r = sys.rows();
    let (i, j) = sys.pair_of(c);
    let f = sys.value(c, x);
    if f.abs() <= cfg.zero_tolerance {
        return skipped(c, f);
    }
    let xi = sys.column(x, i).to_vec();
    if i == j {
        let alpha: Vec<f64> = xi.iter().map(|v| 2.0 * v).collect();
        let a2 = norm2_sq(&alpha);
        if a2.sqrt() <= cfg.zero_tolerance {
            return skipped(c, f);
        }
        let beta = norm2_sq(&xi) + sys.target(i, i);
        let t = (dot(&alpha, &xi) - beta) / a2;
        let mut y = xi;
        axpy(-t, &alpha, &mut y);
        simplex_projection_into(&y, &mut x[i * r..(i + 1) * r]);
        return StepReport {
            index: c,
            f,
            t,
            kind: StepKind::Exact,
            fallback: None,
        };
    }
    let xj = sys.column(x, j).to_vec();
    let denom = norm2_sq(&xi) + norm2_sq(&xj);
    if denom <= cfg.zero_tolerance {
        return skipped(c, f);
    }
    let t = f / denom;
    let mut yi = xi.clone();
    axpy(-t, &xj, &mut yi);
    let mut yj = xj;
    axpy(-t, &xi, &mut yj);
    simplex_projection_into(&yi, &mut x[i * r..(i + 1) * r]);
    simplex_projection_into(&yj, &mut x[j * r..(j + 1) * r]);
    StepReport {
        index: c,
        f,
        t,
        kind: StepKind::Exact,
        fallback: None,
    }
}
