//! One-dimensional dual problems behind a Bregman projection onto a
//! hyperplane.
//!
//! Projecting `x = ∇φ*(x*)` onto `H(α, β) = {y : ⟨α, y⟩ = β}` amounts to
//! minimizing the convex scalar function
//!
//! ```text
//! g(t) = φ*(x* − tα) + tβ,     g'(t) = β − ⟨∇φ*(x* − tα), α⟩
//! ```
//!
//! and setting `x₊* = x* − t̂α`. This module evaluates `g`, solves for `t̂`
//! (exactly for the sparse DGF, by Newton variants or bisection otherwise),
//! decides whether `H` meets the relative interior of a simplex domain, and
//! provides the closed-form relaxed step used when it does not.

use crate::dgf::{Dgf, PrimalDualPair};
use crate::linalg::{dot, norm2_sq};
use thiserror::Error;

/// Tolerance for testing `α = c·𝟙` in the feasibility checks.
pub const CONSTANT_TOL: f64 = 1e-12;
/// Default index mask threshold for the feasibility checks.
pub const DEFAULT_MASK_DELTA: f64 = 1e-12;
/// Curvature below which a Newton step is refused.
pub const MIN_CURVATURE: f64 = 1e-15;
/// Bracket width at which bisection stops regardless of `eps`.
pub const BISECTION_MIN_WIDTH: f64 = 1e-14;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LineSearchError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("hyperplane normal is zero")]
    ZeroDirection,
    #[error("dual derivative never changes sign")]
    InfeasibleDirection,
    #[error("curvature vanished at t = {t}")]
    ZeroCurvature { t: f64 },
    #[error("conjugate is not twice differentiable")]
    NotTwiceDifferentiable,
    #[error("iterate left the trust range (t = {t}); use the relaxed step")]
    RelaxedFallback { t: f64 },
    #[error("no sign change of g' found within the bracket cap")]
    NoBracket,
    #[error("no index survived the mask")]
    EmptyMask,
    #[error("gradient is zero")]
    ZeroGradient,
}

/// `H(α, β) = {y : ⟨α, y⟩ = β}`.
#[derive(Debug, Clone, PartialEq)]
pub struct Hyperplane {
    pub alpha: Vec<f64>,
    pub beta: f64,
}

impl Hyperplane {
    /// Zero set of the linearization `f + ⟨∇f, y − x⟩` of a component at `x`,
    /// i.e. `β = ⟨∇f, x⟩ − f`.
    pub fn linearization(grad: Vec<f64>, x: &[f64], f: f64) -> Self {
        let beta = dot(&grad, x) - f;
        Hyperplane { alpha: grad, beta }
    }

    /// `⟨α, y⟩ − β`; equals the component value when `y` is the
    /// linearization point.
    pub fn residual_at(&self, y: &[f64]) -> f64 {
        dot(&self.alpha, y) - self.beta
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LineSearchConfig {
    /// Stop once `|g'(t)| < eps`.
    pub eps: f64,
    pub max_iters: usize,
    /// Constant `H` of the globalized Newton damping `H·sqrt|g'|`.
    pub globalization_h: f64,
    /// Globalized Newton gives up once `|t|` exceeds this; also caps the
    /// bisection bracket.
    pub fallback_t_threshold: f64,
}

impl Default for LineSearchConfig {
    fn default() -> Self {
        LineSearchConfig {
            eps: 1e-9,
            max_iters: 100,
            globalization_h: 0.1,
            fallback_t_threshold: 100.0,
        }
    }
}

/// Value and derivatives of `g` at one `t`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GEval {
    pub value: f64,
    pub first: f64,
    /// Present when `φ*` is twice differentiable.
    pub second: Option<f64>,
}

/// Result of an iterative scalar solve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StepSolve {
    pub t: f64,
    pub converged: bool,
    pub iterations: usize,
}

fn check_len(expected: usize, got: usize) -> Result<(), LineSearchError> {
    if expected == got {
        Ok(())
    } else {
        Err(LineSearchError::DimensionMismatch { expected, got })
    }
}

/// Evaluates `g`, `g'` and (where available) `g''` at `t`.
pub fn g_eval(dgf: &Dgf, pair: &PrimalDualPair, hyperplane: &Hyperplane, t: f64) -> GEval {
    let p: Vec<f64> = pair
        .x_star
        .iter()
        .zip(&hyperplane.alpha)
        .map(|(s, a)| s - t * a)
        .collect();
    let mut y = vec![0.0; p.len()];
    dgf.conjugate_gradient_into(&p, &mut y);
    GEval {
        value: dgf.conjugate_unchecked(&p) + t * hyperplane.beta,
        first: hyperplane.beta - dot(&y, &hyperplane.alpha),
        second: dgf.conjugate_hessian_form(&p, &hyperplane.alpha),
    }
}

fn g_prime(dgf: &Dgf, pair: &PrimalDualPair, hyperplane: &Hyperplane, t: f64, buf: &mut [f64]) -> f64 {
    let p: Vec<f64> = pair
        .x_star
        .iter()
        .zip(&hyperplane.alpha)
        .map(|(s, a)| s - t * a)
        .collect();
    dgf.conjugate_gradient_into(&p, buf);
    hyperplane.beta - dot(buf, &hyperplane.alpha)
}

/// Exact minimizer of `t ↦ ½‖S_λ(x* − tα)‖² + βt`.
///
/// `g'` is continuous, piecewise linear and nondecreasing with kinks at
/// `(x*ᵢ ∓ λ)/αᵢ`. The kinks are sorted once and walked starting from
/// `t = 0` in the direction of descent, updating value and slope
/// incrementally, so the cost is `O(d log d)`. When the zero set of `g'` is
/// an interval its midpoint is returned.
pub fn exact_sorted_solve(lambda: f64, x_star: &[f64], alpha: &[f64], beta: f64) -> Result<f64, LineSearchError> {
    check_len(x_star.len(), alpha.len())?;
    if alpha.iter().all(|&a| a == 0.0) {
        return Err(LineSearchError::ZeroDirection);
    }
    let g0 = beta
        - x_star
            .iter()
            .zip(alpha)
            .map(|(&p, &a)| a * crate::dgf::soft_threshold(p, lambda))
            .sum::<f64>();
    if g0 == 0.0 {
        return Ok(0.0);
    }
    // Walking left on (α, β) is walking right on (−α, −β).
    let sign = if g0 < 0.0 { 1.0 } else { -1.0 };
    walk_right(lambda, x_star, alpha, beta, sign, sign * g0).map(|tau| sign * tau)
}

struct Kink {
    tau: f64,
    slope_delta: f64,
    active_delta: isize,
}

fn walk_right(lambda: f64, p: &[f64], alpha: &[f64], beta: f64, sign: f64, h0: f64) -> Result<f64, LineSearchError> {
    let beta = sign * beta;
    let mut kinks = Vec::with_capacity(2 * p.len());
    let mut slope = 0.0;
    let mut active: isize = 0;
    for (&pi, &ai) in p.iter().zip(alpha) {
        let a = sign * ai;
        if a == 0.0 {
            continue;
        }
        let (b1, b2) = ((pi - lambda) / a, (pi + lambda) / a);
        let (lo, hi) = if b1 <= b2 { (b1, b2) } else { (b2, b1) };
        let a2 = a * a;
        if lo > 0.0 || hi <= 0.0 {
            slope += a2;
            active += 1;
        }
        if lo > 0.0 {
            kinks.push(Kink {
                tau: lo,
                slope_delta: -a2,
                active_delta: -1,
            });
        }
        if hi > 0.0 {
            kinks.push(Kink {
                tau: hi,
                slope_delta: a2,
                active_delta: 1,
            });
        }
    }
    kinks.sort_by(|a, b| a.tau.total_cmp(&b.tau));

    let mut tau = 0.0;
    let mut v = h0;
    let mut k = 0;
    while k < kinks.len() {
        let e = kinks[k].tau;
        let v_e = if active == 0 { beta } else { v + slope * (e - tau) };
        if v_e >= 0.0 {
            let root = (tau - v / slope).min(e);
            if beta == 0.0 {
                // g' ≡ β on stretches where every component is shrunk to 0.
                let mut j = k;
                let mut act = active;
                while j < kinks.len() && kinks[j].tau == e {
                    act += kinks[j].active_delta;
                    j += 1;
                }
                if act == 0 && j < kinks.len() {
                    return Ok(0.5 * (e + kinks[j].tau));
                }
            }
            return Ok(root);
        }
        tau = e;
        v = v_e;
        while k < kinks.len() && kinks[k].tau == e {
            slope += kinks[k].slope_delta;
            active += kinks[k].active_delta;
            k += 1;
        }
        if active == 0 {
            slope = 0.0;
            v = beta;
        }
    }
    if active == 0 || slope <= 0.0 {
        return Err(LineSearchError::InfeasibleDirection);
    }
    Ok(tau - v / slope)
}

/// Newton's method on `g` started from the euclidean step `f/‖α‖₂²`.
///
/// Reports `converged = false` after `max_iters` rather than looping and
/// fails with [`LineSearchError::ZeroCurvature`] when `g''` collapses.
pub fn newton_solve(
    dgf: &Dgf,
    pair: &PrimalDualPair,
    hyperplane: &Hyperplane,
    cfg: &LineSearchConfig,
) -> Result<StepSolve, LineSearchError> {
    damped_newton(dgf, pair, hyperplane, cfg, 0.0, None)
}

/// Globalized Newton `t ← t − g'/(H·sqrt|g'| + g'')`.
///
/// Returns [`LineSearchError::RelaxedFallback`] as soon as an iterate leaves
/// `[−T, T]`, `T = cfg.fallback_t_threshold`. With `H = 0` the iteration is
/// plain Newton.
pub fn globalized_newton_solve(
    dgf: &Dgf,
    pair: &PrimalDualPair,
    hyperplane: &Hyperplane,
    cfg: &LineSearchConfig,
) -> Result<StepSolve, LineSearchError> {
    damped_newton(
        dgf,
        pair,
        hyperplane,
        cfg,
        cfg.globalization_h,
        Some(cfg.fallback_t_threshold),
    )
}

fn damped_newton(
    dgf: &Dgf,
    pair: &PrimalDualPair,
    hyperplane: &Hyperplane,
    cfg: &LineSearchConfig,
    h: f64,
    threshold: Option<f64>,
) -> Result<StepSolve, LineSearchError> {
    check_len(pair.dim(), hyperplane.alpha.len())?;
    if !dgf.has_twice_differentiable_conjugate() {
        return Err(LineSearchError::NotTwiceDifferentiable);
    }
    let a2 = norm2_sq(&hyperplane.alpha);
    if a2 == 0.0 {
        return Err(LineSearchError::ZeroDirection);
    }
    let mut t = hyperplane.residual_at(&pair.x) / a2;
    for it in 0..=cfg.max_iters {
        let g = g_eval(dgf, pair, hyperplane, t);
        if g.first.abs() < cfg.eps {
            return Ok(StepSolve {
                t,
                converged: true,
                iterations: it,
            });
        }
        if let Some(limit) = threshold {
            if t.abs() > limit {
                return Err(LineSearchError::RelaxedFallback { t });
            }
        }
        if it == cfg.max_iters {
            break;
        }
        let curvature = g.second.ok_or(LineSearchError::NotTwiceDifferentiable)?;
        let denom = h * g.first.abs().sqrt() + curvature;
        if denom < MIN_CURVATURE {
            return Err(LineSearchError::ZeroCurvature { t });
        }
        t -= g.first / denom;
        if !t.is_finite() {
            return Ok(StepSolve {
                t,
                converged: false,
                iterations: it + 1,
            });
        }
    }
    Ok(StepSolve {
        t,
        converged: false,
        iterations: cfg.max_iters,
    })
}

/// Bisection on `g'` after bracketing by doubling from `t = 0`.
///
/// The bracket grows `1, 2, 4, …` up to `cfg.fallback_t_threshold`; no sign
/// change by then is reported as [`LineSearchError::NoBracket`]. Stops when
/// `|g'| < eps` or the bracket is narrower than [`BISECTION_MIN_WIDTH`].
pub fn bisection_solve(
    dgf: &Dgf,
    pair: &PrimalDualPair,
    hyperplane: &Hyperplane,
    cfg: &LineSearchConfig,
) -> Result<StepSolve, LineSearchError> {
    check_len(pair.dim(), hyperplane.alpha.len())?;
    if hyperplane.alpha.iter().all(|&a| a == 0.0) {
        return Err(LineSearchError::ZeroDirection);
    }
    let mut buf = vec![0.0; pair.dim()];
    let g0 = g_prime(dgf, pair, hyperplane, 0.0, &mut buf);
    if g0 == 0.0 || g0.abs() < cfg.eps {
        return Ok(StepSolve {
            t: 0.0,
            converged: true,
            iterations: 0,
        });
    }
    let dir = if g0 < 0.0 { 1.0 } else { -1.0 };
    let cap = cfg.fallback_t_threshold;
    // `inner` keeps the sign of g(0)', `outer` has the opposite (or zero) sign.
    let mut inner = 0.0;
    let mut width = 1.0_f64.min(cap);
    let mut iterations = 0;
    let outer = loop {
        iterations += 1;
        let t = dir * width;
        let g = g_prime(dgf, pair, hyperplane, t, &mut buf);
        if dir * g >= 0.0 {
            break t;
        }
        if width >= cap {
            return Err(LineSearchError::NoBracket);
        }
        inner = t;
        width = (2.0 * width).min(cap);
    };
    let (mut lo, mut hi) = (inner, outer);
    loop {
        iterations += 1;
        let mid = 0.5 * (lo + hi);
        let g = g_prime(dgf, pair, hyperplane, mid, &mut buf);
        if g.abs() < cfg.eps || (hi - lo).abs() < BISECTION_MIN_WIDTH || mid == lo || mid == hi {
            return Ok(StepSolve {
                t: mid,
                converged: true,
                iterations,
            });
        }
        if dir * g < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
}

fn masked_range(alpha: &[f64], keep: impl Fn(usize) -> bool) -> Option<(f64, f64)> {
    alpha
        .iter()
        .enumerate()
        .filter(|(i, _)| keep(*i))
        .fold(None, |acc, (_, &a)| match acc {
            None => Some((a, a)),
            Some((lo, hi)) => Some((lo.min(a), hi.max(a))),
        })
}

/// Whether `H(α, β)` meets the open simplex, judged on indices where
/// `|mask_pointᵢ| > delta`: either `α = β𝟙` or `α_r < β < α_s` for some
/// `r, s`.
pub fn simplex_feasible(alpha: &[f64], beta: f64, mask_point: &[f64], delta: f64) -> Result<bool, LineSearchError> {
    check_len(alpha.len(), mask_point.len())?;
    let (lo, hi) = masked_range(alpha, |i| mask_point[i].abs() > delta).ok_or(LineSearchError::EmptyMask)?;
    if (lo - beta).abs() <= CONSTANT_TOL && (hi - beta).abs() <= CONSTANT_TOL {
        return Ok(true);
    }
    Ok(lo < beta && beta < hi)
}

/// Feasibility of `⟨α₁, x⟩ + ⟨α₂, y⟩ = β` for `x, y` in the open simplex,
/// using the joint mask `|xᵢ| > δ and |yᵢ| > δ`.
pub fn double_simplex_feasible(
    alpha1: &[f64],
    alpha2: &[f64],
    beta: f64,
    mask_x: &[f64],
    mask_y: &[f64],
    delta: f64,
) -> Result<bool, LineSearchError> {
    let d = alpha1.len();
    check_len(d, alpha2.len())?;
    check_len(d, mask_x.len())?;
    check_len(d, mask_y.len())?;
    let keep = |i: usize| mask_x[i].abs() > delta && mask_y[i].abs() > delta;
    let r1 = masked_range(alpha1, keep).ok_or(LineSearchError::EmptyMask)?;
    let r2 = masked_range(alpha2, keep).ok_or(LineSearchError::EmptyMask)?;
    let constant = |(lo, hi): (f64, f64)| (hi - lo <= CONSTANT_TOL).then_some(0.5 * (lo + hi));

    for ((lo_i, hi_i), (lo_j, hi_j)) in [(r1, r2), (r2, r1)] {
        if let Some(c) = constant((lo_i, hi_i)) {
            let target = beta - c;
            if (lo_j - target).abs() <= CONSTANT_TOL && (hi_j - target).abs() <= CONSTANT_TOL {
                return Ok(true);
            }
            if lo_j < target && target < hi_j {
                return Ok(true);
            }
        }
        let lo = lo_i.max(beta - hi_j);
        let hi = hi_i.min(beta - lo_j);
        if lo < hi {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Decides whether the projection onto `hyperplane` is defined for `dgf` at
/// the primal point `x`.
///
/// Unconstrained DGFs only need `α ≠ 0`. Simplex blocks use
/// [`simplex_feasible`] or [`double_simplex_feasible`] depending on how many
/// blocks the normal touches; with more blocks the attainable values of
/// `⟨α, x⟩` form the open interval `]Σ min α_b, Σ max α_b[`.
pub fn hyperplane_meets_domain(dgf: &Dgf, hyperplane: &Hyperplane, x: &[f64], delta: f64) -> bool {
    let alpha = &hyperplane.alpha;
    let beta = hyperplane.beta;
    match dgf {
        Dgf::Scaled { inner, .. } => hyperplane_meets_domain(inner, hyperplane, x, delta),
        Dgf::SimplexEntropy { .. } => simplex_feasible(alpha, beta, x, delta).unwrap_or(false),
        Dgf::Product(_) => {
            let blocks = dgf.blocks();
            let active: Vec<_> = blocks
                .iter()
                .filter(|(_, r)| alpha[r.clone()].iter().any(|&a| a != 0.0))
                .collect();
            if active.is_empty() {
                return false;
            }
            if active.iter().any(|(b, _)| !b.is_simplex_constrained()) {
                return true;
            }
            match active.as_slice() {
                [(_, r)] => simplex_feasible(&alpha[r.clone()], beta, &x[r.clone()], delta).unwrap_or(false),
                [(_, r1), (_, r2)] if r1.len() == r2.len() => double_simplex_feasible(
                    &alpha[r1.clone()],
                    &alpha[r2.clone()],
                    beta,
                    &x[r1.clone()],
                    &x[r2.clone()],
                    delta,
                )
                .unwrap_or(false),
                _ => {
                    let mut lo = 0.0;
                    let mut hi = 0.0;
                    for (_, r) in &active {
                        let xs = &x[r.clone()];
                        match masked_range(&alpha[r.clone()], |i| xs[i].abs() > delta) {
                            Some((a, b)) => {
                                lo += a;
                                hi += b;
                            }
                            None => return false,
                        }
                    }
                    if hi - lo <= CONSTANT_TOL * active.len() as f64 {
                        (beta - 0.5 * (lo + hi)).abs() <= CONSTANT_TOL * active.len() as f64
                    } else {
                        lo < beta && beta < hi
                    }
                }
            }
        }
        _ => alpha.iter().any(|&a| a != 0.0),
    }
}

/// Polyak-like relaxed step `σ f / ‖∇f‖_*²` with `σ` taken from the DGF.
pub fn relaxed_step(dgf: &Dgf, f_value: f64, grad: &[f64]) -> Result<f64, LineSearchError> {
    relaxed_step_with_sigma(dgf.sigma(), dgf, f_value, grad)
}

/// [`relaxed_step`] with an explicit `σ`.
pub fn relaxed_step_with_sigma(sigma: f64, dgf: &Dgf, f_value: f64, grad: &[f64]) -> Result<f64, LineSearchError> {
    check_len(dgf.dim(), grad.len())?;
    let n = dgf.dual_norm_sq_unchecked(grad);
    if n == 0.0 {
        return Err(LineSearchError::ZeroGradient);
    }
    Ok(sigma * f_value / n)
}
