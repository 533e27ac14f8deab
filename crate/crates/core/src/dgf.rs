//! Distance generating functions (DGFs), their convex conjugates and the
//! Bregman distances they induce.
//!
//! A DGF `φ` fixes the geometry of the solver: the mirror map `∇φ*` sends a
//! dual iterate `x*` to a primal iterate `x`, and the closure of `dom ∂φ` is
//! the constraint set. Four families are supported, plus a positive rescaling
//! `c·φ` that the solvers are invariant under:
//!
//! | kind | `φ(x)` | `∇φ*(p)` | σ / norm |
//! |------|--------|----------|----------|
//! | euclidean | `½‖x‖²` | `p` | 1 / ℓ2 |
//! | sparse | `λ‖x‖₁ + ½‖x‖²` | `S_λ(p)` | 1 / ℓ2 |
//! | entropy | `Σ xᵢ log xᵢ` on the simplex | `softmax(p)` | 1 / ℓ1 |
//! | product | `Σ φ_b(x_b)` | blockwise | `min σ_b` / mixed |

use crate::linalg::{dot, norm1, norm2_sq, norm_inf};
use thiserror::Error;

/// Slack on `Σ xᵢ = 1` when testing membership of the simplex.
pub const SIMPLEX_SUM_TOL: f64 = 1e-9;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DgfError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(&'static str),
}

/// Tag for the primal norm a DGF is strongly convex against.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NormKind {
    L2,
    L1,
    /// `‖u‖ = sqrt(Σ_b ‖u_b‖²_(b))` over the product blocks.
    Mixed,
}

/// A distance generating function.
///
/// Prefer the constructors, which validate parameters. All methods are pure.
#[derive(Debug, Clone, PartialEq)]
pub enum Dgf {
    EuclideanHalfSquare { dim: usize },
    L1HalfSquare { lambda: f64, dim: usize },
    SimplexEntropy { dim: usize },
    Product(Vec<Dgf>),
    Scaled { factor: f64, inner: Box<Dgf> },
}

/// Soft shrinkage `S_λ(v)`.
#[inline]
pub fn soft_threshold(v: f64, lambda: f64) -> f64 {
    if v > lambda {
        v - lambda
    } else if v < -lambda {
        v + lambda
    } else {
        0.0
    }
}

/// `log Σ exp(pᵢ)` with the max shift.
pub fn log_sum_exp(p: &[f64]) -> f64 {
    let m = p.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if !m.is_finite() {
        return m;
    }
    m + p.iter().map(|v| (v - m).exp()).sum::<f64>().ln()
}

/// Softmax written into `out`; entries are positive and sum to one.
pub fn softmax_into(p: &[f64], out: &mut [f64]) {
    let m = p.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let mut s = 0.0;
    for (o, v) in out.iter_mut().zip(p) {
        *o = (v - m).exp();
        s += *o;
    }
    for o in out.iter_mut() {
        *o /= s;
    }
}

fn check_dim(expected: usize, got: usize) -> Result<(), DgfError> {
    if expected == got {
        Ok(())
    } else {
        Err(DgfError::DimensionMismatch { expected, got })
    }
}

impl Dgf {
    pub fn euclidean(dim: usize) -> Self {
        Dgf::EuclideanHalfSquare { dim }
    }

    /// `λ‖x‖₁ + ½‖x‖²`; `λ = 0` behaves exactly like [`Dgf::euclidean`].
    pub fn l1_half_square(lambda: f64, dim: usize) -> Result<Self, DgfError> {
        if !(lambda >= 0.0 && lambda.is_finite()) {
            return Err(DgfError::InvalidParameter("lambda must be finite and >= 0"));
        }
        Ok(Dgf::L1HalfSquare { lambda, dim })
    }

    pub fn simplex_entropy(dim: usize) -> Result<Self, DgfError> {
        if dim == 0 {
            return Err(DgfError::InvalidParameter("simplex dimension must be >= 1"));
        }
        Ok(Dgf::SimplexEntropy { dim })
    }

    pub fn product(blocks: Vec<Dgf>) -> Result<Self, DgfError> {
        if blocks.is_empty() {
            return Err(DgfError::InvalidParameter("product needs at least one block"));
        }
        Ok(Dgf::Product(blocks))
    }

    /// `m` copies of the simplex entropy on `Δ^{r-1}`, i.e. left stochastic
    /// `r × m` matrices stored column by column.
    pub fn entropy_columns(r: usize, m: usize) -> Result<Self, DgfError> {
        let block = Dgf::simplex_entropy(r)?;
        Dgf::product(vec![block; m])
    }

    /// `c·φ` for `c > 0`.
    pub fn scaled(self, factor: f64) -> Result<Self, DgfError> {
        if !(factor > 0.0 && factor.is_finite()) {
            return Err(DgfError::InvalidParameter("scale factor must be positive"));
        }
        Ok(Dgf::Scaled {
            factor,
            inner: Box::new(self),
        })
    }

    pub fn dim(&self) -> usize {
        match self {
            Dgf::EuclideanHalfSquare { dim } | Dgf::L1HalfSquare { dim, .. } | Dgf::SimplexEntropy { dim } => *dim,
            Dgf::Product(blocks) => blocks.iter().map(Dgf::dim).sum(),
            Dgf::Scaled { inner, .. } => inner.dim(),
        }
    }

    /// Strong convexity modulus w.r.t. [`Dgf::primal_norm`].
    pub fn sigma(&self) -> f64 {
        match self {
            Dgf::EuclideanHalfSquare { .. } | Dgf::L1HalfSquare { .. } | Dgf::SimplexEntropy { .. } => 1.0,
            Dgf::Product(blocks) => blocks.iter().map(Dgf::sigma).fold(f64::INFINITY, f64::min),
            Dgf::Scaled { factor, inner } => factor * inner.sigma(),
        }
    }

    /// Smoothness constant `M`, when `φ` has a Lipschitz gradient.
    pub fn smoothness(&self) -> Option<f64> {
        match self {
            Dgf::EuclideanHalfSquare { .. } => Some(1.0),
            Dgf::L1HalfSquare { lambda, .. } => (*lambda == 0.0).then_some(1.0),
            Dgf::SimplexEntropy { .. } => None,
            Dgf::Product(blocks) => blocks
                .iter()
                .map(Dgf::smoothness)
                .try_fold(0.0_f64, |acc, m| m.map(|m| acc.max(m))),
            Dgf::Scaled { factor, inner } => inner.smoothness().map(|m| factor * m),
        }
    }

    pub fn primal_norm_kind(&self) -> NormKind {
        match self {
            Dgf::EuclideanHalfSquare { .. } | Dgf::L1HalfSquare { .. } => NormKind::L2,
            Dgf::SimplexEntropy { .. } => NormKind::L1,
            Dgf::Product(_) => NormKind::Mixed,
            Dgf::Scaled { inner, .. } => inner.primal_norm_kind(),
        }
    }

    /// Iterates `(block dgf, range)` for product DGFs; a single block otherwise.
    pub fn blocks(&self) -> Vec<(&Dgf, std::ops::Range<usize>)> {
        match self {
            Dgf::Product(blocks) => {
                let mut start = 0;
                blocks
                    .iter()
                    .map(|b| {
                        let r = start..start + b.dim();
                        start = r.end;
                        (b, r)
                    })
                    .collect()
            }
            _ => vec![(self, 0..self.dim())],
        }
    }

    /// Whether every block lives on a probability simplex.
    pub fn is_simplex_constrained(&self) -> bool {
        match self {
            Dgf::SimplexEntropy { .. } => true,
            Dgf::Product(blocks) => blocks.iter().all(Dgf::is_simplex_constrained),
            Dgf::Scaled { inner, .. } => inner.is_simplex_constrained(),
            _ => false,
        }
    }

    /// `‖v‖` in the DGF's primal norm.
    pub fn primal_norm(&self, v: &[f64]) -> Result<f64, DgfError> {
        check_dim(self.dim(), v.len())?;
        Ok(self.primal_norm_sq_unchecked(v).sqrt())
    }

    fn primal_norm_sq_unchecked(&self, v: &[f64]) -> f64 {
        match self {
            Dgf::EuclideanHalfSquare { .. } | Dgf::L1HalfSquare { .. } => norm2_sq(v),
            Dgf::SimplexEntropy { .. } => norm1(v).powi(2),
            Dgf::Product(_) => self
                .blocks()
                .into_iter()
                .map(|(b, r)| b.primal_norm_sq_unchecked(&v[r]))
                .sum(),
            Dgf::Scaled { inner, .. } => inner.primal_norm_sq_unchecked(v),
        }
    }

    /// `‖g‖_*²` in the dual of the primal norm.
    pub fn dual_norm_sq(&self, g: &[f64]) -> Result<f64, DgfError> {
        check_dim(self.dim(), g.len())?;
        Ok(self.dual_norm_sq_unchecked(g))
    }

    pub(crate) fn dual_norm_sq_unchecked(&self, g: &[f64]) -> f64 {
        match self {
            Dgf::EuclideanHalfSquare { .. } | Dgf::L1HalfSquare { .. } => norm2_sq(g),
            Dgf::SimplexEntropy { .. } => norm_inf(g).powi(2),
            Dgf::Product(_) => self
                .blocks()
                .into_iter()
                .map(|(b, r)| b.dual_norm_sq_unchecked(&g[r]))
                .sum(),
            Dgf::Scaled { inner, .. } => inner.dual_norm_sq_unchecked(g),
        }
    }

    /// `φ(x)`, `+∞` outside the domain.
    pub fn value(&self, x: &[f64]) -> Result<f64, DgfError> {
        check_dim(self.dim(), x.len())?;
        Ok(self.value_unchecked(x))
    }

    fn value_unchecked(&self, x: &[f64]) -> f64 {
        match self {
            Dgf::EuclideanHalfSquare { .. } => 0.5 * norm2_sq(x),
            Dgf::L1HalfSquare { lambda, .. } => lambda * norm1(x) + 0.5 * norm2_sq(x),
            Dgf::SimplexEntropy { .. } => {
                if !in_simplex(x) {
                    return f64::INFINITY;
                }
                x.iter().map(|&v| xlogx(v)).sum()
            }
            Dgf::Product(_) => self.blocks().into_iter().map(|(b, r)| b.value_unchecked(&x[r])).sum(),
            Dgf::Scaled { factor, inner } => factor * inner.value_unchecked(x),
        }
    }

    /// Convex conjugate `φ*(p)`; finite everywhere.
    pub fn conjugate(&self, p: &[f64]) -> Result<f64, DgfError> {
        check_dim(self.dim(), p.len())?;
        Ok(self.conjugate_unchecked(p))
    }

    pub(crate) fn conjugate_unchecked(&self, p: &[f64]) -> f64 {
        match self {
            Dgf::EuclideanHalfSquare { .. } => 0.5 * norm2_sq(p),
            Dgf::L1HalfSquare { lambda, .. } => {
                0.5 * p.iter().map(|&v| soft_threshold(v, *lambda).powi(2)).sum::<f64>()
            }
            Dgf::SimplexEntropy { .. } => log_sum_exp(p),
            Dgf::Product(_) => self
                .blocks()
                .into_iter()
                .map(|(b, r)| b.conjugate_unchecked(&p[r]))
                .sum(),
            Dgf::Scaled { factor, inner } => {
                let q: Vec<f64> = p.iter().map(|v| v / factor).collect();
                factor * inner.conjugate_unchecked(&q)
            }
        }
    }

    /// Mirror map `∇φ*(p)`.
    pub fn conjugate_gradient(&self, p: &[f64]) -> Result<Vec<f64>, DgfError> {
        check_dim(self.dim(), p.len())?;
        let mut out = vec![0.0; p.len()];
        self.conjugate_gradient_into(p, &mut out);
        Ok(out)
    }

    /// Unchecked variant writing into a caller buffer of the same length.
    pub fn conjugate_gradient_into(&self, p: &[f64], out: &mut [f64]) {
        match self {
            Dgf::EuclideanHalfSquare { .. } => out.copy_from_slice(p),
            Dgf::L1HalfSquare { lambda, .. } => {
                for (o, &v) in out.iter_mut().zip(p) {
                    *o = soft_threshold(v, *lambda);
                }
            }
            Dgf::SimplexEntropy { .. } => softmax_into(p, out),
            Dgf::Product(_) => {
                for (b, r) in self.blocks() {
                    b.conjugate_gradient_into(&p[r.clone()], &mut out[r]);
                }
            }
            Dgf::Scaled { factor, inner } => {
                let q: Vec<f64> = p.iter().map(|v| v / factor).collect();
                inner.conjugate_gradient_into(&q, out);
            }
        }
    }

    /// Quadratic form `⟨∇²φ*(p) v, v⟩`, or `None` where `φ*` is not twice
    /// differentiable.
    pub fn conjugate_hessian_form(&self, p: &[f64], v: &[f64]) -> Option<f64> {
        match self {
            Dgf::EuclideanHalfSquare { .. } => Some(norm2_sq(v)),
            Dgf::L1HalfSquare { lambda, .. } => (*lambda == 0.0).then(|| norm2_sq(v)),
            Dgf::SimplexEntropy { .. } => {
                let mut s = vec![0.0; p.len()];
                softmax_into(p, &mut s);
                let mean = dot(&s, v);
                // Variance form keeps the result nonnegative.
                Some(s.iter().zip(v).map(|(si, vi)| si * (vi - mean).powi(2)).sum())
            }
            Dgf::Product(_) => self
                .blocks()
                .into_iter()
                .map(|(b, r)| b.conjugate_hessian_form(&p[r.clone()], &v[r]))
                .sum(),
            Dgf::Scaled { factor, inner } => {
                let q: Vec<f64> = p.iter().map(|w| w / factor).collect();
                inner.conjugate_hessian_form(&q, v).map(|h| h / factor)
            }
        }
    }

    pub fn has_twice_differentiable_conjugate(&self) -> bool {
        match self {
            Dgf::EuclideanHalfSquare { .. } | Dgf::SimplexEntropy { .. } => true,
            Dgf::L1HalfSquare { lambda, .. } => *lambda == 0.0,
            Dgf::Product(blocks) => blocks.iter().all(Dgf::has_twice_differentiable_conjugate),
            Dgf::Scaled { inner, .. } => inner.has_twice_differentiable_conjugate(),
        }
    }

    /// `∇φ(x)` where `φ` is differentiable; `None` otherwise (outside the
    /// relative interior, or at kinks of the ℓ1 term).
    pub fn gradient(&self, x: &[f64]) -> Option<Vec<f64>> {
        if x.len() != self.dim() {
            return None;
        }
        match self {
            Dgf::EuclideanHalfSquare { .. } => Some(x.to_vec()),
            Dgf::L1HalfSquare { lambda, .. } => {
                if *lambda == 0.0 {
                    return Some(x.to_vec());
                }
                x.iter().map(|&v| (v != 0.0).then(|| v + lambda * v.signum())).collect()
            }
            Dgf::SimplexEntropy { .. } => {
                if !in_simplex(x) || x.iter().any(|&v| v <= 0.0) {
                    return None;
                }
                Some(x.iter().map(|v| 1.0 + v.ln()).collect())
            }
            Dgf::Product(_) => {
                let mut out = Vec::with_capacity(x.len());
                for (b, r) in self.blocks() {
                    out.extend(b.gradient(&x[r])?);
                }
                Some(out)
            }
            Dgf::Scaled { factor, inner } => inner.gradient(x).map(|g| g.into_iter().map(|v| factor * v).collect()),
        }
    }

    /// `D_φ^{x*}(x, y) = φ*(x*) − ⟨x*, y⟩ + φ(y)`, `+∞` for `y ∉ dom φ`.
    pub fn bregman_distance(&self, pair: &PrimalDualPair, y: &[f64]) -> Result<f64, DgfError> {
        check_dim(self.dim(), pair.x_star.len())?;
        check_dim(self.dim(), y.len())?;
        Ok(self.bregman_from_dual(&pair.x_star, y))
    }

    /// Same as [`Dgf::bregman_distance`] but only needs the dual point.
    ///
    /// Each family uses a rearrangement of the conjugate formula whose
    /// summands are individually nonnegative, which avoids cancellation.
    pub fn bregman_from_dual(&self, x_star: &[f64], y: &[f64]) -> f64 {
        match self {
            Dgf::EuclideanHalfSquare { .. } => 0.5 * x_star.iter().zip(y).map(|(p, v)| (p - v).powi(2)).sum::<f64>(),
            Dgf::L1HalfSquare { lambda, .. } => x_star
                .iter()
                .zip(y)
                .map(|(&p, &v)| {
                    let s = soft_threshold(p, *lambda);
                    if s != 0.0 {
                        0.5 * (s - v).powi(2) + lambda * (v.abs() - s.signum() * v)
                    } else {
                        0.5 * v * v + lambda * v.abs() - p * v
                    }
                })
                .sum(),
            Dgf::SimplexEntropy { .. } => {
                if !in_simplex(y) {
                    return f64::INFINITY;
                }
                let lse = log_sum_exp(x_star);
                y.iter()
                    .zip(x_star)
                    .map(|(&v, &p)| if v == 0.0 { 0.0 } else { v * (v.ln() - (p - lse)) })
                    .sum()
            }
            Dgf::Product(_) => self
                .blocks()
                .into_iter()
                .map(|(b, r)| b.bregman_from_dual(&x_star[r.clone()], &y[r]))
                .sum(),
            Dgf::Scaled { factor, inner } => {
                let q: Vec<f64> = x_star.iter().map(|w| w / factor).collect();
                factor * inner.bregman_from_dual(&q, y)
            }
        }
    }
}

#[inline]
fn xlogx(v: f64) -> f64 {
    if v == 0.0 {
        0.0
    } else {
        v * v.ln()
    }
}

/// Closed simplex membership with [`SIMPLEX_SUM_TOL`] slack on the sum.
pub fn in_simplex(x: &[f64]) -> bool {
    x.iter().all(|&v| v >= 0.0 && v.is_finite()) && (x.iter().sum::<f64>() - 1.0).abs() <= SIMPLEX_SUM_TOL
}

/// An iterate `(x, x*)` with `x = ∇φ*(x*)`.
#[derive(Debug, Clone, PartialEq)]
pub struct PrimalDualPair {
    pub x: Vec<f64>,
    pub x_star: Vec<f64>,
}

impl PrimalDualPair {
    /// Builds the pair from a dual point; the primal point is always derived.
    pub fn from_dual(dgf: &Dgf, x_star: Vec<f64>) -> Result<Self, DgfError> {
        let x = dgf.conjugate_gradient(&x_star)?;
        Ok(PrimalDualPair { x, x_star })
    }

    /// Pair for a point where `φ` is differentiable, using `x* = ∇φ(x)`.
    pub fn from_primal(dgf: &Dgf, x: &[f64]) -> Option<Self> {
        let x_star = dgf.gradient(x)?;
        PrimalDualPair::from_dual(dgf, x_star).ok()
    }

    /// Recomputes `x` from `x*`.
    pub fn sync_primal(&mut self, dgf: &Dgf) {
        dgf.conjugate_gradient_into(&self.x_star, &mut self.x);
    }

    /// Largest entrywise gap between `x` and `∇φ*(x*)`.
    pub fn reconstruction_error(&self, dgf: &Dgf) -> f64 {
        let mut x = vec![0.0; self.x.len()];
        dgf.conjugate_gradient_into(&self.x_star, &mut x);
        x.iter().zip(&self.x).fold(0.0, |m, (a, b)| m.max((a - b).abs()))
    }

    pub fn dim(&self) -> usize {
        self.x.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const TOL: f64 = 1e-12;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn value_examples() {
        assert!(close(Dgf::euclidean(2).value(&[3.0, 4.0]).unwrap(), 12.5, TOL));
        let ent = Dgf::simplex_entropy(2).unwrap();
        assert!(close(ent.value(&[0.5, 0.5]).unwrap(), -std::f64::consts::LN_2, TOL));
        let l1 = Dgf::l1_half_square(2.0, 2).unwrap();
        assert!(close(l1.value(&[1.0, -1.0]).unwrap(), 5.0, TOL));
    }

    #[test]
    fn entropy_domain() {
        let ent = Dgf::simplex_entropy(3).unwrap();
        assert_eq!(ent.value(&[1.0, 0.0, 0.0]).unwrap(), 0.0);
        assert!(ent.value(&[1.1, -0.1, 0.0]).unwrap().is_infinite());
        assert!(ent.value(&[0.5, 0.5, 0.1]).unwrap().is_infinite());
        assert!(ent.value(&[0.5, 0.5, 5e-10]).unwrap().is_finite());
    }

    #[test]
    fn conjugate_examples() {
        let ent = Dgf::simplex_entropy(3).unwrap();
        assert!(close(ent.conjugate(&[0.0; 3]).unwrap(), 3f64.ln(), TOL));
        let l1 = Dgf::l1_half_square(1.0, 3).unwrap();
        assert!(close(l1.conjugate(&[2.0, 0.5, -3.0]).unwrap(), 2.5, TOL));
        assert!(close(Dgf::euclidean(2).conjugate(&[1.0, 2.0]).unwrap(), 2.5, TOL));
    }

    #[test]
    fn conjugate_gradient_examples() {
        let l1 = Dgf::l1_half_square(1.0, 3).unwrap();
        assert_eq!(l1.conjugate_gradient(&[2.0, 0.5, -3.0]).unwrap(), vec![1.0, 0.0, -2.0]);
        let ent = Dgf::simplex_entropy(3).unwrap();
        for v in ent.conjugate_gradient(&[0.0; 3]).unwrap() {
            assert!(close(v, 1.0 / 3.0, TOL));
        }
        assert_eq!(
            Dgf::euclidean(2).conjugate_gradient(&[1.0, 2.0]).unwrap(),
            vec![1.0, 2.0]
        );
    }

    #[test]
    fn softmax_survives_huge_arguments() {
        let ent = Dgf::simplex_entropy(3).unwrap();
        let x = ent.conjugate_gradient(&[1000.0, 999.0, -1000.0]).unwrap();
        assert!(x.iter().all(|v| v.is_finite()));
        assert!(close(x.iter().sum::<f64>(), 1.0, TOL));
        assert!(ent.conjugate(&[1000.0, 0.0, 0.0]).unwrap().is_finite());
    }

    #[test]
    fn bregman_examples() {
        let euc = Dgf::euclidean(2);
        let pair = PrimalDualPair::from_dual(&euc, vec![0.0, 0.0]).unwrap();
        assert!(close(euc.bregman_distance(&pair, &[3.0, 4.0]).unwrap(), 12.5, TOL));

        let ent = Dgf::simplex_entropy(2).unwrap();
        let pair = PrimalDualPair::from_primal(&ent, &[0.5, 0.5]).unwrap();
        let d = ent.bregman_distance(&pair, &[1.0, 0.0]).unwrap();
        assert!(close(d, std::f64::consts::LN_2, TOL));
        assert!(ent.bregman_distance(&pair, &[0.5, 0.5]).unwrap().abs() <= TOL);
        assert!(ent.bregman_distance(&pair, &[0.7, 0.7]).unwrap().is_infinite());

        let l1 = Dgf::l1_half_square(1.5, 3).unwrap();
        let pair = PrimalDualPair::from_dual(&l1, vec![2.0, -0.3, -4.0]).unwrap();
        let x = pair.x.clone();
        assert!(l1.bregman_distance(&pair, &x).unwrap().abs() <= TOL);
    }

    #[test]
    fn bregman_matches_plain_conjugate_formula() {
        let l1 = Dgf::l1_half_square(0.7, 3).unwrap();
        let p = [1.3, -0.2, -2.5];
        let y = [0.4, 0.9, -1.1];
        let pair = PrimalDualPair::from_dual(&l1, p.to_vec()).unwrap();
        let direct = l1.conjugate(&p).unwrap() - dot(&p, &y) + l1.value(&y).unwrap();
        assert!(close(l1.bregman_distance(&pair, &y).unwrap(), direct, 1e-12));
    }

    #[test]
    fn dual_norm_examples() {
        let ent = Dgf::simplex_entropy(3).unwrap();
        assert_eq!(ent.dual_norm_sq(&[1.0, -3.0, 2.0]).unwrap(), 9.0);
        assert_eq!(Dgf::euclidean(2).dual_norm_sq(&[3.0, 4.0]).unwrap(), 25.0);
        let prod = Dgf::entropy_columns(2, 2).unwrap();
        assert_eq!(prod.dual_norm_sq(&[1.0, 0.0, 0.0, -2.0]).unwrap(), 5.0);
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        let e = Dgf::euclidean(3);
        assert_eq!(
            e.value(&[1.0]),
            Err(DgfError::DimensionMismatch { expected: 3, got: 1 })
        );
        assert!(e.conjugate(&[1.0]).is_err());
        assert!(e.conjugate_gradient(&[1.0]).is_err());
        assert!(e.dual_norm_sq(&[1.0]).is_err());
    }

    #[test]
    fn metadata() {
        assert_eq!(Dgf::euclidean(2).smoothness(), Some(1.0));
        assert_eq!(Dgf::l1_half_square(1.0, 2).unwrap().smoothness(), None);
        assert_eq!(Dgf::l1_half_square(0.0, 2).unwrap().smoothness(), Some(1.0));
        assert_eq!(Dgf::simplex_entropy(2).unwrap().primal_norm_kind(), NormKind::L1);
        let mixed = Dgf::product(vec![Dgf::euclidean(2), Dgf::euclidean(1).scaled(0.5).unwrap()]).unwrap();
        assert_eq!(mixed.sigma(), 0.5);
        assert_eq!(mixed.dim(), 3);
        assert!(Dgf::l1_half_square(-1.0, 2).is_err());
    }

    #[test]
    fn zero_lambda_matches_euclidean() {
        let l1 = Dgf::l1_half_square(0.0, 3).unwrap();
        let e = Dgf::euclidean(3);
        let p = [0.3, -1.2, 4.0];
        assert_eq!(l1.conjugate(&p), e.conjugate(&p));
        assert_eq!(l1.conjugate_gradient(&p), e.conjugate_gradient(&p));
        assert_eq!(l1.value(&p), e.value(&p));
    }
}
