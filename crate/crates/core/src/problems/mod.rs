//! Component oracles for `f: ℝ^d → ℝ^n` and the problem families used in
//! the experiments.
//!
//! Components are indexed from 0. [`NonlinearSystem`] methods do not check
//! bounds; [`eval_component`] and [`grad_component`] do.

mod linear;
mod lsd;
mod quadratic;
mod simplex;

pub use linear::{gen_simplex_linear, gen_simplex_linear_with, Dist, LinearSystem};
pub use lsd::{gen_lsd, gen_lsd_with, LsdSystem};
pub use quadratic::{gen_sparse_quadratic, gen_sparse_quadratic_with, QuadraticComponent, QuadraticSystem};
pub use simplex::{sample_simplex_uniform, simplex_projection, simplex_projection_into};

use crate::par::{self, Execution};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ProblemError {
    #[error("component index {index} out of range for {n} components")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub trait NonlinearSystem: Sync {
    fn n_components(&self) -> usize;

    fn dim(&self) -> usize;

    /// `fᵢ(x)`.
    fn value(&self, i: usize, x: &[f64]) -> f64;

    /// Writes `∇fᵢ(x)` into `out`, overwriting it.
    fn gradient_into(&self, i: usize, x: &[f64], out: &mut [f64]);

    fn gradient(&self, i: usize, x: &[f64]) -> Vec<f64> {
        let mut g = vec![0.0; self.dim()];
        self.gradient_into(i, x, &mut g);
        g
    }

    /// Planted solution, when known.
    fn solution(&self) -> Option<&[f64]> {
        None
    }

    /// `(f₀(x), …, f_{n−1}(x))`.
    fn residual_vector(&self, x: &[f64], exec: Execution) -> Vec<f64> {
        par::map_indices(exec, self.n_components(), |i| self.value(i, x))
    }

    /// `‖f(x)‖₂`, summed in index order so both execution modes agree.
    fn residual_norm(&self, x: &[f64], exec: Execution) -> f64 {
        self.residual_vector(x, exec).iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    fn as_linear(&self) -> Option<&LinearSystem> {
        None
    }

    fn as_lsd(&self) -> Option<&LsdSystem> {
        None
    }
}

fn check_call<S: NonlinearSystem + ?Sized>(sys: &S, i: usize, x: &[f64]) -> Result<(), ProblemError> {
    if i >= sys.n_components() {
        return Err(ProblemError::IndexOutOfRange {
            index: i,
            n: sys.n_components(),
        });
    }
    if x.len() != sys.dim() {
        return Err(ProblemError::DimensionMismatch {
            expected: sys.dim(),
            got: x.len(),
        });
    }
    Ok(())
}

pub fn eval_component<S: NonlinearSystem + ?Sized>(sys: &S, i: usize, x: &[f64]) -> Result<f64, ProblemError> {
    check_call(sys, i, x)?;
    Ok(sys.value(i, x))
}

pub fn grad_component<S: NonlinearSystem + ?Sized>(sys: &S, i: usize, x: &[f64]) -> Result<Vec<f64>, ProblemError> {
    check_call(sys, i, x)?;
    Ok(sys.gradient(i, x))
}

/// `fᵢ⁺ = max(fᵢ, 0)` with the gradient of `fᵢ` where `fᵢ > 0` and zero
/// elsewhere.
#[derive(Debug, Clone)]
pub struct PositivePart<S>(pub S);

impl<S: NonlinearSystem> NonlinearSystem for PositivePart<S> {
    fn n_components(&self) -> usize {
        self.0.n_components()
    }

    fn dim(&self) -> usize {
        self.0.dim()
    }

    fn value(&self, i: usize, x: &[f64]) -> f64 {
        self.0.value(i, x).max(0.0)
    }

    fn gradient_into(&self, i: usize, x: &[f64], out: &mut [f64]) {
        if self.0.value(i, x) > 0.0 {
            self.0.gradient_into(i, x, out);
        } else {
            out.fill(0.0);
        }
    }

    fn solution(&self) -> Option<&[f64]> {
        self.0.solution()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn checked_oracles() {
        let sys = LinearSystem::new(vec![1.0, 0.0], vec![1.0], 1, 2).unwrap();
        assert_eq!(eval_component(&sys, 0, &[0.0, 0.0]).unwrap(), -1.0);
        assert_eq!(grad_component(&sys, 0, &[0.0, 0.0]).unwrap(), vec![1.0, 0.0]);
        assert!(matches!(
            eval_component(&sys, 1, &[0.0, 0.0]),
            Err(ProblemError::IndexOutOfRange { index: 1, n: 1 })
        ));
        assert!(matches!(
            grad_component(&sys, 0, &[0.0]),
            Err(ProblemError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn positive_part_clips() {
        let sys = PositivePart(LinearSystem::new(vec![1.0, 0.0], vec![1.0], 1, 2).unwrap());
        assert_eq!(sys.value(0, &[0.0, 0.0]), 0.0);
        assert_eq!(sys.gradient(0, &[0.0, 0.0]), vec![0.0, 0.0]);
        assert_eq!(sys.value(0, &[3.0, 0.0]), 2.0);
        assert_eq!(sys.gradient(0, &[3.0, 0.0]), vec![1.0, 0.0]);
    }

    #[test]
    fn residual_norm_modes_agree() {
        let sys = gen_simplex_linear(30, 10, Dist::StdNormal, 3).unwrap();
        let x = vec![0.1; 10];
        let a = sys.residual_norm(&x, Execution::Sequential);
        let b = sys.residual_norm(&x, Execution::Parallel);
        assert_eq!(a.to_bits(), b.to_bits());
    }
}
