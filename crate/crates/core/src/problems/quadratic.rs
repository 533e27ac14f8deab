use super::{NonlinearSystem, ProblemError};
use crate::linalg::dot;
use crate::rng::{seeded_rng, PROBLEM};
use rand::Rng;
use rand_distr::StandardNormal;

/// `f(x) = ½⟨x, Ax⟩ + ⟨b, x⟩ + c` with a dense row-major `A` that need not be
/// symmetric.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadraticComponent {
    pub a: Vec<f64>,
    pub b: Vec<f64>,
    pub c: f64,
}

impl QuadraticComponent {
    fn value(&self, x: &[f64]) -> f64 {
        let d = x.len();
        let quad: f64 = self.a.chunks_exact(d).zip(x).map(|(row, xi)| xi * dot(row, x)).sum();
        0.5 * quad + dot(&self.b, x) + self.c
    }

    fn gradient_into(&self, x: &[f64], out: &mut [f64]) {
        let d = x.len();
        out.copy_from_slice(&self.b);
        for (r, row) in self.a.chunks_exact(d).enumerate() {
            out[r] += 0.5 * dot(row, x);
            let h = 0.5 * x[r];
            for (o, a) in out.iter_mut().zip(row) {
                *o += h * a;
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct QuadraticSystem {
    d: usize,
    components: Vec<QuadraticComponent>,
    solution: Option<Vec<f64>>,
}

impl QuadraticSystem {
    pub fn new(d: usize, components: Vec<QuadraticComponent>) -> Result<Self, ProblemError> {
        for q in &components {
            if q.a.len() != d * d {
                return Err(ProblemError::DimensionMismatch {
                    expected: d * d,
                    got: q.a.len(),
                });
            }
            if q.b.len() != d {
                return Err(ProblemError::DimensionMismatch {
                    expected: d,
                    got: q.b.len(),
                });
            }
        }
        Ok(QuadraticSystem {
            d,
            components,
            solution: None,
        })
    }

    pub fn with_solution(mut self, x: Vec<f64>) -> Result<Self, ProblemError> {
        if x.len() != self.d {
            return Err(ProblemError::DimensionMismatch {
                expected: self.d,
                got: x.len(),
            });
        }
        self.solution = Some(x);
        Ok(self)
    }

    pub fn components(&self) -> &[QuadraticComponent] {
        &self.components
    }
}

impl NonlinearSystem for QuadraticSystem {
    fn n_components(&self) -> usize {
        self.components.len()
    }

    fn dim(&self) -> usize {
        self.d
    }

    fn value(&self, i: usize, x: &[f64]) -> f64 {
        self.components[i].value(x)
    }

    fn gradient_into(&self, i: usize, x: &[f64], out: &mut [f64]) {
        self.components[i].gradient_into(x, out);
    }

    fn solution(&self) -> Option<&[f64]> {
        self.solution.as_deref()
    }
}

/// `n` random quadratics in `d` variables sharing a planted `x̂` with `nnz`
/// standard normal entries on a uniformly drawn support.
pub fn gen_sparse_quadratic(n: usize, d: usize, nnz: usize, seed: u64) -> Result<QuadraticSystem, ProblemError> {
    gen_sparse_quadratic_with(n, d, nnz, &mut seeded_rng(seed, 0, PROBLEM))
}

pub fn gen_sparse_quadratic_with<R: Rng + ?Sized>(
    n: usize,
    d: usize,
    nnz: usize,
    rng: &mut R,
) -> Result<QuadraticSystem, ProblemError> {
    if d == 0 || n == 0 {
        return Err(ProblemError::InvalidParameter("n and d must be positive".into()));
    }
    if nnz > d {
        return Err(ProblemError::InvalidParameter(format!("nnz = {nnz} exceeds d = {d}")));
    }
    let mut x_hat = vec![0.0; d];
    for k in rand::seq::index::sample(rng, d, nnz) {
        x_hat[k] = loop {
            let v: f64 = rng.sample(StandardNormal);
            if v != 0.0 {
                break v;
            }
        };
    }
    let components = (0..n)
        .map(|_| {
            let a: Vec<f64> = (0..d * d).map(|_| rng.sample(StandardNormal)).collect();
            let b: Vec<f64> = (0..d).map(|_| rng.sample(StandardNormal)).collect();
            let mut q = QuadraticComponent { a, b, c: 0.0 };
            q.c = -q.value(&x_hat);
            q
        })
        .collect();
    QuadraticSystem::new(d, components)?.with_solution(x_hat)
}
