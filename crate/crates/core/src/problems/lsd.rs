use super::{sample_simplex_uniform, NonlinearSystem, ProblemError};
use crate::linalg::dot;
use crate::rng::{seeded_rng, PROBLEM};
use rand::Rng;

/// Left stochastic decomposition `XᵀX = A` with `X ∈ ℝ^{r×m}`.
///
/// The variable is stored column-major, column `j` at `x[j·r..(j+1)·r]`.
/// Component `c` is the pair `(i, j) = (c / m, c % m)` with
/// `f_{ij}(X) = ⟨X_i, X_j⟩ − A_{ij}`.
#[derive(Debug, Clone, PartialEq)]
pub struct LsdSystem {
    r: usize,
    m: usize,
    a: Vec<f64>,
    solution: Option<Vec<f64>>,
}

impl LsdSystem {
    pub fn new(r: usize, m: usize, a: Vec<f64>) -> Result<Self, ProblemError> {
        if a.len() != m * m {
            return Err(ProblemError::DimensionMismatch {
                expected: m * m,
                got: a.len(),
            });
        }
        Ok(LsdSystem {
            r,
            m,
            a,
            solution: None,
        })
    }

    pub fn with_solution(mut self, x: Vec<f64>) -> Result<Self, ProblemError> {
        if x.len() != self.r * self.m {
            return Err(ProblemError::DimensionMismatch {
                expected: self.r * self.m,
                got: x.len(),
            });
        }
        self.solution = Some(x);
        Ok(self)
    }

    pub fn rows(&self) -> usize {
        self.r
    }

    pub fn cols(&self) -> usize {
        self.m
    }

    pub fn target(&self, i: usize, j: usize) -> f64 {
        self.a[i * self.m + j]
    }

    pub fn pair_of(&self, c: usize) -> (usize, usize) {
        (c / self.m, c % self.m)
    }

    pub fn column<'a>(&self, x: &'a [f64], j: usize) -> &'a [f64] {
        &x[j * self.r..(j + 1) * self.r]
    }
}

impl NonlinearSystem for LsdSystem {
    fn n_components(&self) -> usize {
        self.m * self.m
    }

    fn dim(&self) -> usize {
        self.r * self.m
    }

    fn value(&self, c: usize, x: &[f64]) -> f64 {
        let (i, j) = self.pair_of(c);
        dot(self.column(x, i), self.column(x, j)) - self.target(i, j)
    }

    fn gradient_into(&self, c: usize, x: &[f64], out: &mut [f64]) {
        let (i, j) = self.pair_of(c);
        let r = self.r;
        out.fill(0.0);
        if i == j {
            for (o, v) in out[i * r..(i + 1) * r].iter_mut().zip(self.column(x, i)) {
                *o = 2.0 * v;
            }
        } else {
            out[i * r..(i + 1) * r].copy_from_slice(self.column(x, j));
            out[j * r..(j + 1) * r].copy_from_slice(self.column(x, i));
        }
    }

    fn solution(&self) -> Option<&[f64]> {
        self.solution.as_deref()
    }

    fn as_lsd(&self) -> Option<&LsdSystem> {
        Some(self)
    }
}

/// `A = X̂ᵀX̂` for a left stochastic `X̂` with uniform simplex columns.
pub fn gen_lsd(r: usize, m: usize, seed: u64) -> Result<LsdSystem, ProblemError> {
    gen_lsd_with(r, m, &mut seeded_rng(seed, 0, PROBLEM))
}

pub fn gen_lsd_with<R: Rng + ?Sized>(r: usize, m: usize, rng: &mut R) -> Result<LsdSystem, ProblemError> {
    if r == 0 || m == 0 {
        return Err(ProblemError::InvalidParameter("r and m must be positive".into()));
    }
    let x: Vec<f64> = (0..m).flat_map(|_| sample_simplex_uniform(r, rng)).collect();
    let mut a = vec![0.0; m * m];
    for i in 0..m {
        for j in i..m {
            let v = dot(&x[i * r..(i + 1) * r], &x[j * r..(j + 1) * r]);
            a[i * m + j] = v;
            a[j * m + i] = v;
        }
    }
    LsdSystem::new(r, m, a)?.with_solution(x)
}
