use super::{sample_simplex_uniform, NonlinearSystem, ProblemError};
use crate::linalg::dot;
use crate::rng::{seeded_rng, PROBLEM};
use rand::Rng;
use rand_distr::{Distribution, StandardNormal, Uniform};
use std::fmt;
use std::io::{BufRead, Write};
use std::path::Path;
use std::str::FromStr;

/// Entry distribution of a random linear system.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dist {
    /// `N(0, 1)`
    StdNormal,
    /// `U([0, 1])`
    Unif01,
    /// `U([0.9, 1])`
    Unif09,
}

impl FromStr for Dist {
    type Err = ProblemError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "stdn" => Ok(Dist::StdNormal),
            "u01" => Ok(Dist::Unif01),
            "u09" => Ok(Dist::Unif09),
            other => Err(ProblemError::InvalidParameter(format!(
                "unknown distribution `{other}` (expected stdn, u01 or u09)"
            ))),
        }
    }
}

impl fmt::Display for Dist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Dist::StdNormal => "stdn",
            Dist::Unif01 => "u01",
            Dist::Unif09 => "u09",
        })
    }
}

/// `fᵢ(x) = ⟨aᵢ, x⟩ − bᵢ` with `A` stored dense row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearSystem {
    n: usize,
    d: usize,
    a: Vec<f64>,
    b: Vec<f64>,
    solution: Option<Vec<f64>>,
}

impl LinearSystem {
    pub fn new(a: Vec<f64>, b: Vec<f64>, n: usize, d: usize) -> Result<Self, ProblemError> {
        if a.len() != n * d {
            return Err(ProblemError::DimensionMismatch {
                expected: n * d,
                got: a.len(),
            });
        }
        if b.len() != n {
            return Err(ProblemError::DimensionMismatch {
                expected: n,
                got: b.len(),
            });
        }
        Ok(LinearSystem {
            n,
            d,
            a,
            b,
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

    pub fn row(&self, i: usize) -> &[f64] {
        &self.a[i * self.d..(i + 1) * self.d]
    }

    pub fn rhs(&self) -> &[f64] {
        &self.b
    }

    /// Reads the plain-text format: `n d`, then `n` rows of `A`, then `b`.
    pub fn read_text<R: BufRead>(reader: R) -> Result<Self, ProblemError> {
        let mut tokens = Vec::new();
        for line in reader.lines() {
            let line = line?;
            tokens.extend(line.split_whitespace().map(str::to_owned));
        }
        let mut it = tokens.into_iter();
        let mut next_usize = |what: &str| -> Result<usize, ProblemError> {
            it.next()
                .ok_or_else(|| ProblemError::Parse(format!("missing {what}")))?
                .parse()
                .map_err(|e| ProblemError::Parse(format!("{what}: {e}")))
        };
        let n = next_usize("row count")?;
        let d = next_usize("column count")?;
        let values: Vec<f64> = it
            .map(|t| t.parse::<f64>().map_err(|e| ProblemError::Parse(format!("`{t}`: {e}"))))
            .collect::<Result<_, _>>()?;
        if values.len() != n * d + n {
            return Err(ProblemError::Parse(format!(
                "expected {} numbers after the header, found {}",
                n * d + n,
                values.len()
            )));
        }
        let (a, b) = values.split_at(n * d);
        LinearSystem::new(a.to_vec(), b.to_vec(), n, d)
    }

    pub fn write_text<W: Write>(&self, mut w: W) -> Result<(), ProblemError> {
        writeln!(w, "{} {}", self.n, self.d)?;
        for i in 0..self.n {
            let row: Vec<String> = self.row(i).iter().map(|v| format!("{v:e}")).collect();
            writeln!(w, "{}", row.join(" "))?;
        }
        let b: Vec<String> = self.b.iter().map(|v| format!("{v:e}")).collect();
        writeln!(w, "{}", b.join(" "))?;
        Ok(())
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self, ProblemError> {
        let f = std::fs::File::open(path)?;
        Self::read_text(std::io::BufReader::new(f))
    }

    pub fn store(&self, path: impl AsRef<Path>) -> Result<(), ProblemError> {
        let f = std::fs::File::create(path)?;
        let mut w = std::io::BufWriter::new(f);
        self.write_text(&mut w)?;
        w.flush()?;
        Ok(())
    }
}

impl NonlinearSystem for LinearSystem {
    fn n_components(&self) -> usize {
        self.n
    }

    fn dim(&self) -> usize {
        self.d
    }

    fn value(&self, i: usize, x: &[f64]) -> f64 {
        dot(self.row(i), x) - self.b[i]
    }

    fn gradient_into(&self, i: usize, _x: &[f64], out: &mut [f64]) {
        out.copy_from_slice(self.row(i));
    }

    fn solution(&self) -> Option<&[f64]> {
        self.solution.as_deref()
    }

    fn as_linear(&self) -> Option<&LinearSystem> {
        Some(self)
    }
}

/// Random `A` with i.i.d. entries from `dist` and `b = A x̂` for `x̂` uniform
/// on the simplex.
pub fn gen_simplex_linear(n: usize, d: usize, dist: Dist, seed: u64) -> Result<LinearSystem, ProblemError> {
    gen_simplex_linear_with(n, d, dist, &mut seeded_rng(seed, 0, PROBLEM))
}

pub fn gen_simplex_linear_with<R: Rng + ?Sized>(
    n: usize,
    d: usize,
    dist: Dist,
    rng: &mut R,
) -> Result<LinearSystem, ProblemError> {
    if n == 0 || d == 0 {
        return Err(ProblemError::InvalidParameter("n and d must be positive".into()));
    }
    let a: Vec<f64> = match dist {
        Dist::StdNormal => (0..n * d).map(|_| rng.sample(StandardNormal)).collect(),
        Dist::Unif01 => {
            let u = Uniform::new_inclusive(0.0, 1.0).expect("valid range");
            (0..n * d).map(|_| u.sample(rng)).collect()
        }
        Dist::Unif09 => {
            let u = Uniform::new_inclusive(0.9, 1.0).expect("valid range");
            (0..n * d).map(|_| u.sample(rng)).collect()
        }
    };
    let x_hat = sample_simplex_uniform(d, rng);
    let b = (0..n).map(|i| dot(&a[i * d..(i + 1) * d], &x_hat)).collect();
    LinearSystem::new(a, b, n, d)?.with_solution(x_hat)
}
