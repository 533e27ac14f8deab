//! Randomized Bregman-Kaczmarz solvers for constrained nonlinear systems
//! `f(x) = 0, x ∈ C`.
//!
//! Each iteration samples one component `fᵢ`, linearizes it at the current
//! iterate and takes a Bregman projection onto the resulting hyperplane. The
//! geometry, and with it the constraint set `C`, comes from a distance
//! generating function ([`dgf::Dgf`]).
//!
//! - [`dgf`]: distance generating functions, conjugates, Bregman distances.
//! - [`linesearch`]: the scalar dual problem behind each projection.
//! - [`problems`]: component oracles, generators, simplex projection.
//! - [`solvers`]: NBK, relaxed NBK and the euclidean baselines.
//! - [`harness`]: experiment driver, quantile summaries, CSV output.
//! - [`par`]: parallel helpers with a sequential fallback.

pub mod dgf;
pub mod harness;
pub mod linesearch;
pub mod par;
pub mod problems;
pub mod rng;
pub mod solvers;

mod linalg;
