use super::{ExperimentSpec, Family};
use crate::problems::Dist;

pub const PRESET_NAMES: [&str; 8] = ["fig1", "fig2", "fig3", "fig4", "fig5", "fig6", "fig7", "fig8"];

fn spec(
    id: &str,
    family: Family,
    (rows, cols): (usize, usize),
    repeats: usize,
    max_iterations: usize,
) -> ExperimentSpec {
    ExperimentSpec {
        id: id.to_owned(),
        repeats,
        max_iterations,
        record_every: (max_iterations / 500).max(1),
        ..ExperimentSpec::new(family, rows, cols)
    }
}

/// Named experiment bundles. Desk scale shrinks dimensions about tenfold;
/// `full_scale` uses the original sizes.
///
/// | name | family | desk | full | repeats |
/// |------|--------|------|------|---------|
/// | fig1 | sparse-quadratic, nnz 5/50, λ = 10 | 100×50 | 1000×500 | 20 |
/// | fig2 | sparse-quadratic, nnz 5, λ ∈ {2, 5} | 25×50 | 50×100 | 50 |
/// | fig3 | simplex-linear, N(0,1) | 50×20, 20×50 | 500×200, 200×500 | 50 |
/// | fig4 | simplex-linear, U[0,1] and U[0.9,1] | 20×50 | 200×500 | 50 |
/// | fig5 | simplex-linear, U[0,1], eps ∈ {1e-9, 1e-5} | 20×50 | 200×500 | 50 |
/// | fig6 | lsd | 10×5 | 100×50 | 50 |
/// | fig7 | lsd | 5×10 | 50×100 | 50 |
/// | fig8 | lsd, no feasibility test | 3×20 | 3×100 | 10 |
pub fn preset(name: &str, full_scale: bool) -> Option<Vec<ExperimentSpec>> {
    let s = |desk: (usize, usize), full: (usize, usize)| if full_scale { full } else { desk };
    let iters = |desk: usize| if full_scale { 10 * desk } else { desk };
    let specs = match name {
        "fig1" => vec![ExperimentSpec {
            nnz: if full_scale { 50 } else { 5 },
            lambda: 10.0,
            ..spec(
                "fig1",
                Family::SparseQuadratic,
                s((100, 50), (1000, 500)),
                20,
                iters(20_000),
            )
        }],
        "fig2" => [2.0, 5.0]
            .into_iter()
            .map(|lambda| ExperimentSpec {
                nnz: 5,
                lambda,
                ..spec(
                    &format!("fig2-lambda{lambda}"),
                    Family::SparseQuadratic,
                    s((25, 50), (50, 100)),
                    50,
                    iters(20_000),
                )
            })
            .collect(),
        "fig3" => [s((50, 20), (500, 200)), s((20, 50), (200, 500))]
            .into_iter()
            .map(|dims| ExperimentSpec {
                dist: Dist::StdNormal,
                ..spec(
                    &format!("fig3-{}x{}", dims.0, dims.1),
                    Family::SimplexLinear,
                    dims,
                    50,
                    iters(20_000),
                )
            })
            .collect(),
        "fig4" => [Dist::Unif01, Dist::Unif09]
            .into_iter()
            .map(|dist| ExperimentSpec {
                dist,
                ..spec(
                    &format!("fig4-{dist}"),
                    Family::SimplexLinear,
                    s((20, 50), (200, 500)),
                    50,
                    iters(20_000),
                )
            })
            .collect(),
        "fig5" => [1e-9, 1e-5]
            .into_iter()
            .map(|eps| ExperimentSpec {
                dist: Dist::Unif01,
                eps,
                ..spec(
                    &format!("fig5-eps{eps:e}"),
                    Family::SimplexLinear,
                    s((20, 50), (200, 500)),
                    50,
                    iters(20_000),
                )
            })
            .collect(),
        "fig6" => vec![spec("fig6", Family::Lsd, s((10, 5), (100, 50)), 50, iters(5_000))],
        "fig7" => vec![spec("fig7", Family::Lsd, s((5, 10), (50, 100)), 50, iters(20_000))],
        // Few rows make the line search ill-conditioned; infeasible
        // hyperplanes are left to the globalized Newton threshold.
        "fig8" => vec![ExperimentSpec {
            check_feasibility: false,
            ..spec("fig8", Family::Lsd, s((3, 20), (3, 100)), 10, iters(40_000))
        }],
        _ => return None,
    };
    Some(specs)
}
