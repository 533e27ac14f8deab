use bregman_kaczmarz::harness::{run_experiment, ExperimentSpec, Family};
use bregman_kaczmarz::par::Execution;
use bregman_kaczmarz::problems::{gen_sparse_quadratic, NonlinearSystem};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn repeats(c: &mut Criterion) {
    let mut group = c.benchmark_group("run_experiment");
    group.sample_size(10);
    for family in [Family::SparseQuadratic, Family::SimplexLinear, Family::Lsd] {
        let (rows, cols) = family.default_dims(false);
        let spec = ExperimentSpec {
            repeats: 8,
            max_iterations: 2000,
            record_every: 100,
            timing: false,
            ..ExperimentSpec::new(family, rows, cols)
        };
        for (name, execution) in MODES {
            let spec = ExperimentSpec {
                execution,
                ..spec.clone()
            };
            group.bench_with_input(BenchmarkId::new(name, family), &spec, |b, s| {
                b.iter(|| run_experiment(black_box(s)).unwrap())
            });
        }
    }
    group.finish();
}

fn residuals(c: &mut Criterion) {
    let mut group = c.benchmark_group("residual_norm");
    for (n, d) in [(200, 100), (1000, 200)] {
        let sys = gen_sparse_quadratic(n, d, 5, 0).unwrap();
        let x = vec![0.5; d];
        for (name, execution) in MODES {
            group.bench_with_input(BenchmarkId::new(name, format!("{n}x{d}")), &x, |b, x| {
                b.iter(|| sys.residual_norm(black_box(x), execution))
            });
        }
    }
    group.finish();
}

criterion_group!(benches, repeats, residuals);
criterion_main!(benches);
