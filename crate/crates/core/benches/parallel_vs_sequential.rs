//! Sequential vs. data-parallel execution of the main workloads.
//!
//! Build with `--no-default-features` to see the sequential fallback for
//! both arms; with the default `parallel` feature the `parallel` arm runs
//! on the global rayon pool.

use std::hint::black_box;
use std::time::Duration;

use cancel_spectral::enumerate::{
    cancellative_classes, verify_lambda1, verify_spectral_extremal, SpectralOptions,
};
use cancel_spectral::spectral::{solve_p_spectral, SolverConfig};
use cancel_spectral::{turan3, Exec, UniformHypergraph};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("cancellative_classes");
    group.sample_size(10).measurement_time(Duration::from_secs(10));
    for n in [6usize, 7] {
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, n), &n, |b, &n| {
                b.iter(|| cancellative_classes(black_box(n), exec).unwrap())
            });
        }
    }
    group.finish();
}

fn multistart_solver(c: &mut Criterion) {
    // A non-symmetric cancellative graph so every start does real work.
    let g = UniformHypergraph::new(
        7,
        [[0, 1, 2], [0, 1, 3], [0, 4, 5], [1, 4, 6], [2, 3, 4], [2, 5, 6]],
    )
    .unwrap();
    let mut group = c.benchmark_group("solve_p_spectral_32_starts");
    for p in [2.0, 3.0] {
        for (name, exec) in MODES {
            let mut cfg = SolverConfig::new(p).with_exec(exec);
            cfg.restarts = 32;
            group.bench_with_input(BenchmarkId::new(name, p), &g, |b, g| {
                b.iter(|| solve_p_spectral(black_box(g), &cfg).unwrap())
            });
        }
    }
    let t = turan3(12).unwrap();
    for (name, exec) in MODES {
        let mut cfg = SolverConfig::new(3.0).with_exec(exec);
        cfg.restarts = 32;
        group.bench_with_input(BenchmarkId::new(format!("{name}/T3(12)"), 3.0), &t, |b, g| {
            b.iter(|| solve_p_spectral(black_box(g), &cfg).unwrap())
        });
    }
    group.finish();
}

fn campaigns(c: &mut Criterion) {
    let mut group = c.benchmark_group("campaigns");
    group.sample_size(10).measurement_time(Duration::from_secs(15));
    for (name, exec) in MODES {
        let cfg = SolverConfig::new(1.0).with_exec(exec);
        group.bench_function(BenchmarkId::new("lambda1", name), |b| {
            b.iter(|| verify_lambda1(black_box(6), usize::MAX, &cfg).unwrap())
        });
    }
    for (name, exec) in MODES {
        let cfg = SolverConfig::new(3.0).with_exec(exec);
        group.bench_function(BenchmarkId::new("spectral_n6", name), |b| {
            b.iter(|| {
                verify_spectral_extremal(black_box(6), 3.0, &cfg, SpectralOptions::default())
                    .unwrap()
            })
        });
    }
    group.finish();
}

criterion_group! {
    name = benches;
    config = Criterion::default().configure_from_args();
    targets = enumeration, multistart_solver, campaigns
}
criterion_main!(benches);
