//! Sequential vs rayon execution of the heavy kernels and a small sweep.
//!
//! Build without default features to compare against a binary with no rayon
//! at all: `cargo bench --no-default-features`.

use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use unitcodes::code::{DualSearch, LinearCode, DEFAULT_BUDGET};
use unitcodes::verify::{self, Span, SweepConfig};
use unitcodes::{Exec, RingSpec, UnitGraph};

const MODES: [(&str, Exec); 2] = [
    ("sequential", Exec::Sequential),
    ("parallel", Exec::Parallel),
];

fn graph(n: u64, m: u64) -> UnitGraph {
    UnitGraph::build(RingSpec::new(n, m).unwrap())
}

fn min_distance(c: &mut Criterion) {
    let mut group = c.benchmark_group("min_distance");
    group.sample_size(10);
    for (n, m, r) in [(5, 5, 2), (3, 4, 3), (7, 2, 3)] {
        let code = LinearCode::from_incidence(&graph(n, m), r).unwrap();
        for (name, exec) in MODES {
            group.bench_with_input(
                BenchmarkId::new(name, format!("{n}x{m}_gf{r}")),
                &code,
                |b, code| b.iter(|| black_box(code.min_distance_with(DEFAULT_BUDGET, exec))),
            );
        }
    }
    group.finish();
}

fn invariants(c: &mut Criterion) {
    let mut group = c.benchmark_group("invariants");
    group.sample_size(10);
    for (n, m) in [(9, 11), (8, 21)] {
        let g = graph(n, m);
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, format!("{n}x{m}")), &g, |b, g| {
                b.iter(|| black_box(g.invariants_with(exec)))
            });
        }
    }
    group.finish();
}

fn dual_search(c: &mut Criterion) {
    let mut group = c.benchmark_group("dual_search");
    group.sample_size(10);
    for (n, m, r) in [(11, 8, 3), (9, 7, 2)] {
        let code = LinearCode::from_incidence(&graph(n, m), r).unwrap();
        for (name, exec) in MODES {
            group.bench_with_input(
                BenchmarkId::new(name, format!("{n}x{m}_gf{r}")),
                &code,
                |b, code| b.iter(|| black_box(code.dual_search(DualSearch::default(), exec))),
            );
        }
    }
    group.finish();
}

fn sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("sweep");
    group.sample_size(10);
    for (name, jobs) in [("sequential", Some(1)), ("parallel", None)] {
        let config = SweepConfig {
            jobs,
            ..SweepConfig::new(Span::new(2, 9), Span::new(2, 9), vec![2, 3])
        };
        group.bench_function(name, |b| {
            b.iter(|| black_box(verify::sweep(&config).unwrap()))
        });
    }
    group.finish();
}

criterion_group!(benches, min_distance, invariants, dual_search, sweep);
criterion_main!(benches);
