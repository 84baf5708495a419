//! Benchmarks for the data-parallel workloads: the dimension-3 census scan
//! and exhaustive ideal spinning. The parallel/sequential switch is the
//! compile-time `parallel` feature, so comparing the two paths means
//! benching twice and diffing criterion baselines:
//!
//! ```text
//! cargo bench -p lie-lab --bench parallel -- --save-baseline with-rayon
//! cargo bench -p lie-lab --bench parallel --no-default-features -- --save-baseline sequential
//! ```
//!
//! Criterion stores both baselines under `target/criterion/` for comparison.

use criterion::{criterion_group, criterion_main, Criterion};
use lie_lab::census::{census_dim3, CensusOptions};
use lie_lab::constructions::make_witt;
use lie_lab::rootsys::{make_chevalley, RootSystem};
use lie_lab::structure::simplicity;
use lie_lab::Field;
use std::hint::black_box;

fn bench_census(c: &mut Criterion) {
    let mut group = c.benchmark_group("census");
    group.sample_size(10);
    group.bench_function("dim3_p5_full", |b| {
        b.iter(|| {
            let result = census_dim3(black_box(5), CensusOptions::default()).unwrap();
            assert_eq!(result.simple_count, result.recognized_sl2_count);
            result
        })
    });
    group.finish();
}

fn bench_ideal_spinning(c: &mut Criterion) {
    let mut group = c.benchmark_group("ideal-spinning");
    let witt7 = make_witt(7).unwrap();
    group.bench_function("witt7_exhaustive", |b| {
        b.iter(|| simplicity(black_box(&witt7), 0))
    });
    let f5 = Field::prime(5).unwrap();
    let a2 = make_chevalley(&RootSystem::from_label("A2").unwrap(), &f5).unwrap();
    group.bench_function("chevalley_a2_f5_exhaustive", |b| {
        b.iter(|| simplicity(black_box(&a2), 0))
    });
    group.finish();
}

criterion_group!(benches, bench_census, bench_ideal_spinning);
criterion_main!(benches);
