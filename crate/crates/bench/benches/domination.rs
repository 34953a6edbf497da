use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use pathdom_core::enumerate::BruteForceOptions;
use pathdom_core::extremal::{count_extremal_bruteforce, BoundKind};
use pathdom_core::montecarlo::{sample_gamma, SampleConfig};
use pathdom_core::{gamma, GraphSpec, Permutation};

fn single_run(c: &mut Criterion) {
    let mut group = c.benchmark_group("gamma");
    for n in [16usize, 64, 2000] {
        let graph = GraphSpec::path(n).unwrap();
        let order: Vec<u32> = (1..=n as u32).rev().collect();
        let perm = Permutation::new(order).unwrap();
        group.bench_with_input(BenchmarkId::new("path", n), &perm, |b, p| {
            b.iter(|| gamma(black_box(&graph), black_box(p)).unwrap())
        });
    }
    group.finish();
}

fn brute_force(c: &mut Criterion) {
    let mut group = c.benchmark_group("brute_force");
    group.sample_size(10);
    let opts = BruteForceOptions::default();
    for n in [7usize, 9] {
        group.bench_function(BenchmarkId::new("worst", n), |b| {
            b.iter(|| count_extremal_bruteforce(black_box(n), BoundKind::Worst, &opts).unwrap())
        });
    }
    group.finish();
}

fn sampling(c: &mut Criterion) {
    let mut group = c.benchmark_group("sample");
    group.sample_size(10);
    group.bench_function("n2000_x4096", |b| {
        let config = SampleConfig::new(2000, 4096, 1);
        b.iter(|| sample_gamma(black_box(&config)).unwrap())
    });
    group.finish();
}

criterion_group!(benches, single_run, brute_force, sampling);
criterion_main!(benches);
