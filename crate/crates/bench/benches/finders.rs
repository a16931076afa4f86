use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use fullsub::{disc_exact, full_two_thirds, greedy_full, qfull_partition, Rational, Sign, TieBreak};
use fullsub_bench::half_random;

fn bench_disc_exact(c: &mut Criterion) {
    let mut group = c.benchmark_group("disc_exact");
    group.sample_size(10);
    for n in [12, 16, 20] {
        let g = half_random(n);
        let p = g.density();
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| {
            b.iter(|| disc_exact(black_box(g), &p, Sign::Absolute, None, 20).unwrap())
        });
    }
    group.finish();
}

fn bench_greedy(c: &mut Criterion) {
    let mut group = c.benchmark_group("greedy_full");
    for n in [200, 1000, 2000] {
        let g = half_random(n);
        let p = g.density();
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| {
            b.iter(|| greedy_full(black_box(g), &p, TieBreak::MinIndex).unwrap())
        });
    }
    group.finish();
}

fn bench_qfull(c: &mut Criterion) {
    let mut group = c.benchmark_group("qfull_partition");
    let q = Rational::new(1, 2);
    for n in [100, 400, 1000] {
        let g = half_random(n);
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| {
            b.iter(|| qfull_partition(black_box(g), &q, None).unwrap())
        });
    }
    group.finish();
}

fn bench_two_thirds(c: &mut Criterion) {
    let mut group = c.benchmark_group("full_two_thirds");
    for n in [500, 1000, 2000] {
        let g = half_random(n);
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| {
            b.iter(|| full_two_thirds(black_box(g)).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, bench_disc_exact, bench_greedy, bench_qfull, bench_two_thirds);
criterion_main!(benches);
