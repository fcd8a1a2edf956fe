//! Benchmarks for the hot kernels: bit-parallel sumsets, energy via the
//! representation profile, direct DFT, affine enumeration, and one full
//! scan step. Run with `cargo bench -p zsum-bench`.

use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use zsum_bench::family_pair;
use zsum_core::{additive_energy, affine_stabilizer, bound_tail_sum, dft_indicator, scan_one};

fn bench_sumset(c: &mut Criterion) {
    let mut group = c.benchmark_group("sumset");
    for k in [64usize, 256, 1024] {
        let (a, comp) = family_pair(k);
        group.bench_with_input(BenchmarkId::from_parameter(k), &k, |b, _| {
            b.iter(|| black_box(&a).sumset(black_box(&comp)).unwrap())
        });
    }
    group.finish();
}

fn bench_energy(c: &mut Criterion) {
    let mut group = c.benchmark_group("additive_energy");
    for k in [64usize, 256, 1024] {
        let (a, _) = family_pair(k);
        group.bench_with_input(BenchmarkId::from_parameter(k), &k, |b, _| {
            b.iter(|| additive_energy(black_box(&a), black_box(&a)).unwrap())
        });
    }
    group.finish();
}

fn bench_dft(c: &mut Criterion) {
    let mut group = c.benchmark_group("dft_indicator");
    for k in [64usize, 256] {
        let (a, _) = family_pair(k);
        group.bench_with_input(BenchmarkId::from_parameter(k), &k, |b, _| {
            b.iter(|| dft_indicator(black_box(&a)))
        });
    }
    group.finish();
}

fn bench_stabilizer(c: &mut Criterion) {
    let mut group = c.benchmark_group("affine_stabilizer");
    for k in [32usize, 64] {
        let (a, _) = family_pair(k);
        group.bench_with_input(BenchmarkId::from_parameter(k), &k, |b, _| {
            b.iter(|| affine_stabilizer(black_box(&a)))
        });
    }
    group.finish();
}

fn bench_scan_one(c: &mut Criterion) {
    let mut group = c.benchmark_group("scan_one");
    group.sample_size(20);
    for k in [64usize, 256] {
        group.bench_with_input(BenchmarkId::from_parameter(k), &k, |b, &k| {
            b.iter(|| scan_one(black_box(k)).unwrap())
        });
    }
    group.finish();
}

fn bench_tail_sum(c: &mut Criterion) {
    c.bench_function("bound_tail_sum/1000", |b| {
        b.iter(|| bound_tail_sum(black_box(1000)).unwrap())
    });
}

criterion_group!(
    benches,
    bench_sumset,
    bench_energy,
    bench_dft,
    bench_stabilizer,
    bench_scan_one,
    bench_tail_sum
);
criterion_main!(benches);
