use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use maxplus::ranks::permanent;
use maxplus::semigroup::decide_max_ultimate_rank;
use maxplus::spectral::critical_graph;
use maxplus::ultimate::ultimate_rank;
use maxplus::GeneratorSet;
use maxplus_bench::{dense, full_ultimate_rank, generators, rng};

const SIZES: [usize; 3] = [25, 50, 100];

fn spectral(c: &mut Criterion) {
    let mut group = c.benchmark_group("critical_graph");
    group.sample_size(10);
    for n in SIZES {
        let a = dense(&mut rng(n as u64), n);
        group.bench_with_input(BenchmarkId::from_parameter(n), &a, |b, a| {
            b.iter(|| critical_graph(black_box(a)).unwrap())
        });
    }
    group.finish();
}

fn urank(c: &mut Criterion) {
    let mut group = c.benchmark_group("ultimate_rank");
    group.sample_size(10);
    for n in SIZES {
        let a = full_ultimate_rank(&mut rng(n as u64), n);
        group.bench_with_input(BenchmarkId::from_parameter(n), &a, |b, a| {
            b.iter(|| ultimate_rank(black_box(a)).unwrap())
        });
    }
    group.finish();
}

fn perm(c: &mut Criterion) {
    let mut group = c.benchmark_group("permanent");
    group.sample_size(10);
    for n in SIZES {
        let a = dense(&mut rng(7 + n as u64), n);
        group.bench_with_input(BenchmarkId::from_parameter(n), &a, |b, a| {
            b.iter(|| permanent(black_box(a)).unwrap())
        });
    }
    group.finish();
}

fn semigroup(c: &mut Criterion) {
    let mut group = c.benchmark_group("semigroup_decision");
    group.sample_size(10);
    for n in SIZES {
        let g = GeneratorSet::new(generators(&mut rng(13 + n as u64), n, 3)).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| {
            b.iter(|| decide_max_ultimate_rank(black_box(g)).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, spectral, urank, perm, semigroup);
criterion_main!(benches);
