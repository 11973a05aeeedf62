use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use thompson_bench::{element, jones_generators, mixed_word};
use thompson_core::core2::build_core;
use thompson_core::presentation::relation_suite;
use thompson_core::t3::search_torsion;
use thompson_core::{
    enumerate, member_vect_bipartite, member_vect_parity, DyadicRational, TreePair,
};

fn arithmetic(c: &mut Criterion) {
    let mut group = c.benchmark_group("arithmetic");
    for k in [2, 8, 32] {
        let f = element(k);
        let g = element(k + 1);
        group.bench_with_input(BenchmarkId::new("from_word", k), &k, |b, &k| {
            b.iter(|| TreePair::from_word(black_box(&mixed_word(k))))
        });
        group.bench_with_input(BenchmarkId::new("multiply", k), &k, |b, _| {
            b.iter(|| black_box(&f).multiply(black_box(&g)))
        });
        let t = DyadicRational::new(12345, 17);
        group.bench_with_input(BenchmarkId::new("evaluate", k), &k, |b, _| {
            b.iter(|| black_box(&f).evaluate(black_box(&t)))
        });
    }
    group.finish();
}

fn membership(c: &mut Criterion) {
    let all = enumerate(2, 6);
    c.bench_function("enumerate 6 leaves", |b| {
        b.iter(|| enumerate(2, black_box(6)))
    });
    c.bench_function("bipartite test, 6 leaves", |b| {
        b.iter(|| {
            all.iter()
                .filter(|f| member_vect_bipartite(f).unwrap())
                .count()
        })
    });
    c.bench_function("parity test, 6 leaves", |b| {
        b.iter(|| {
            all.iter()
                .filter(|f| member_vect_parity(f).unwrap().is_member())
                .count()
        })
    });
}

fn cores(c: &mut Criterion) {
    let gens = jones_generators();
    c.bench_function("fold core of Jones' subgroup", |b| {
        b.iter(|| build_core(black_box(&gens)))
    });
    let core = build_core(&gens).unwrap();
    let all = enumerate(2, 6);
    c.bench_function("core acceptance, 6 leaves", |b| {
        b.iter(|| all.iter().filter(|f| core.accepts(f)).count())
    });
}

fn searches(c: &mut Criterion) {
    let mut group = c.benchmark_group("searches");
    group.sample_size(10);
    group.bench_function("finite presentation", |b| {
        b.iter(|| relation_suite("finite-presentation", None).unwrap())
    });
    group.bench_function("ternary involutions, 7 leaves", |b| {
        b.iter(|| search_torsion(3, 2, black_box(7)))
    });
    group.finish();
}

criterion_group!(benches, arithmetic, membership, cores, searches);
criterion_main!(benches);
