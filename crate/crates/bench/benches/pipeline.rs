use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use maximin_core::duality::{dual_forward, dual_forward_fast};
use maximin_core::representation::{derive_pref_fast, derive_pref_from_rep, synthesize};
use maximin_core::spectrum::{prime_filters_by_subsets, SpectralSpace};
use maximin_core::testkit::{
    fixtures, random_axiomatic_order, random_distributive_lattice, random_representation, Seed,
};
use maximin_core::validate_laws;

fn spectrum(c: &mut Criterion) {
    let mut group = c.benchmark_group("spectrum");
    for atoms in [3, 4] {
        let l = fixtures::boolean_algebra(atoms);
        group.bench_with_input(BenchmarkId::new("join_irreducibles", l.len()), &l, |b, l| {
            b.iter(|| SpectralSpace::new(black_box(l)))
        });
        group.bench_with_input(BenchmarkId::new("subset_scan", l.len()), &l, |b, l| {
            b.iter(|| prime_filters_by_subsets(black_box(l)))
        });
    }
    group.finish();
}

fn laws(c: &mut Criterion) {
    let tables = fixtures::boolean_algebra(5).tables();
    c.bench_function("validate_laws/32", |b| b.iter(|| validate_laws(black_box(&tables))));
}

fn duality(c: &mut Criterion) {
    let l = random_distributive_lattice(6, Seed(11));
    let space = SpectralSpace::new(&l);
    let w = random_axiomatic_order(&l, Seed(12));
    let mut group = c.benchmark_group("dual_forward");
    group.bench_function("literal", |b| b.iter(|| dual_forward(black_box(&space), &w)));
    group.bench_function("fast", |b| b.iter(|| dual_forward_fast(black_box(&space), &w)));
    group.finish();

    let rep = random_representation(&l, Seed(13));
    let mut group = c.benchmark_group("derive_pref");
    group.bench_function("literal", |b| b.iter(|| derive_pref_from_rep(black_box(&rep))));
    group.bench_function("fast", |b| b.iter(|| derive_pref_fast(black_box(&rep))));
    group.finish();
}

fn pipeline(c: &mut Criterion) {
    let l = random_distributive_lattice(6, Seed(21));
    let w = random_axiomatic_order(&l, Seed(22));
    c.bench_function("synthesize", |b| b.iter(|| synthesize(black_box(&l), &w)));
}

criterion_group!(benches, spectrum, laws, duality, pipeline);
criterion_main!(benches);
