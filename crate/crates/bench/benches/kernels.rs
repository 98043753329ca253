use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use turanlab_bench::{forest, gf_host, scrambled, shuffled_apex};
use turanlab_core::{
    canonical_form, classify, contains_linear_forest, count_cliques, disintegrate, enumerate_graphs, EnumFilter,
};

fn cliques(c: &mut Criterion) {
    let gf = gf_host(60);
    let dense = scrambled(40, 50, 7);
    c.bench_function("count K_5 in G_F(60)", |b| b.iter(|| count_cliques(black_box(&gf), 5)));
    c.bench_function("count K_4 in G(40, 1/2)", |b| b.iter(|| count_cliques(black_box(&dense), 4)));
}

fn canonical(c: &mut Criterion) {
    let apex = shuffled_apex(5);
    let sparse = scrambled(30, 15, 3);
    c.bench_function("canonical form of shuffled apex family", |b| b.iter(|| canonical_form(black_box(&apex))));
    c.bench_function("canonical form of G(30, 0.15)", |b| b.iter(|| canonical_form(black_box(&sparse))));
}

fn containment(c: &mut Criterion) {
    let f = forest("7+7");
    let apex = shuffled_apex(9);
    let g = scrambled(24, 20, 11);
    c.bench_function("2P_7 in apex family (negative)", |b| b.iter(|| contains_linear_forest(black_box(&apex), &f)));
    c.bench_function("2P_7 in G(24, 0.2)", |b| b.iter(|| contains_linear_forest(black_box(&g), &f)));
    c.bench_function("classify apex family against 2P_7", |b| b.iter(|| classify(black_box(&apex), &f)));
}

fn peeling(c: &mut Criterion) {
    let f = forest("7+5");
    let g = scrambled(50, 10, 2);
    c.bench_function("disintegrate G(50, 0.1), s = 3", |b| b.iter(|| disintegrate(black_box(&g), &f, 3)));
}

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate");
    group.sample_size(10);
    group.bench_function("all graphs, n = 7", |b| b.iter(|| enumerate_graphs(black_box(7), &EnumFilter::default())));
    group.finish();
}

criterion_group!(benches, cliques, canonical, containment, peeling, enumeration);
criterion_main!(benches);
