use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use kindep::families::{cycle, three_cycle_example};
use kindep::{alpha_exact, alpha_tree, check_good, enumerate_graphs, enumerate_trees, generate_r};

fn solvers(c: &mut Criterion) {
    let example = three_cycle_example();
    c.bench_function("alpha_exact/three_cycle_example", |b| {
        b.iter(|| alpha_exact(black_box(&example), 4))
    });

    let c24 = cycle(24);
    c.bench_function("alpha_exact/c24", |b| b.iter(|| alpha_exact(black_box(&c24), 4)));

    let trees = enumerate_trees(14);
    c.bench_function("alpha_tree/all_trees_14", |b| {
        b.iter(|| trees.iter().map(|t| alpha_tree(t, 4).unwrap().value).sum::<usize>())
    });

    c.bench_function("check_good/three_cycle_example", |b| {
        b.iter(|| check_good(black_box(&example)))
    });
}

fn generators(c: &mut Criterion) {
    let mut group = c.benchmark_group("generators");
    group.sample_size(10);
    group.bench_function("enumerate_graphs/7", |b| {
        b.iter(|| enumerate_graphs(black_box(7), false))
    });
    group.bench_function("generate_r/3", |b| b.iter(|| generate_r(black_box(3), 4)));
    group.finish();
}

criterion_group!(benches, solvers, generators);
criterion_main!(benches);
