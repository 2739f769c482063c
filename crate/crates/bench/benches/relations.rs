use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use entourage::graph::{path_weight, DiGraph};
use entourage::hyper::hyper_entourage;
use entourage_bench::{random_relation, sparse_density};

fn compose(c: &mut Criterion) {
    let mut g = c.benchmark_group("compose");
    for n in [64, 256, 1024] {
        let a = random_relation(n, 0.05, 1);
        let b = random_relation(n, 0.05, 2);
        g.bench_with_input(BenchmarkId::from_parameter(n), &n, |bench, _| {
            bench.iter(|| black_box(a.compose(&b).unwrap()))
        });
    }
    g.finish();
}

fn closure(c: &mut Criterion) {
    let mut g = c.benchmark_group("transitive_closure");
    for n in [64, 256, 1024] {
        let a = random_relation(n, sparse_density(n), 3);
        g.bench_with_input(BenchmarkId::from_parameter(n), &n, |bench, _| {
            bench.iter(|| black_box(a.transitive_closure()))
        });
    }
    g.finish();
}

fn bfs(c: &mut Criterion) {
    let mut g = c.benchmark_group("path_weight");
    for n in [64, 256] {
        let graph = DiGraph::new(random_relation(n, 2.0 * sparse_density(n), 4));
        g.bench_with_input(BenchmarkId::from_parameter(n), &n, |bench, _| {
            bench.iter(|| black_box(path_weight(&graph)))
        });
    }
    g.finish();
}

fn hyper(c: &mut Criterion) {
    let mut g = c.benchmark_group("hyper_entourage");
    g.sample_size(10);
    for n in [6, 8, 10] {
        let e = random_relation(n, 0.2, 5).with_diagonal();
        g.bench_with_input(BenchmarkId::from_parameter(n), &n, |bench, _| {
            bench.iter(|| black_box(hyper_entourage(&e).unwrap()))
        });
    }
    g.finish();
}

criterion_group!(benches, compose, closure, bfs, hyper);
criterion_main!(benches);
