use criterion::{black_box, criterion_group, criterion_main, Criterion};

use entourage::enumerate::{all_structures_on, all_tables, quasi_coarse_on, surjections};
use entourage::functor::{is_weakly_soft, Surjection};
use entourage::morphism::{equivalence_oracle, SpaceMap};
use entourage_bench::{carrier, random_space};

fn census(c: &mut Criterion) {
    c.bench_function("classify 3-point census", |b| {
        b.iter(|| all_structures_on(3).iter().filter(|s| s.classify().is_quasi()).count())
    });
}

fn profiles(c: &mut Criterion) {
    let spaces = all_structures_on(2);
    c.bench_function("profile all maps on 2 points", |b| {
        b.iter(|| {
            let mut n = 0;
            for x in &spaces {
                for y in &spaces {
                    for t in all_tables(2, 2) {
                        n += SpaceMap::new(x.clone(), y.clone(), t).unwrap().profile().bornologous as usize;
                    }
                }
            }
            black_box(n)
        })
    });
}

fn oracle(c: &mut Criterion) {
    let x = random_space(3, 0.4, 7);
    let y = random_space(3, 0.4, 8);
    c.bench_function("equivalence oracle 3x3", |b| b.iter(|| black_box(equivalence_oracle(&x, &y).unwrap())));
}

fn soft(c: &mut Criterion) {
    let spaces = quasi_coarse_on(4);
    let qs: Vec<Surjection> = surjections(4, 2).map(|t| Surjection::new(carrier(2), t).unwrap()).collect();
    c.bench_function("weak softness, 4 points onto 2", |b| {
        b.iter(|| {
            spaces
                .iter()
                .flat_map(|s| qs.iter().map(move |q| is_weakly_soft(s, q).unwrap()))
                .filter(|&v| v)
                .count()
        })
    });
}

criterion_group!(benches, census, profiles, oracle, soft);
criterion_main!(benches);
