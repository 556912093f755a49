use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use gfan_core::{fan_type, ExchangeMatrix, ExploreOptions, Fan, RenderOptions, Seed};
use num_bigint::BigInt;

fn markov() -> ExchangeMatrix {
    ExchangeMatrix::from_i64(&[[0, -2, 2], [2, 0, -2], [-2, 2, 0]]).unwrap()
}

fn mutation(c: &mut Criterion) {
    let seed = Seed::initial(markov());
    let word: Vec<usize> = (0..12).map(|i| [1, 2, 3][i % 3]).collect();
    c.bench_function("seed mutation, 12 steps", |b| {
        b.iter(|| black_box(&seed).apply_word(&word).unwrap())
    });
}

fn classification(c: &mut Criterion) {
    let tunnel = ExchangeMatrix::from_i64(&[[0, -6, 4886], [9, 0, -830], [-7329, 830, 0]]).unwrap();
    c.bench_function("fan type of the tunnel matrix", |b| b.iter(|| fan_type(black_box(&tunnel)).unwrap()));
    let (a, bb) = (BigInt::from(3), BigInt::from(2));
    c.bench_function("band index, large (c0, d0)", |b| {
        let c0 = BigInt::from(-10).pow(40);
        let d0 = BigInt::from(16) * BigInt::from(10).pow(39);
        b.iter(|| gfan_core::rank3::classify(&a, &bb, black_box(&c0), black_box(&d0)).unwrap())
    });
}

fn exploration(c: &mut Criterion) {
    let mut group = c.benchmark_group("explore Markov quiver");
    group.sample_size(10);
    for depth in [6, 9] {
        group.bench_function(format!("depth {depth}"), |b| {
            b.iter(|| Fan::explore(&markov(), &ExploreOptions::with_depth(depth)).unwrap())
        });
    }
    group.finish();
}

fn rendering(c: &mut Criterion) {
    let fan = Fan::explore(&markov(), &ExploreOptions::with_depth(6)).unwrap();
    c.bench_function("render Markov quiver depth 6", |b| {
        b.iter(|| gfan_core::render_svg(black_box(&fan), &RenderOptions::default()).unwrap())
    });
}

criterion_group!(benches, mutation, classification, exploration, rendering);
criterion_main!(benches);
