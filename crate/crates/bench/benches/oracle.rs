use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use rankone_core::oracle::{numeric_direct_limit, ExtClass, Oracle};

fn oracle_ops(c: &mut Criterion) {
    let mut group = c.benchmark_group("oracle");
    group.sample_size(20);
    for d in 1..=3 {
        let o = Oracle::new(d);
        let mut rng = ChaCha8Rng::seed_from_u64(d as u64);
        let x = ExtClass::random(d, &mut rng);
        let y = ExtClass::random_even(d, &mut rng);
        group.bench_with_input(BenchmarkId::new("fourier", d), &d, |b, _| {
            b.iter(|| o.fourier(black_box(&x)))
        });
        group.bench_with_input(BenchmarkId::new("pontryagin", d), &d, |b, _| {
            b.iter(|| o.pontryagin(black_box(&y), black_box(&y)))
        });
        group.bench_with_input(BenchmarkId::new("numeric_direct_limit", d), &d, |b, _| {
            b.iter(|| numeric_direct_limit(&o, black_box(&x), black_box(&y)))
        });
    }
    group.finish();
}

criterion_group!(benches, oracle_ops);
criterion_main!(benches);
