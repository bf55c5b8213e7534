use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use rankone_core::limit::{limit_fm_alg, limit_fm_closed, limit_fm_direct_with, DirectOptions, Kernel};
use rankone_core::{CycleB, CycleE, Div};

fn inputs(g: usize) -> (CycleB, CycleB) {
    let d = g - 1;
    let sym = |name: &str, i: usize, j: i32| CycleB::symbol(name, i as i32, j, d).unwrap();
    let z = &sym("z", d.min(1), 1) + &sym("y", d, 0);
    let w = &sym("w", 0, 0) + &sym("v", d / 2, 1);
    (z, w)
}

fn closed_vs_direct(c: &mut Criterion) {
    let mut group = c.benchmark_group("limit");
    for g in 1..=5 {
        let (z, w) = inputs(g);
        group.bench_with_input(BenchmarkId::new("closed", g), &g, |b, &g| {
            b.iter(|| limit_fm_closed(black_box(&z), black_box(&w), g))
        });
        group.bench_with_input(BenchmarkId::new("algebraic", g), &g, |b, &g| {
            b.iter(|| limit_fm_alg(black_box(&z), black_box(&w), g))
        });
        for kernel in [Kernel::Pullback, Kernel::Factored] {
            let opts = DirectOptions {
                kernel,
                ..DirectOptions::for_genus(g)
            };
            group.bench_with_input(BenchmarkId::new(format!("direct-{kernel:?}"), g), &g, |b, &g| {
                b.iter(|| limit_fm_direct_with(black_box(&z), black_box(&w), g, &opts))
            });
        }
    }
    group.finish();
}

fn xi_powers(c: &mut Criterion) {
    let mut group = c.benchmark_group("xi_power");
    let d = 4;
    for k in [4u32, 8, 10] {
        group.bench_with_input(BenchmarkId::new("closed", k), &k, |b, &k| {
            b.iter(|| CycleE::xi_power(Div::E12, black_box(k), d))
        });
        group.bench_with_input(BenchmarkId::new("iterated", k), &k, |b, &k| {
            b.iter(|| CycleE::xi_power_iterated(Div::E12, black_box(k), d))
        });
    }
    group.finish();
}

criterion_group!(benches, closed_vs_direct, xi_powers);
criterion_main!(benches);
