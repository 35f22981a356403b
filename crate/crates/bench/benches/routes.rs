use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use krawkit::binomial::{pochhammer_binomial, stirling_binomial, Variant};
use krawkit::central::{catalan, central, CatalanRoute, CentralRoute};
use krawkit::reduction::{reduce_general, reduce_theorem1};
use krawkit::{choose, krawtchouk_direct};
use krawkit_bench::{chain_grid, doubling_grid};

fn krawtchouk(c: &mut Criterion) {
    let mut g = c.benchmark_group("krawtchouk");
    for m in [8i64, 16, 32] {
        let grid = doubling_grid(m);
        g.bench_with_input(BenchmarkId::new("direct", m), &grid, |b, grid| {
            b.iter(|| {
                grid.iter()
                    .map(|&(p, j)| krawtchouk_direct(2 * m, p, 2 * j).unwrap())
                    .collect::<Vec<_>>()
            })
        });
        g.bench_with_input(BenchmarkId::new("single-doubling", m), &grid, |b, grid| {
            b.iter(|| {
                grid.iter()
                    .map(|&(p, j)| reduce_theorem1(m, p, j).unwrap())
                    .collect::<Vec<_>>()
            })
        });
    }
    let grid = chain_grid(3, 3, 2);
    for pruned in [true, false] {
        let name = if pruned { "chains-pruned" } else { "chains-full" };
        g.bench_function(name, |b| {
            b.iter(|| {
                grid.iter()
                    .map(|&(p, j)| reduce_general(3, p, 3, 2, j, pruned).unwrap().total)
                    .collect::<Vec<_>>()
            })
        });
    }
    g.finish();
}

fn binomials(c: &mut Criterion) {
    let mut g = c.benchmark_group("binomial");
    let m = 60i64;
    g.bench_function("direct", |b| {
        b.iter(|| (0..=m).map(|q| choose(2 * m, 2 * q)).collect::<Vec<_>>())
    });
    g.bench_function("pochhammer", |b| {
        b.iter(|| {
            (0..=m)
                .map(|q| pochhammer_binomial(m, q, Variant::B1).unwrap())
                .collect::<Vec<_>>()
        })
    });
    g.bench_function("stirling", |b| {
        b.iter(|| (0..=m).map(|q| stirling_binomial(m, q).unwrap()).collect::<Vec<_>>())
    });
    g.finish();
}

fn sequences(c: &mut Criterion) {
    let mut g = c.benchmark_group("sequences");
    for route in [
        CentralRoute::Direct,
        CentralRoute::HalfRecursion,
        CentralRoute::SelfEven,
    ] {
        g.bench_function(BenchmarkId::new("central-200", route.name()), |b| {
            b.iter(|| central(black_box(200), route).unwrap())
        });
    }
    for route in [CatalanRoute::Direct, CatalanRoute::Touchard, CatalanRoute::Callan] {
        g.bench_function(BenchmarkId::new("catalan-200", route.name()), |b| {
            b.iter(|| catalan(black_box(200), route).unwrap())
        });
    }
    g.finish();
}

criterion_group!(routes, krawtchouk, binomials, sequences);
criterion_main!(routes);
