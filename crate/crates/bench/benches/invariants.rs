use std::sync::Arc;

use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use numsemi_core::gorenstein_search::bg_upper_bound;
use numsemi_core::herzog::h_omega_formula;
use numsemi_core::invariants::{h_invariant, h_omega};
use numsemi_core::oracle::{SieveTable, DEFAULT_WINDOW_CAP};
use numsemi_core::{NumericalSemigroup, RelativeIdeal};

fn ring(gens: &[i64]) -> Arc<NumericalSemigroup> {
    Arc::new(NumericalSemigroup::build(gens).unwrap())
}

const FAMILY: [[i64; 3]; 3] = [[7, 8, 9], [13, 14, 15], [21, 22, 23]];

fn build(c: &mut Criterion) {
    let mut group = c.benchmark_group("build");
    for gens in FAMILY {
        group.bench_with_input(
            BenchmarkId::from_parameter(format!("{gens:?}")),
            &gens,
            |b, g| b.iter(|| NumericalSemigroup::build(black_box(g)).unwrap()),
        );
    }
    group.finish();
}

fn canonical_h(c: &mut Criterion) {
    let mut group = c.benchmark_group("h_omega");
    for gens in FAMILY {
        let h = ring(&gens);
        group.bench_function(BenchmarkId::new("colon", format!("{gens:?}")), |b| {
            b.iter(|| h_omega(black_box(&h)).unwrap())
        });
        group.bench_function(
            BenchmarkId::new("structure_matrix", format!("{gens:?}")),
            |b| b.iter(|| h_omega_formula(black_box(&h)).unwrap()),
        );
    }
    group.finish();
}

fn ideal_arithmetic(c: &mut Criterion) {
    let h = ring(&[13, 14, 15]);
    let a = RelativeIdeal::from_generators(&h, &[-5, 3, 40]).unwrap();
    let b = RelativeIdeal::from_generators(&h, &[0, 7, 22]).unwrap();
    c.bench_function("colon", |bench| {
        bench.iter(|| black_box(&a).colon(black_box(&b)).unwrap())
    });
    c.bench_function("product", |bench| {
        bench.iter(|| black_box(&a).product(black_box(&b)).unwrap())
    });
    c.bench_function("trace", |bench| bench.iter(|| black_box(&a).trace()));
    c.bench_function("h_invariant", |bench| {
        bench.iter(|| h_invariant(black_box(&a)).unwrap())
    });

    let table = SieveTable::new(h.generators(), 60, DEFAULT_WINDOW_CAP).unwrap();
    c.bench_function("oracle_h", |bench| {
        bench.iter(|| table.oracle_h(black_box(a.min_gens())).unwrap())
    });
}

fn subsemigroup_search(c: &mut Criterion) {
    let h = ring(&[7, 8, 9]);
    c.bench_function("bg_upper_bound <7,8,9>", |b| {
        b.iter(|| bg_upper_bound(black_box(&h), 4).unwrap())
    });
}

criterion_group!(
    benches,
    build,
    canonical_h,
    ideal_arithmetic,
    subsemigroup_search
);
criterion_main!(benches);
