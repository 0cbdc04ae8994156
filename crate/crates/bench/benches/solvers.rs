use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use superbider_core::bider::{biderivation_space, special_biderivation_space};
use superbider_core::catalog::{make, AlgebraSpec};
use superbider_core::linalg::{rref, Matrix};
use superbider_core::maps::{centroid_space, derivation_space};
use superbider_core::rational::frac;
use superbider_core::Parity;

fn hilbert_like(n: usize) -> Matrix {
    let data = (0..n * n)
        .map(|t| frac(((t * 7) % 11) as i64 - 5, (t / n + t % n + 1) as i64))
        .collect();
    Matrix::from_flat(n, n, data).unwrap()
}

fn linalg(c: &mut Criterion) {
    let m = hilbert_like(24);
    c.bench_function("rref 24x24", |b| b.iter(|| rref(black_box(&m))));
}

fn spaces(c: &mut Criterion) {
    let sl21 = make(&AlgebraSpec::Sl(2, 1)).unwrap();
    let gl21 = make(&AlgebraSpec::Gl(2, 1)).unwrap();
    c.bench_function("derivations sl(2|1)", |b| {
        b.iter(|| derivation_space(black_box(&sl21), Parity::Odd))
    });
    c.bench_function("centroid gl(2|1)", |b| {
        b.iter(|| centroid_space(black_box(&gl21), Parity::Even))
    });
    let mut group = c.benchmark_group("biderivations");
    group.sample_size(10);
    group.bench_function("sl(2|1) even", |b| {
        b.iter(|| biderivation_space(black_box(&sl21), Parity::Even))
    });
    group.bench_function("gl(2|1) odd", |b| {
        b.iter(|| biderivation_space(black_box(&gl21), Parity::Odd))
    });
    group.bench_function("special sl(2|1) even", |b| {
        b.iter(|| special_biderivation_space(black_box(&sl21), Parity::Even))
    });
    group.finish();
}

criterion_group!(benches, linalg, spaces);
criterion_main!(benches);
