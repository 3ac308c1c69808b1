use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use specht_core::characters::verify_char_sum;
use specht_core::decomposition::{decomp_matrix, decomp_matrix_combinatorial};
use specht_core::paths::dominant_paths;
use specht_core::regularisation::{reg_ep, reg_prime_path};
use specht_core::tableaux::enumerate_std;
use specht_core::{Partition, Path2};

fn enumeration(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumerate_std");
    for shape in [vec![4, 3, 1], vec![2, 2, 2, 2, 1, 1, 1, 1], vec![3, 3, 2, 2]] {
        let lambda = Partition::new(shape).unwrap();
        g.bench_with_input(BenchmarkId::from_parameter(lambda.to_string()), &lambda, |b, l| {
            b.iter(|| enumerate_std(black_box(l)).count())
        });
    }
    g.finish();
}

fn regularisation(c: &mut Criterion) {
    let path = Path2::from_runs("+6 - +6 -4 + -4 +4 - + -").unwrap();
    c.bench_function("reg_ep/e3p2/worked", |b| b.iter(|| reg_ep(black_box(&path), 3, 2).unwrap()));
    c.bench_function("reg_prime/e3p2/worked", |b| {
        b.iter(|| reg_prime_path(black_box(&path), 3, 2).unwrap())
    });
    let all = dominant_paths(16);
    c.bench_function("reg_ep/e2p3/all_n16", |b| {
        b.iter(|| all.iter().map(|p| reg_ep(p, 2, 3).unwrap().stages.len()).sum::<usize>())
    });
}

fn decomposition(c: &mut Criterion) {
    let mut g = c.benchmark_group("decomp_matrix");
    for (n, e, p) in [(20, 2, 2), (30, 3, 2), (40, 2, 0)] {
        g.bench_function(format!("closed/n{n}e{e}p{p}"), |b| b.iter(|| decomp_matrix(n, e, p).unwrap()));
    }
    g.bench_function("combinatorial/n14e2p2", |b| {
        b.iter(|| decomp_matrix_combinatorial(14, 2, 2).unwrap())
    });
    g.finish();
}

fn characters(c: &mut Criterion) {
    let lambda = Partition::new(vec![2, 2, 2, 2, 1, 1, 1, 1]).unwrap();
    c.bench_function("char_sum/(2^4,1^4)/e2p2", |b| {
        b.iter(|| verify_char_sum(black_box(&lambda), 2, 2).unwrap())
    });
}

criterion_group!(benches, enumeration, regularisation, decomposition, characters);
criterion_main!(benches);
