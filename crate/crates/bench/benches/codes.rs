use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use ringcode_bench::{dense_code, octocode};
use ringcode_core::{WeightKind, DEFAULT_CAP};

fn standard_form(c: &mut Criterion) {
    let mut g = c.benchmark_group("standard_form");
    for (p, s, n, rows) in [(2u64, 3u32, 16usize, 8usize), (2, 6, 32, 16), (3, 4, 24, 12)] {
        let code = dense_code(p, s, n, rows);
        g.bench_with_input(BenchmarkId::from_parameter(format!("p{p}_s{s}_{rows}x{n}")), &code, |b, code| {
            b.iter(|| black_box(code.standard_form()))
        });
    }
    g.finish();
}

fn octocode_queries(c: &mut Criterion) {
    let code = octocode();
    let mut g = c.benchmark_group("octocode");
    g.bench_function("enumerate", |b| b.iter(|| code.codewords(DEFAULT_CAP).unwrap()));
    g.bench_function("min_weights_all", |b| b.iter(|| code.min_weights(&WeightKind::ALL, DEFAULT_CAP).unwrap()));
    g.bench_function("dual", |b| b.iter(|| black_box(code.dual())));
    g.finish();
}

criterion_group!(benches, standard_form, octocode_queries);
criterion_main!(benches);
