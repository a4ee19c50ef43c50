use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use formchase_bench::{reduction_chain, s3_diamond};
use formchase_core::engine::{decide, relation_oracle};
use formchase_core::{chase, Dir, FormModel, GroupModel, Pyramid};

fn bench_chase(c: &mut Criterion) {
    let m = GroupModel::new();
    let mut group = c.benchmark_group("chase");
    for len in [2, 8, 32] {
        let z = reduction_chain(&m, len);
        let s = m.bottom(z.first());
        group.bench_with_input(BenchmarkId::from_parameter(len), &z, |b, z| {
            b.iter(|| chase(&m, black_box(z), &s, Dir::Fwd).unwrap())
        });
    }
    group.finish();
}

fn bench_decide(c: &mut Criterion) {
    let m = GroupModel::new();
    let diamond = s3_diamond(&m);
    c.bench_function("decide/s3 diamond", |b| b.iter(|| decide(&m, black_box(&diamond)).unwrap()));
    c.bench_function("oracle/s3 diamond", |b| b.iter(|| relation_oracle(&m, black_box(&diamond)).unwrap()));
    let chain = reduction_chain(&m, 8);
    c.bench_function("decide/reduction chain 8", |b| b.iter(|| decide(&m, black_box(&chain)).unwrap()));
}

fn bench_pyramid(c: &mut Criterion) {
    let m = GroupModel::new();
    let mut group = c.benchmark_group("pyramid");
    for len in [2, 4, 8] {
        let z = reduction_chain(&m, len);
        group.bench_with_input(BenchmarkId::new("build", len), &z, |b, z| {
            b.iter(|| Pyramid::build(&m, black_box(z)).unwrap())
        });
        let p = Pyramid::build(&m, &z).unwrap();
        group.bench_with_input(BenchmarkId::new("verify", len), &p, |b, p| b.iter(|| p.verify(&m).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, bench_chase, bench_decide, bench_pyramid);
criterion_main!(benches);
