use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use formchase_core::axioms::{check_axioms, Scope};
use formchase_core::theorems::{butterfly, diamond_iso, double_quotient, image_theorem};
use formchase_core::{catalogue, FormModel, GroupModel, GroupTable};

fn bench_theorems(c: &mut Criterion) {
    let m = GroupModel::new();
    let s3 = m.object(GroupTable::symmetric(3));
    let a = m.sub(&s3, &[0, 4, 5]).unwrap();
    let b = m.sub(&s3, &[0, 1]).unwrap();
    c.bench_function("diamond/s3", |bch| bch.iter(|| diamond_iso(&m, black_box(&a), black_box(&b)).unwrap()));

    let z8 = m.object(GroupTable::cyclic(8));
    let n = m.sub(&z8, &[0, 4]).unwrap();
    let q = m.cod(&m.projection(&n).unwrap());
    let s = m.sub(&q, &[0, 2]).unwrap();
    c.bench_function("double quotient/z8", |bch| bch.iter(|| double_quotient(&m, &n, black_box(&s)).unwrap()));

    let d8 = m.object(GroupTable::dihedral(8));
    let z4 = m.object(GroupTable::cyclic(4));
    let f = m.hom(&d8, &z4, (0..16).map(|i| if i < 8 { 0 } else { 2 }).collect()).unwrap();
    let w = m.kernel(&f);
    let x = m.top(&d8);
    c.bench_function("image theorem/d8 to z4", |bch| bch.iter(|| image_theorem(&m, &f, black_box(&w), &x).unwrap()));

    let bottom = m.bottom(&d8);
    let r = m.sub(&d8, &(0..8).collect::<Vec<_>>()).unwrap();
    let refl = m.sub(&d8, &[0, 8]).unwrap();
    c.bench_function("butterfly/d8", |bch| {
        bch.iter(|| butterfly(&m, &bottom, black_box(&r), &bottom, black_box(&refl)).unwrap())
    });
}

fn bench_axioms(c: &mut Criterion) {
    let mut group = c.benchmark_group("axioms");
    group.sample_size(10);
    group.bench_function("grp scope", |bch| {
        bch.iter(|| {
            let m = GroupModel::new();
            let objects = catalogue::axiom_groups().into_iter().map(|(_, g)| m.object(g)).collect();
            check_axioms(&m, &Scope::new("grp", objects), &[1, 2, 3, 4, 5])
        })
    });
    group.finish();
}

criterion_group!(benches, bench_theorems, bench_axioms);
criterion_main!(benches);
