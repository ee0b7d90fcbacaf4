use adnil::counting::{
    classify_bruteforce, count_atmost_det, count_atmost_reflection, count_atmost_sum,
    series_chebyshev, series_contfrac, DetVariant,
};
use adnil::dyck::{height_bijection, height_bijection_inverse};
use adnil::nilpotence::{class_fast, class_tableau, TouchSequence};
use adnil::qt_catalan::qt_catalan_formula;
use adnil::staircase::{partitions, StaircasePartition};
use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

fn worked_example() -> StaircasePartition {
    StaircasePartition::parse("10,10,9,6,5,4,4,3,1,1,1,1,0", 13).unwrap()
}

fn bench_classification(c: &mut Criterion) {
    let p = worked_example();
    let full = StaircasePartition::full(60);
    let mut g = c.benchmark_group("class");
    g.bench_function("fast_rank13", |b| b.iter(|| class_fast(black_box(&p))));
    g.bench_function("tableau_rank13", |b| b.iter(|| class_tableau(black_box(&p))));
    g.bench_function("touch_rank13", |b| {
        b.iter(|| TouchSequence::of(black_box(&p)).len())
    });
    g.bench_function("fast_staircase60", |b| b.iter(|| class_fast(black_box(&full))));
    g.bench_function("tableau_staircase60", |b| {
        b.iter(|| class_tableau(black_box(&full)))
    });
    g.finish();
}

fn bench_counting_routes(c: &mut Criterion) {
    let (n, h) = (12, 4);
    let mut g = c.benchmark_group("count_atmost_n12_h4");
    g.bench_function("sum", |b| b.iter(|| count_atmost_sum(n, h)));
    g.bench_function("det_max_clamp", |b| {
        b.iter(|| count_atmost_det(n, h, DetVariant::MaxClamp))
    });
    g.bench_function("det_min_clamp", |b| {
        b.iter(|| count_atmost_det(n, h, DetVariant::MinClamp))
    });
    g.bench_function("reflection", |b| b.iter(|| count_atmost_reflection(n, h)));
    g.bench_function("genfun", |b| {
        b.iter(|| series_chebyshev(h, n + 1).coeff(n + 1).clone())
    });
    g.bench_function("contfrac", |b| {
        b.iter(|| series_contfrac(h, n + 1).coeff(n + 1).clone())
    });
    g.finish();
}

fn bench_enumeration(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumeration");
    g.sample_size(20);
    g.bench_function("stream_rank10", |b| b.iter(|| partitions(10).count()));
    g.bench_function("classify_rank10", |b| {
        b.iter(|| classify_bruteforce(10, 12).unwrap())
    });
    g.finish();
}

fn bench_bijection(c: &mut Criterion) {
    let p = worked_example();
    let d = height_bijection(&p);
    let mut g = c.benchmark_group("height_bijection");
    g.bench_function("forward_rank13", |b| b.iter(|| height_bijection(black_box(&p))));
    g.bench_function("inverse_rank13", |b| {
        b.iter(|| height_bijection_inverse(black_box(&d), 13).unwrap())
    });
    g.bench_function("roundtrip_all_rank7", |b| {
        b.iter(|| {
            for p in partitions(7) {
                let d = height_bijection(&p);
                black_box(height_bijection_inverse(&d, 7).unwrap());
            }
        })
    });
    g.finish();
}

fn bench_qt(c: &mut Criterion) {
    let mut g = c.benchmark_group("qt_catalan");
    g.sample_size(20);
    g.bench_function("formula_rank9", |b| b.iter(|| qt_catalan_formula(9)));
    g.finish();
}

criterion_group!(
    benches,
    bench_classification,
    bench_counting_routes,
    bench_enumeration,
    bench_bijection,
    bench_qt
);
criterion_main!(benches);
