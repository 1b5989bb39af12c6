use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use hypercover::algebra::rint;
use hypercover::twists::{census, factor};
use hypercover::verify::{verify_thm1, verify_thm2};
use hypercover::zeta::{family_mod_p, CountSpec};
use num_bigint::BigUint;

fn symbolic(c: &mut Criterion) {
    c.bench_function("thm1-identity", |b| b.iter(verify_thm1));
    c.bench_function("thm2-identity", |b| b.iter(verify_thm2));
}

fn counting(c: &mut Criterion) {
    let fam = family_mod_p(&rint(-27), 7).unwrap();
    let h = CountSpec::hyperelliptic(7, fam.h.f());
    let mut g = c.benchmark_group("count-H-p7");
    g.sample_size(10);
    for k in [3, 5, 7] {
        g.bench_function(format!("k{k}"), |b| b.iter(|| h.count(black_box(k)).unwrap()));
    }
    g.finish();
}

fn twists(c: &mut Criterion) {
    let n = BigUint::from(1_000_003u64) * BigUint::from(18_446_744_073_709_551_557u64);
    c.bench_function("factor-semiprime", |b| b.iter(|| factor(black_box(&n)).unwrap()));
    let mut g = c.benchmark_group("census");
    g.sample_size(10);
    g.bench_function("height-10", |b| b.iter(|| census(&rint(-27), black_box(10)).unwrap()));
    g.finish();
}

criterion_group!(benches, symbolic, counting, twists);
criterion_main!(benches);
