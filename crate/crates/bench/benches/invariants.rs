use criterion::{black_box, criterion_group, criterion_main, Criterion};
use skein_core::annular::{coxeter_braid, coxeter_invariant_formula};
use skein_core::cube::{build_cube, homology, EvalObject};
use skein_core::hecke::annular_trace;
use skein_core::shapes::{Composition, SignSequence};
use skein_core::symfunc::psi;

fn bench_psi(c: &mut Criterion) {
    let a = Composition::new(vec![3, 2, 1, 2]);
    c.bench_function("psi 3.2.1.2", |b| b.iter(|| psi(black_box(&a)).unwrap()));
}

fn bench_trace(c: &mut Criterion) {
    let eps = SignSequence::parse("++-+").unwrap();
    let beta = coxeter_braid(&eps);
    c.bench_function("annular trace, five-strand Coxeter braid", |b| {
        b.iter(|| annular_trace(black_box(&beta)).unwrap())
    });
    c.bench_function("closed Coxeter formula, five strands", |b| {
        b.iter(|| coxeter_invariant_formula(black_box(&eps)).unwrap())
    });
}

fn bench_cube(c: &mut Criterion) {
    let e = EvalObject::nilpotent(&[3]);
    c.bench_function("cube homology, three strands at N=3", |b| {
        b.iter(|| homology(&build_cube(black_box(3), &e).unwrap()))
    });
}

criterion_group!(benches, bench_psi, bench_trace, bench_cube);
criterion_main!(benches);
