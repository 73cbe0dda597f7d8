use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use lieforge::check::{check_poincare, check_su2_fundamental};
use lieforge::linalg::{mat_exp, re, Tolerance};
use lieforge::reps::{j2, momentum, rep22_jk, rep22_v, Branch, VectorParams};
use lieforge::spacetime::{boost_invariance_check, d4, RotBoostParams};
use lieforge::sun::{extract_structure, su_n_generators};
use lieforge::transfer::extract_coeffs;

fn kernels(c: &mut Criterion) {
    let tol = Tolerance::default();
    let (j, k) = rep22_jk();
    let v = rep22_v(&VectorParams::default()).unwrap();
    let d = VectorParams::default();
    let p = momentum(
        &VectorParams::new(d.c_plus, re(0.0), re(1.0)).unwrap(),
        Branch::Plus,
    )
    .unwrap();
    let su3 = su_n_generators(3).unwrap();
    let boost = RotBoostParams {
        theta: [0.3, -1.2, 2.0],
        phi: [1.5, 0.2, -0.7],
    };
    let exponent = k.member(1).scale(re(2.5));

    c.bench_function("mat_exp 4x4", |b| b.iter(|| mat_exp(black_box(&exponent))));
    c.bench_function("d4", |b| b.iter(|| d4(black_box(&boost))));
    c.bench_function("su2 fundamental", |b| {
        b.iter(|| check_su2_fundamental(black_box(&j2()), &tol).unwrap())
    });
    c.bench_function("extract_coeffs", |b| {
        b.iter(|| extract_coeffs(black_box(&v), &k, &tol).unwrap())
    });
    c.bench_function("check_poincare", |b| {
        b.iter(|| check_poincare(&j, &k, black_box(&p), &tol, re(1.0)).unwrap())
    });
    c.bench_function("extract_structure su3", |b| {
        b.iter(|| extract_structure(black_box(su3.members())).unwrap())
    });
    c.bench_function("boost invariance 1000", |b| {
        b.iter(|| boost_invariance_check(1000, black_box(1), &tol).unwrap())
    });
}

criterion_group!(benches, kernels);
criterion_main!(benches);
