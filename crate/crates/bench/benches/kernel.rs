use criterion::{criterion_group, criterion_main, Criterion};
use devsurf_bench::{implicit, map, CYLINDER, TANGENT, TANGENT_MAP};
use devsurf_core::implicit::gaussian_form_implicit;
use devsurf_core::parse::parse_poly;
use devsurf_core::poly::{gcd, resultant, squarefree_part};
use std::hint::black_box;

fn kernel(c: &mut Criterion) {
    let f = implicit(TANGENT);
    let fx = f.derivative("x");
    let fz = f.derivative("z");
    c.bench_function("parse_tangent", |b| {
        b.iter(|| parse_poly(black_box(TANGENT), &["x", "y", "z"]))
    });
    c.bench_function("bordered_hessian_cylinder", |b| {
        let g = implicit(CYLINDER);
        b.iter(|| gaussian_form_implicit(black_box(&g)))
    });
    c.bench_function("resultant_fx_fz", |b| {
        b.iter(|| resultant(black_box(&fx), black_box(&fz), "z"))
    });
    let p = &f * &fx;
    let q = &f * &fz;
    c.bench_function("gcd_trivariate", |b| {
        b.iter(|| gcd(black_box(&p), black_box(&q)))
    });
    let (_, n) = map(TANGENT_MAP).common_denominator();
    c.bench_function("squarefree_map_numerator", |b| {
        b.iter(|| squarefree_part(black_box(&n[1])))
    });
}

criterion_group!(benches, kernel);
criterion_main!(benches);
