use criterion::{criterion_group, criterion_main, Criterion};
use devsurf_bench::{implicit, map, CONE, CONE_MAP, CYLINDER, TANGENT, TANGENT_MAP};
use devsurf_core::analysis::AnalysisConfig;
use devsurf_core::implicit::analyze_implicit;
use devsurf_core::parametric::analyze_parametric;
use std::hint::black_box;

fn implicit_pipelines(c: &mut Criterion) {
    let cfg = AnalysisConfig::default();
    let mut g = c.benchmark_group("implicit");
    for (name, text) in [("cone", CONE), ("cylinder", CYLINDER), ("tangent", TANGENT)] {
        let f = implicit(text);
        g.bench_function(name, |b| b.iter(|| analyze_implicit(black_box(&f), &cfg)));
    }
    g.finish();
}

fn parametric_pipelines(c: &mut Criterion) {
    let cfg = AnalysisConfig::default();
    let mut g = c.benchmark_group("parametric");
    g.sample_size(10);
    for (name, text) in [("cone", CONE_MAP), ("tangent", TANGENT_MAP)] {
        let p = map(text);
        g.bench_function(name, |b| b.iter(|| analyze_parametric(black_box(&p), &cfg)));
    }
    g.finish();
}

criterion_group!(benches, implicit_pipelines, parametric_pipelines);
criterion_main!(benches);
