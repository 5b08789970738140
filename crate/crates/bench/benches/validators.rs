use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use vrank_bench::planar_instance;
use vrank_core::{is_l_vr, is_us, is_vr, layered_us_coloring, DEFAULT_PATH_BUDGET};

fn bench_us_validation(c: &mut Criterion) {
    let mut group = c.benchmark_group("is_us");
    for n in [1024usize, 4096] {
        let g = planar_instance(n);
        let (coloring, _) = layered_us_coloring(&g);
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, _| {
            b.iter(|| is_us(&g, &coloring).expect("within budget"))
        });
    }
    group.finish();
}

fn bench_lvr_validation(c: &mut Criterion) {
    let g = planar_instance(1024);
    let (coloring, _) = layered_us_coloring(&g);
    for l in [3usize, 4] {
        c.bench_function(&format!("is_l_vr/apollonian-1024-l{l}"), |b| {
            b.iter(|| is_l_vr(&g, &coloring, l, DEFAULT_PATH_BUDGET).expect("within budget"))
        });
    }
}

fn bench_vr_validation(c: &mut Criterion) {
    let g = planar_instance(4096);
    let (coloring, _) = layered_us_coloring(&g);
    c.bench_function("is_vr/apollonian-4096", |b| {
        b.iter(|| is_vr(&g, &coloring).expect("total"))
    });
}

criterion_group!(benches, bench_us_validation, bench_lvr_validation, bench_vr_validation);
criterion_main!(benches);
