//! Parallel vs single-threaded execution of the heavy kernels. Build with
//! `--no-default-features` to measure the rayon-free sequential path.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use filiform_core::cohomology::{cohomology_dims, delta_sparse};
use filiform_core::derivations::is_complete;
use filiform_core::families::{build_family, build_r_h, FamilySpec};
use filiform_core::rational::int;

fn pools() -> Vec<(&'static str, rayon::ThreadPool)> {
    let one = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap();
    let all = rayon::ThreadPoolBuilder::new().build().unwrap();
    vec![("1-thread", one), ("all-threads", all)]
}

fn h2_of_r_h(c: &mut Criterion) {
    let r = build_r_h(4, 5, &[int(1), int(2), int(3)]).unwrap();
    let mut group = c.benchmark_group("H2 r_h k=4 h=5");
    group.sample_size(10);
    for (name, pool) in pools() {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| pool.install(|| cohomology_dims(&r.algebra, 2)))
        });
    }
    group.finish();
}

fn coboundary_product(c: &mut Criterion) {
    let g = build_family(&"A n=12 k=4 lambda=1,2,3".parse::<FamilySpec>().unwrap()).unwrap();
    let mut group = c.benchmark_group("delta3 delta2 A n=12");
    group.sample_size(10);
    for (name, pool) in pools() {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| pool.install(|| delta_sparse(&g, 3).mul(&delta_sparse(&g, 2)).is_zero()))
        });
    }
    group.finish();
}

fn completeness(c: &mut Criterion) {
    let g = build_family(
        &"semidirect C n=10 lambda=1,2,3"
            .parse::<FamilySpec>()
            .unwrap(),
    )
    .unwrap();
    let mut group = c.benchmark_group("complete C n=10 + t");
    for (name, pool) in pools() {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| pool.install(|| is_complete(&g)))
        });
    }
    group.finish();
}

criterion_group!(benches, h2_of_r_h, coboundary_product, completeness);
criterion_main!(benches);
