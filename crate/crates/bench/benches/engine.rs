use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use wdeg_core::gen::{apollonian, random_triangulation, triangulated_grid};
use wdeg_core::witness_planar_4;

fn plane_witness(c: &mut Criterion) {
    let mut group = c.benchmark_group("witness_planar_4");
    group.sample_size(10);
    for n in [50, 200, 500, 1000] {
        let g = apollonian(n, 1).unwrap();
        group.bench_with_input(BenchmarkId::new("apollonian", n), &g, |b, g| {
            b.iter(|| witness_planar_4(g).unwrap())
        });
        let g = random_triangulation(n, 1).unwrap();
        group.bench_with_input(BenchmarkId::new("flipped", n), &g, |b, g| {
            b.iter(|| witness_planar_4(g).unwrap())
        });
    }
    let g = triangulated_grid(10, 10).unwrap();
    group.bench_function("grid_10x10", |b| b.iter(|| witness_planar_4(&g).unwrap()));
    group.finish();
}

criterion_group!(benches, plane_witness);
criterion_main!(benches);
