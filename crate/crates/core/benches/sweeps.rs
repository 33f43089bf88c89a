use criterion::{criterion_group, criterion_main, Criterion};
use intertwine::torus::{residual_sweep, BasisConvention};
use intertwine::verify::{run_diamond_checks_with, run_interface_checks_with, GridSpec, Standard};
use intertwine::Execution;

fn grid() -> GridSpec {
    GridSpec { p: 2..=5, q: 2..=5, jp: 0..=5, j: 0..=5, r: 0..=3, ..GridSpec::default() }
}

fn sweeps(c: &mut Criterion) {
    let g = grid();
    let mut group = c.benchmark_group("verify");
    group.sample_size(10);
    for (name, exec) in [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)] {
        group.bench_function(format!("diamond/{name}"), |b| b.iter(|| run_diamond_checks_with(&Standard, &g, exec)));
        group.bench_function(format!("interface/{name}"), |b| b.iter(|| run_interface_checks_with(&Standard, &g, exec)));
        group.bench_function(format!("torus-m12/{name}"), |b| {
            b.iter(|| residual_sweep(12, &[0, 1, 2], &[1, 2, 3], BasisConvention::Standard, 1e-9, exec).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, sweeps);
criterion_main!(benches);
