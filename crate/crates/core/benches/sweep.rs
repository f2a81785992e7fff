use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use subres_core::par::Exec;
use subres_core::sweep::{cmd_verify, SMode, SweepConfig};

fn config() -> SweepConfig {
    SweepConfig {
        degree_vectors: Some(vec![vec![3, 2], vec![4, 3], vec![2, 2, 2], vec![3, 2, 1], vec![3, 1, 1]]),
        s_mode: SMode::Sample(4),
        ..SweepConfig::standard(7)
    }
}

fn serial_vs_parallel(c: &mut Criterion) {
    let cfg = config();
    let mut group = c.benchmark_group("sweep");
    group.sample_size(10);
    group.bench_function("serial", |b| b.iter(|| black_box(cmd_verify(&cfg, Exec::Serial).unwrap())));
    group.bench_function("parallel", |b| b.iter(|| black_box(cmd_verify(&cfg, Exec::Parallel { jobs: 0 }).unwrap())));
    group.finish();
}

criterion_group!(benches, serial_vs_parallel);
criterion_main!(benches);
