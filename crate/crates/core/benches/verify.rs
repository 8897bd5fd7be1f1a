//! Parallel against sequential verification of graph motion plans.
//!
//! Without the `parallel` feature both variants run sequentially, which makes
//! the comparison a check of the fallback's overhead.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::hint::black_box;
use wildcat::graph::{fixtures, MultiGraph};
use wildcat::planner::{plan_graph, verify_plan, verify_plan_sequential, VerifyParams};
use wildcat::random::random_graph;

fn graphs() -> Vec<(&'static str, MultiGraph)> {
    vec![
        ("circle-with-hair", fixtures::circle_with_hair()),
        ("K4", fixtures::complete(4)),
        ("random-20", random_graph(&mut ChaCha8Rng::seed_from_u64(20), 20)),
    ]
}

fn bench_verify(c: &mut Criterion) {
    let params = VerifyParams { samples: 2_000, ..VerifyParams::default() };
    let mut group = c.benchmark_group("verify");
    group.sample_size(10);
    group.throughput(Throughput::Elements(params.samples as u64));
    for (name, g) in graphs() {
        let plan = plan_graph(&g).unwrap();
        group.bench_with_input(BenchmarkId::new("parallel", name), &g, |b, g| {
            b.iter(|| black_box(verify_plan(&plan, g, &params)))
        });
        group.bench_with_input(BenchmarkId::new("sequential", name), &g, |b, g| {
            b.iter(|| black_box(verify_plan_sequential(&plan, g, &params)))
        });
    }
    group.finish();
}

criterion_group!(benches, bench_verify);
criterion_main!(benches);
