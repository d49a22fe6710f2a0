//! Compares the parallel batch driver against the sequential fallback on a
//! sweep of verification cases, plus the single-word profile throughput
//! that dominates each case.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use repx_core::analysis::both_profiles;
use repx_core::expansions::generate_word;
use repx_core::verify::{run_batch, run_batch_sequential, RunConfig, VerificationCase};
use repx_core::words::Alphabet;

fn sweep_config(out: &std::path::Path, cases: usize) -> RunConfig {
    // distinct sturmian slopes, one case each
    let slopes = [
        "sturmian(-1/2+1/2*sqrt(5),0)",
        "sturmian(-1+sqrt(2),0)",
        "sturmian(-1+sqrt(3),1/2)",
        "sturmian(-4+sqrt(19),0)",
        "sturmian(-2+sqrt(6),1/3)",
        "sturmian(-3+sqrt(11),0)",
        "sturmian(-1/2+1/2*sqrt(3),0)",
        "sturmian(-2+sqrt(5),1/4)",
    ];
    RunConfig {
        cache_dir: None,
        precision_cap_bits: 1 << 16,
        output_dir: out.to_path_buf(),
        cases: slopes
            .iter()
            .cycle()
            .take(cases)
            .map(|slope| VerificationCase {
                spec: slope.parse().unwrap(),
                base: Alphabet::binary(),
                digit_count: 2048,
                n_max: 256,
                window: (32, 256),
                mu_hint: None,
            })
            .collect(),
    }
}

fn bench_batch(c: &mut Criterion) {
    let dir = tempfile::tempdir().unwrap();
    let config = sweep_config(dir.path(), 8);
    let mut group = c.benchmark_group("verify_batch");
    group.sample_size(10);
    group.bench_function(BenchmarkId::new("sequential", 8), |b| {
        b.iter(|| run_batch_sequential(&config).unwrap())
    });
    group.bench_function(BenchmarkId::new("parallel", 8), |b| {
        b.iter(|| run_batch(&config).unwrap())
    });
    group.finish();
}

fn bench_profiles(c: &mut Criterion) {
    let word = generate_word(&"fibonacci".parse().unwrap(), 100_000).unwrap();
    let mut group = c.benchmark_group("profiles");
    group.sample_size(20);
    group.bench_function("fibonacci_100k_nmax1000", |b| {
        b.iter(|| both_profiles(&word, 1000).unwrap())
    });
    group.finish();
}

criterion_group!(benches, bench_batch, bench_profiles);
criterion_main!(benches);
