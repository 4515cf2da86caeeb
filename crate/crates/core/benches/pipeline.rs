use std::path::PathBuf;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use hclab::cylinder::{tot_mixed_complex, HopfCrossedCylinder};
use hclab::linalg::DEFAULT_DIM_CAP as CAP;
use hclab::report::{run_command, Command};
use hclab::scenario::{parse_scenario, Scenario};
use hclab::spectral::compute_e2;

fn scenario(name: &str) -> Scenario {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../scenarios").join(format!("{name}.scn"));
    parse_scenario(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn cylinder(s: &Scenario) -> HopfCrossedCylinder {
    let b = s.build().unwrap();
    HopfCrossedCylinder::new(b.action, b.cocycle).unwrap()
}

// With the default feature set the "1 thread" pool is the sequential
// baseline; build with --no-default-features to drop rayon from the core.
fn pools() -> Vec<(String, rayon::ThreadPool)> {
    let all = rayon::current_num_threads();
    let mut sizes = vec![1];
    if all > 1 {
        sizes.push(all);
    }
    sizes
        .into_iter()
        .map(|n| (format!("{n} threads"), rayon::ThreadPoolBuilder::new().num_threads(n).build().unwrap()))
        .collect()
}

fn pipeline(c: &mut Criterion) {
    let pools = pools();
    for name in ["S2", "S5"] {
        let s = scenario(name);
        let cyl = cylinder(&s);
        let mut g = c.benchmark_group(format!("pipeline/{name}"));
        g.sample_size(10);
        for (label, pool) in &pools {
            g.bench_function(BenchmarkId::new("tot", label), |b| {
                b.iter(|| pool.install(|| tot_mixed_complex(&cyl, 3, CAP).unwrap()))
            });
            g.bench_function(BenchmarkId::new("e2", label), |b| {
                b.iter(|| pool.install(|| compute_e2(&cyl, 2, 2, CAP).unwrap()))
            });
            g.bench_function(BenchmarkId::new("report", label), |b| {
                b.iter(|| pool.install(|| run_command(Command::Report, &s)))
            });
        }
        g.finish();
    }
}

criterion_group!(benches, pipeline);
criterion_main!(benches);
