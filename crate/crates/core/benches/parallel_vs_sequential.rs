use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use domcrit::criticality::CriticalityProfile;
use domcrit::domination::gamma;
use domcrit::enumerate::graphs_by_order;
use domcrit::verify::{self, ScanConfig, TheoremId, VerifyConfig};
use domcrit::Execution;

const MODES: [(&str, Execution); 2] = [
    ("sequential", Execution::Sequential),
    ("parallel", Execution::Parallel),
];

fn batch_gamma(c: &mut Criterion) {
    let graphs: Vec<_> = graphs_by_order(7, false, Execution::Parallel)
        .unwrap()
        .into_iter()
        .flatten()
        .collect();
    let mut group = c.benchmark_group("batch_gamma_n7");
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| exec.map(&graphs, gamma))
        });
    }
    group.finish();

    let mut group = c.benchmark_group("batch_profile_n7");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| exec.map(&graphs, CriticalityProfile::compute))
        });
    }
    group.finish();
}

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_connected_n8");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| graphs_by_order(8, true, exec).unwrap())
        });
    }
    group.finish();
}

fn scan(c: &mut Criterion) {
    let mut group = c.benchmark_group("diameter_scan_n7");
    group.sample_size(10);
    for (name, exec) in MODES {
        let config = VerifyConfig {
            theorems: vec![
                TheoremId::CriticalDiameterBound,
                TheoremId::WeakBicriticalExtremal,
                TheoremId::SufficientPairBound4,
            ],
            scan: ScanConfig::default(),
            execution: exec,
            ..VerifyConfig::default()
        };
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| verify::run(&config).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, batch_gamma, enumeration, scan);
criterion_main!(benches);
