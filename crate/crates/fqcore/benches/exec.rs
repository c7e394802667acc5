use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use fqcore::clifford::{make_base, random_pair_near, BaseKind};
use fqcore::fqops::identities::catalog;
use fqcore::fqops::registry;
use fqcore::mixedbase::{extract_row, SectorAssignment};
use fqcore::Exec;

fn catalog_residuals(c: &mut Criterion) {
    let base = make_base(BaseKind::Tensor(2));
    let asg = SectorAssignment::reference();
    let pairs: Vec<_> = (0..8).map(|s| random_pair_near(&base, &asg, 0.05, s).unwrap()).collect();
    let ids = catalog();
    let mut g = c.benchmark_group("catalog");
    g.sample_size(10);
    for exec in [Exec::Sequential, Exec::Parallel] {
        g.bench_with_input(BenchmarkId::from_parameter(format!("{exec:?}")), &exec, |b, &exec| {
            b.iter(|| exec.map(&ids, |id| pairs.iter().map(|p| id.residual(p).unwrap_or(f64::NAN)).fold(0.0, f64::max)))
        });
    }
    g.finish();
}

fn expansion_rows(c: &mut Criterion) {
    let base = make_base(BaseKind::Pauli2);
    let asg = SectorAssignment::reference();
    let ops = registry();
    let mut g = c.benchmark_group("extract_row");
    g.sample_size(10);
    for exec in [Exec::Sequential, Exec::Parallel] {
        g.bench_with_input(BenchmarkId::from_parameter(format!("{exec:?}")), &exec, |b, &exec| {
            b.iter(|| exec.map(&ops, |o| extract_row(o, &base, &asg, 1e-3).map(|r| r.len()).unwrap_or(0)))
        });
    }
    g.finish();
}

criterion_group!(benches, catalog_residuals, expansion_rows);
criterion_main!(benches);
