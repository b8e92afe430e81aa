use criterion::{criterion_group, criterion_main, Criterion};

use binomac::identities::{run_check, CheckConfig};
use binomac::Interpolator;

fn catalog_entries(c: &mut Criterion) {
    let mut group = c.benchmark_group("check n=2 deg=3");
    group.sample_size(10);
    let cfg = CheckConfig::new(2, 3, 0);
    for id in ["eigen-qt", "discr-qt", "binom-qt", "binom-r", "oko-r", "symm-lemma"] {
        group.bench_function(id, |b| {
            b.iter(|| run_check(id, &cfg, &Interpolator::new(), false).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, catalog_entries);
criterion_main!(benches);
