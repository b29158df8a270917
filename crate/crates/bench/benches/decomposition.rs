use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use quivermod::{candecomp_kronecker, corpus, Decomposer, DimVec, GenericExt};

fn fast_vs_oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("candecomp");
    for (name, alpha) in [("D4", DimVec::from([2, 2, 2, 3])), ("Q(3)", DimVec::from([4, 5]))] {
        let q = if name == "D4" { corpus::d4_subspace() } else { corpus::kronecker(3) };
        group.bench_with_input(BenchmarkId::new("fast", name), &alpha, |b, alpha| {
            b.iter(|| Decomposer::new(q.clone()).canonical_decomposition(alpha).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("oracle", name), &alpha, |b, alpha| {
            b.iter(|| GenericExt::new(q.clone()).candecomp_oracle(alpha, 24).unwrap())
        });
    }
    group.bench_function("cyclic via double", |b| {
        b.iter(|| Decomposer::new(corpus::triangle()).canonical_decomposition(&DimVec::from([2, 3, 2])).unwrap())
    });
    group.finish();
}

fn kronecker(c: &mut Criterion) {
    c.bench_function("candecomp_kronecker Q(5) (144,89)", |b| {
        b.iter(|| candecomp_kronecker(5, &DimVec::from([144, 89])).unwrap())
    });
}

criterion_group!(benches, fast_vs_oracle, kronecker);
criterion_main!(benches);
