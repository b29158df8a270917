use criterion::{criterion_group, criterion_main, Criterion};
use quivermod::Field;
use quivermod::{build_tilting_pair, corpus, random_rep, DimVec, HomComplex, Matrix, PrimeField, Rationals};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rref(c: &mut Criterion) {
    let f = PrimeField::default();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let m = Matrix::from_fn(60, 80, |_, _| f.random(&mut rng));
    c.bench_function("rank 60x80 over F_32003", |b| b.iter(|| m.rank(&f)));
    let q = Rationals;
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let m = Matrix::from_fn(12, 12, |_, _| q.random(&mut rng));
    c.bench_function("inverse 12x12 over Q", |b| b.iter(|| m.inverse(&q)));
}

fn hom_complex(c: &mut Criterion) {
    let f = PrimeField::default();
    let q = corpus::kronecker(3);
    let r = random_rep(&q, &DimVec::from([5, 12]), 1, &f).unwrap();
    let s = random_rep(&q, &DimVec::from([2, 3]), 2, &f).unwrap();
    c.bench_function("hom complex (5,12) -> (2,3) on Q(3)", |b| b.iter(|| HomComplex::new(&r, &s).unwrap().hom_dim()));
}

fn tilting(c: &mut Criterion) {
    let f = PrimeField::default();
    let mut group = c.benchmark_group("tilting pair");
    group.sample_size(10);
    group.bench_function("Q(3) (1,1)", |b| b.iter(|| build_tilting_pair(3, &DimVec::from([1, 1]), 0, &f).unwrap()));
    group.bench_function("Q(3) (2,3)", |b| b.iter(|| build_tilting_pair(3, &DimVec::from([2, 3]), 0, &f).unwrap()));
    group.finish();
}

criterion_group!(benches, rref, hom_complex, tilting);
criterion_main!(benches);
