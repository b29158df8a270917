use quivermod::corpus;
use quivermod::{
    build_real_schur_rep, build_tilting_pair, candecomp_kronecker, classify, end_dim, ext_dim, greatest_divisor,
    hom_dim, inverse_from_kronecker, is_isomorphic, matrices_normal_form, moduli_report, perp_pair, preprojective_dim,
    random_rep, reduce_to_kronecker, reduction_tower, uniform_rigid_summand, Block, CanDecomp, Decomposer, DimVec,
    Field, GenericExt, KroneckerClass, PrimeField, Rationality, RootClass, TowerStep,
};

fn dv<const N: usize>(x: [i64; N]) -> DimVec {
    x.into()
}

fn roots(d: &CanDecomp) -> Vec<(DimVec, u64, RootClass)> {
    d.blocks().iter().map(|b| (b.root.clone(), b.mult, b.class)).collect()
}

#[test]
fn forms_and_reflections() {
    let k2 = corpus::kronecker(2);
    let k3 = corpus::kronecker(3);
    let a2 = corpus::a2();
    assert_eq!(k3.euler_form(&dv([1, 1]), &dv([1, 1])).unwrap(), -1);
    assert_eq!(a2.euler_form(&dv([1, 0]), &dv([0, 1])).unwrap(), -1);
    assert_eq!(k2.kac_form(&dv([1, 1]), &dv([1, 1])).unwrap(), 0);
    assert_eq!(k3.kac_form(&dv([1, 1]), &dv([1, 1])).unwrap(), -2);
    assert_eq!(k3.reflect(0, &dv([2, 2])).unwrap(), dv([4, 2]));
    assert_eq!(k2.reflect(1, &dv([3, 5])).unwrap(), dv([3, 1]));
    assert!(k2.is_fundamental(&dv([1, 1])).unwrap());
    assert!(k3.is_fundamental(&dv([2, 3])).unwrap());
    assert!(!a2.is_fundamental(&dv([1, 1])).unwrap());
    assert_eq!(corpus::loops(1).reflect(0, &dv([1])).unwrap_err().reason(), "unsupported_vertex");
}

#[test]
fn supports_divisors_and_null_vectors() {
    let (sup, verts) = corpus::a2().support(&dv([1, 0])).unwrap();
    assert_eq!((sup.vertex_count(), sup.arrow_count(), verts), (1, 0, vec![0]));
    assert!(sup.is_connected());
    assert!(!corpus::loops(1).is_acyclic());
    let tri = corpus::triangle();
    assert!(!tri.is_acyclic() && tri.sinks().is_empty());
    assert_eq!(greatest_divisor(&dv([2, 2])).unwrap(), 2);
    assert_eq!(greatest_divisor(&dv([3, 5])).unwrap(), 1);
    assert_eq!(greatest_divisor(&dv([6, 9, 15])).unwrap(), 3);
    assert!(corpus::kronecker(2).is_null_dimvec(&dv([1, 1])).unwrap());
    assert!(corpus::kronecker(2).is_null_dimvec(&dv([2, 2])).unwrap());
    assert!(!corpus::kronecker(3).is_null_dimvec(&dv([2, 2])).unwrap());
}

#[test]
fn loop_quiver_doubles_to_kronecker() {
    let (dq, _) = corpus::loops(1).double();
    assert_eq!(dq.kronecker_shape(), Some((0, 1, 2)));
    assert_eq!(corpus::loops(1).lift_dimvec(&dv([3])).unwrap(), dv([3, 3]));
}

#[test]
fn generic_subs_and_ext() {
    let a2 = GenericExt::new(corpus::a2());
    assert!(a2.is_generic_sub(&dv([1, 1]), &dv([2, 1])).unwrap());
    assert!(a2.is_generic_sub(&dv([0, 0]), &dv([2, 1])).unwrap());
    assert!(a2.is_generic_sub(&dv([2, 1]), &dv([2, 1])).unwrap());
    assert_eq!(a2.ext(&dv([1, 1]), &dv([1, 0])).unwrap(), 0);
    assert_eq!(a2.hom(&dv([1, 1]), &dv([1, 0])).unwrap(), 1);
    let k2 = GenericExt::new(corpus::kronecker(2));
    assert!(!k2.is_generic_sub(&dv([1, 0]), &dv([1, 1])).unwrap());
    let k3 = GenericExt::new(corpus::kronecker(3));
    assert_eq!(k3.ext(&dv([1, 0]), &dv([0, 1])).unwrap(), 3);
    assert_eq!(k3.ext(&dv([0, 1]), &dv([1, 0])).unwrap(), 0);
}

#[test]
fn kronecker_examples() {
    assert_eq!(preprojective_dim(3, 2).unwrap(), dv([3, 8]));
    let p: Vec<DimVec> = (0..4).map(|l| preprojective_dim(2, l).unwrap()).collect();
    assert_eq!(p, vec![dv([0, 1]), dv([1, 2]), dv([2, 3]), dv([3, 4])]);
    assert_eq!(preprojective_dim(5, 1).unwrap(), dv([1, 5]));
    assert_eq!(classify(2, &dv([1, 3])).unwrap(), KroneckerClass::Preprojective { l: 0, c: 1, d: 1 });
    assert_eq!(classify(2, &dv([2, 2])).unwrap(), KroneckerClass::DivisibleNull { h: 2 });
    let KroneckerClass::SchurRoot { word, .. } = classify(3, &dv([2, 2])).unwrap() else { panic!() };
    assert!(word.is_empty());
    let d = candecomp_kronecker(2, &dv([1, 3])).unwrap();
    assert_eq!(roots(&d), vec![(dv([1, 2]), 1, RootClass::Real), (dv([0, 1]), 1, RootClass::Real)]);
    let d = candecomp_kronecker(1, &dv([2, 1])).unwrap();
    assert_eq!(roots(&d), vec![(dv([1, 1]), 1, RootClass::Real), (dv([1, 0]), 1, RootClass::Real)]);
    assert!(classify(0, &dv([1, 1])).is_err());
}

#[test]
fn canonical_decomposition_examples() {
    let a2 = Decomposer::new(corpus::a2());
    let d = a2.canonical_decomposition(&dv([2, 1])).unwrap();
    assert_eq!(roots(&d), vec![(dv([1, 1]), 1, RootClass::Real), (dv([1, 0]), 1, RootClass::Real)]);
    assert_eq!(uniform_rigid_summand(a2.quiver(), &d).unwrap().root, dv([1, 0]));
    let single = CanDecomp::single(Block::new(a2.quiver(), dv([1, 1]), 1).unwrap());
    assert_eq!(uniform_rigid_summand(a2.quiver(), &single).unwrap().root, dv([1, 1]));

    let l1 = Decomposer::new(corpus::loops(1));
    assert_eq!(roots(&l1.canonical_decomposition(&dv([3])).unwrap()), vec![(dv([1]), 3, RootClass::Isotropic)]);
    let k3 = Decomposer::new(corpus::kronecker(3));
    assert!(k3.is_schur(&dv([2, 2])).unwrap());
    assert!(k3.is_schur(&dv([2, 3])).unwrap());
    assert!(!Decomposer::new(corpus::kronecker(2)).is_schur(&dv([2, 2])).unwrap());
    assert!(!a2.is_schur(&dv([2, 1])).unwrap());
}

#[test]
fn representation_examples() {
    let f = PrimeField::default();
    let a2 = corpus::a2();
    let r = build_real_schur_rep(&a2, &dv([1, 1]), None, &f).unwrap();
    assert_ne!(*r.map(0).get(0, 0), 0);
    let k3 = corpus::kronecker(3);
    let p1 = build_real_schur_rep(&k3, &dv([1, 3]), None, &f).unwrap();
    assert_eq!(end_dim(&p1).unwrap(), 1);
    let p2 = build_real_schur_rep(&k3, &dv([3, 8]), None, &f).unwrap();
    assert_eq!(ext_dim(&p2, &p2).unwrap(), 0);
    assert!(is_isomorphic(&p2, &p2).unwrap());
    let k2 = corpus::kronecker(2);
    let x = random_rep(&k2, &dv([1, 1]), 1, &f).unwrap();
    let y = random_rep(&k2, &dv([1, 1]), 2, &f).unwrap();
    assert!(!is_isomorphic(&x, &y).unwrap());
}

#[test]
fn reduction_examples() {
    let f = PrimeField::default();
    assert_eq!(perp_pair(3, &dv([1, 1])).unwrap(), dv([2, 5]));
    let tp = build_tilting_pair(3, &dv([1, 1]), 4, &f).unwrap();
    assert_eq!(hom_dim(&tp.s, &tp.t).unwrap(), 3);

    let r1 = random_rep(tp.s.quiver(), &dv([1, 1]), 11, &f).unwrap();
    let m1 = reduce_to_kronecker(&tp, &r1).unwrap();
    assert_eq!(m1.dims(), &dv([1, 1]));
    assert!(m1.maps().iter().any(|m| *m.get(0, 0) != 0));
    assert_eq!(matrices_normal_form(&m1).unwrap().len(), 2);

    // R + R is not general but still reduces and comes back.
    let rr = tp.r.direct_sum(&tp.r).unwrap();
    let m = reduce_to_kronecker(&tp, &rr).unwrap();
    assert_eq!(m.dims(), &dv([2, 2]));
    assert!(is_isomorphic(&inverse_from_kronecker(&tp, &m).unwrap(), &rr).unwrap());

    let general = random_rep(&corpus::kronecker(3), &dv([2, 2]), 5, &f).unwrap();
    let back = inverse_from_kronecker(&tp, &general).unwrap();
    assert_eq!(back.dims(), &dv([2, 2]));
    assert!(is_isomorphic(&reduce_to_kronecker(&tp, &back).unwrap(), &general).unwrap());
}

#[test]
fn moduli_and_tower_examples() {
    let k3 = Decomposer::new(corpus::kronecker(3));
    let r = moduli_report(&k3, &dv([2, 2])).unwrap();
    assert_eq!((r.h, r.p), (2, 2));
    assert_eq!(r.model, "2 matrices of size 2x2 up to simultaneous conjugacy");
    assert!(r.flags.contains(&Rationality::Rational));
    let r = moduli_report(&k3, &dv([5, 5])).unwrap();
    assert_eq!(r.flags, vec![Rationality::StablyRational, Rationality::RetractRational]);
    assert_eq!(moduli_report(&k3, &dv([1, 0])).unwrap().p, 0);

    let t = reduction_tower(&k3, &dv([2, 2])).unwrap();
    let TowerStep::Split { reduced, .. } = &t.step else { panic!("expected a split") };
    assert_eq!((reduced.dim.clone(), reduced.h, reduced.p), (dv([2, 2]), 2, 2));
    let leaf = reduction_tower(&k3, &dv([1, 3])).unwrap();
    assert!(matches!(leaf.step, TowerStep::Leaf { .. }));
    assert_eq!((leaf.h, leaf.p), (1, 0));

    let l1 = Decomposer::new(corpus::loops(1));
    assert_eq!(reduction_tower(&l1, &dv([2])).unwrap_err().reason(), "input");
    let t = reduction_tower(&l1, &dv([1])).unwrap();
    assert_eq!((t.h, t.p), (1, 1));
}

#[test]
fn normal_form_intertwines_conjugation() {
    let f = PrimeField::default();
    let q = corpus::kronecker(3);
    let m = random_rep(&q, &dv([2, 2]), 3, &f).unwrap();
    let nf = matrices_normal_form(&m).unwrap();
    let g = quivermod::Matrix::from_fn(2, 2, |i, j| f.from_i64([[2, 1], [1, 1]][i][j]));
    let gi = g.inverse(&f).unwrap();
    // Acting by g at the source and the identity at the sink.
    let moved = quivermod::Rep::new(q, f, dv([2, 2]), m.maps().iter().map(|x| x.mul(&f, &gi)).collect()).unwrap();
    let nf2 = matrices_normal_form(&moved).unwrap();
    for (a, b) in nf.iter().zip(&nf2) {
        assert_eq!(&gi.mul(&f, b).mul(&f, &g), a);
    }
}
