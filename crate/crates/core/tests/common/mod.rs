#![allow(dead_code)]

use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestRng, TestRunner};
use quivermod::corpus;
use quivermod::{gcd, CanDecomp, Decomposer, DimVec, GenericExt, Quiver, RootClass};

/// Every non-zero vector of length `len` with entry sum at most `max_total`.
pub fn vectors_up_to(len: usize, max_total: i64) -> Vec<DimVec> {
    fn go(prefix: &mut Vec<i64>, len: usize, left: i64, out: &mut Vec<DimVec>) {
        if prefix.len() == len {
            if prefix.iter().any(|&x| x > 0) {
                out.push(DimVec::new(prefix.clone()));
            }
            return;
        }
        for x in 0..=left {
            prefix.push(x);
            go(prefix, len, left - x, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), len, max_total, &mut out);
    out
}

/// Exhaustive decomposition, lifting cyclic quivers to their double.
pub struct Oracle {
    quiver: Quiver,
    inner: GenericExt,
}

impl Oracle {
    pub fn new(q: &Quiver) -> Oracle {
        let inner = GenericExt::new(if q.is_acyclic() { q.clone() } else { q.double().0 });
        Oracle { quiver: q.clone(), inner }
    }

    pub fn decompose(&self, alpha: &DimVec) -> CanDecomp {
        let q = &self.quiver;
        if q.is_acyclic() {
            self.inner.candecomp_oracle(alpha, 24).unwrap()
        } else {
            self.inner
                .candecomp_oracle(&q.lift_dimvec(alpha).unwrap(), 24)
                .unwrap()
                .map_roots(q, |r| q.pull_back_dimvec(r))
                .unwrap()
        }
    }
}

pub fn deterministic_runner(cases: u32) -> TestRunner {
    let config = Config { cases, max_global_rejects: 100_000, failure_persistence: None, ..Config::default() };
    TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha))
}

/// Corpus index, six raw entries in `0..=3` and a vertex choice.
pub fn corpus_case() -> impl Strategy<Value = (usize, Vec<i64>, Vec<i64>, usize)> {
    (0..corpus::all().len(), prop::collection::vec(0i64..=3, 6), prop::collection::vec(0i64..=3, 6), 0usize..6)
}

fn pick(idx: usize, raw: &[i64], raw2: &[i64], v: usize) -> (Quiver, DimVec, DimVec, usize) {
    let (_, q) = corpus::all().swap_remove(idx);
    let n = q.vertex_count();
    (q, DimVec::new(raw[..n].to_vec()), DimVec::new(raw2[..n].to_vec()), v % n)
}

pub fn reflection_is_involutive_isometry(case: &(usize, Vec<i64>, Vec<i64>, usize)) -> Result<(), TestCaseError> {
    let (q, a, b, v) = pick(case.0, &case.1, &case.2, case.3);
    prop_assume!(q.loops_at(v) == 0);
    let ra = q.reflect(v, &a).unwrap();
    let rb = q.reflect(v, &b).unwrap();
    prop_assert_eq!(q.reflect(v, &ra).unwrap(), a.clone());
    prop_assert_eq!(q.kac_form(&ra, &rb).unwrap(), q.kac_form(&a, &b).unwrap());
    Ok(())
}

pub fn double_preserves_euler(case: &(usize, Vec<i64>, Vec<i64>, usize)) -> Result<(), TestCaseError> {
    let (q, a, b, _) = pick(case.0, &case.1, &case.2, case.3);
    let (dq, _) = q.double();
    prop_assert!(dq.is_acyclic());
    let (la, lb) = (q.lift_dimvec(&a).unwrap(), q.lift_dimvec(&b).unwrap());
    prop_assert_eq!(dq.euler_form(&la, &lb).unwrap(), q.euler_form(&a, &b).unwrap());
    prop_assert_eq!(q.pull_back_dimvec(&la).unwrap(), a);
    Ok(())
}

pub fn dual_transposes_euler(case: &(usize, Vec<i64>, Vec<i64>, usize)) -> Result<(), TestCaseError> {
    let (q, a, b, _) = pick(case.0, &case.1, &case.2, case.3);
    prop_assert_eq!(q.dual().euler_form(&a, &b).unwrap(), q.euler_form(&b, &a).unwrap());
    prop_assert_eq!(q.dual().dual(), q);
    Ok(())
}

pub fn candecomp_invariants(case: &(usize, Vec<i64>, Vec<i64>, usize)) -> Result<(), TestCaseError> {
    let (q, a, _, _) = pick(case.0, &case.1, &case.2, case.3);
    prop_assume!(!a.is_zero() && a.total() <= 8);
    let dec = Decomposer::new(q.clone());
    let d = dec.canonical_decomposition(&a).unwrap();
    prop_assert_eq!(d.total(q.vertex_count()), a.clone());
    let hx = dec.generic();
    for (i, x) in d.blocks().iter().enumerate() {
        prop_assert!(dec.is_schur(&x.root).unwrap(), "{:?} is not Schur", x.root);
        prop_assert_eq!(x.class, RootClass::of(&q, &x.root).unwrap());
        if x.mult > 1 {
            prop_assert!(x.class != RootClass::NonIsotropic);
        }
        for (j, y) in d.blocks().iter().enumerate() {
            if i != j && q.is_acyclic() {
                prop_assert_eq!(hx.ext(&x.root, &y.root).unwrap(), 0);
            }
        }
    }
    Ok(())
}

pub fn rigid_split_gcd(case: &(usize, Vec<i64>, Vec<i64>, usize)) -> Result<(), TestCaseError> {
    let (q, a, _, _) = pick(case.0, &case.1, &case.2, case.3);
    prop_assume!(!a.is_zero() && a.total() <= 9);
    let (sup, _) = q.support(&a).unwrap();
    prop_assume!(sup.is_acyclic() && sup.vertex_count() >= 2);
    let dec = Decomposer::new(q.clone());
    prop_assume!(dec.is_schur(&a).unwrap());
    let (sub, quot) = dec.rigid_split(&a).unwrap();
    prop_assert_eq!(&sub.vector + &quot.vector, a.clone());
    prop_assert_eq!(gcd(sub.vector.gcd(), quot.vector.gcd()), a.gcd());
    Ok(())
}

pub type Property = fn(&(usize, Vec<i64>, Vec<i64>, usize)) -> Result<(), TestCaseError>;

pub const PROPERTIES: [(&str, Property); 5] = [
    ("reflection involution and isometry", reflection_is_involutive_isometry),
    ("double quiver preserves the Euler form", double_preserves_euler),
    ("dual transposes the Euler form", dual_transposes_euler),
    ("canonical decomposition invariants", candecomp_invariants),
    ("rigid split gcd identity", rigid_split_gcd),
];
