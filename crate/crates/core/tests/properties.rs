mod common;

use common::{corpus_case, PROPERTIES};
use proptest::prelude::*;
use quivermod::corpus;
use quivermod::{hom_dim, random_rep, DimVec, HomComplex, PrimeField};

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn reflection_involution_isometry(case in corpus_case()) {
        (PROPERTIES[0].1)(&case)?;
    }

    #[test]
    fn double_preserves_euler(case in corpus_case()) {
        (PROPERTIES[1].1)(&case)?;
    }

    #[test]
    fn dual_transposes_euler(case in corpus_case()) {
        (PROPERTIES[2].1)(&case)?;
    }

    #[test]
    fn candecomp_invariants(case in corpus_case()) {
        (PROPERTIES[3].1)(&case)?;
    }

    #[test]
    fn rigid_split_gcd(case in corpus_case()) {
        (PROPERTIES[4].1)(&case)?;
    }

    #[test]
    fn hom_minus_ext_is_euler(a in prop::collection::vec(0i64..=3, 4), b in prop::collection::vec(0i64..=3, 4), seed in any::<u64>()) {
        let q = corpus::d4_subspace();
        let (a, b) = (DimVec::new(a), DimVec::new(b));
        let f = PrimeField::default();
        let r = random_rep(&q, &a, seed, &f).unwrap();
        let s = random_rep(&q, &b, seed ^ 1, &f).unwrap();
        let c = HomComplex::new(&r, &s).unwrap();
        prop_assert_eq!(c.hom_dim() as i64 - c.ext_dim() as i64, q.euler_form(&a, &b).unwrap());
        prop_assert_eq!(hom_dim(&r, &s).unwrap(), c.hom_dim());
    }
}
