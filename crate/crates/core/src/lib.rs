//! Quiver representations: bilinear forms and reflections, generic hom and
//! ext dimensions, canonical decompositions, the generalized Kronecker
//! quivers, explicit representations over exact fields, and the reduction of
//! Schur roots to matrices up to simultaneous conjugacy.

pub mod candecomp;
pub mod corpus;
pub mod decomp;
pub mod dimvec;
pub mod error;
pub mod field;
pub mod homext;
pub mod io;
pub mod kronecker;
pub mod matrix;
pub mod normalform;
pub mod quiver;
pub mod rep;
pub mod word;

pub use candecomp::{uniform_rigid_summand, Decomposer};
pub use decomp::{Block, CanDecomp, RootClass, UniformVec};
pub use dimvec::{gcd, DimVec};
pub use error::{Error, Result};
pub use field::{Field, FieldDesc, PrimeField, Rationals, DEFAULT_PRIME};
pub use homext::GenericExt;
pub use kronecker::{candecomp_kronecker, classify, preinjective_dim, preprojective_dim, KroneckerClass};
pub use matrix::Matrix;
pub use normalform::{
    build_tilting_pair, inverse_from_kronecker, matrices_normal_form, moduli_report, perp_pair, rationality_flags,
    reduce_to_kronecker, reduction_tower, roundtrip_trials, simultaneous_conjugator, LeafKind, ModuliReport,
    Rationality, RoundTrip, TiltingPair, TowerNode, TowerStep,
};
pub use quiver::{greatest_divisor, Arrow, DoubleMap, Quiver, Sign};
pub use rep::{
    build_real_schur_rep, end_dim, ext_dim, hom_dim, hom_space, is_isomorphic, random_rep, HomComplex, Rep, RepMap,
};
pub use word::{find_word_for_real_root, ReflectionWord, WordStep};
