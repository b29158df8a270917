//! Generic hom and ext dimensions between dimension vectors, computed by the
//! subrepresentation recursion, and the exhaustive splitting oracle for
//! canonical decompositions.

use std::collections::HashMap;
use std::hash::Hash;
use std::sync::RwLock;

use crate::decomp::{Block, CanDecomp, RootClass};
use crate::dimvec::DimVec;
use crate::error::{ensure, Error, Result};
use crate::quiver::Quiver;

/// Per-quiver memo of generic ext values and derived queries. Shared
/// references may be used from several threads at once.
#[derive(Debug)]
pub struct GenericExt {
    quiver: Quiver,
    ext_memo: RwLock<HashMap<(DimVec, DimVec), i64>>,
    oracle_memo: RwLock<HashMap<DimVec, CanDecomp>>,
}

fn lookup<K: Eq + Hash, V: Clone>(memo: &RwLock<HashMap<K, V>>, key: &K) -> Option<V> {
    memo.read().expect("memo lock poisoned").get(key).cloned()
}

fn store<K: Eq + Hash, V>(memo: &RwLock<HashMap<K, V>>, key: K, value: V) {
    memo.write().expect("memo lock poisoned").insert(key, value);
}

impl GenericExt {
    pub fn new(quiver: Quiver) -> GenericExt {
        GenericExt { quiver, ext_memo: RwLock::new(HashMap::new()), oracle_memo: RwLock::new(HashMap::new()) }
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    fn check(&self, alpha: &DimVec) -> Result<()> {
        self.quiver.check_dim(alpha)?;
        alpha.check_nonneg()
    }

    /// `ext(alpha, beta)`: the largest `-<alpha', beta>` over generic
    /// sub-dimension vectors `alpha'` of `alpha`.
    pub fn ext(&self, alpha: &DimVec, beta: &DimVec) -> Result<i64> {
        self.check(alpha)?;
        self.check(beta)?;
        Ok(self.ext_unchecked(alpha, beta))
    }

    /// `hom(alpha, beta) = <alpha, beta> + ext(alpha, beta)`.
    pub fn hom(&self, alpha: &DimVec, beta: &DimVec) -> Result<i64> {
        Ok(self.quiver.euler_form(alpha, beta)? + self.ext(alpha, beta)?)
    }

    /// Whether a general representation of dimension `alpha` has a
    /// subrepresentation of dimension `beta`.
    pub fn is_generic_sub(&self, beta: &DimVec, alpha: &DimVec) -> Result<bool> {
        self.check(alpha)?;
        self.check(beta)?;
        ensure!(beta.le(alpha), Error::input(format!("{beta:?} is not below {alpha:?}")));
        Ok(self.ext_unchecked(beta, &(alpha - beta)) == 0)
    }

    pub(crate) fn ext_unchecked(&self, alpha: &DimVec, beta: &DimVec) -> i64 {
        if alpha.is_zero() || beta.is_zero() {
            return 0;
        }
        let key = (alpha.clone(), beta.clone());
        if let Some(v) = lookup(&self.ext_memo, &key) {
            return v;
        }
        let mut candidates: Vec<(i64, DimVec)> = alpha
            .sub_vectors()
            .into_iter()
            .map(|s| (-self.quiver.euler(s.entries(), beta.entries()), s))
            .filter(|(val, _)| *val > 0)
            .collect();
        // Stable: ties keep graded-lex order.
        candidates.sort_by_key(|c| std::cmp::Reverse(c.0));
        let mut best = 0;
        for (val, sub) in candidates {
            if &sub == alpha || self.ext_unchecked(&sub, &(alpha - &sub)) == 0 {
                best = val;
                break;
            }
        }
        store(&self.ext_memo, key, best);
        best
    }

    /// Canonical decomposition by exhaustive search for a splitting
    /// `alpha = beta + gamma` with vanishing ext both ways.
    pub fn candecomp_oracle(&self, alpha: &DimVec, max_total: i64) -> Result<CanDecomp> {
        self.check(alpha)?;
        ensure!(
            alpha.total() <= max_total,
            Error::Resource(format!("total dimension {} exceeds the oracle cap {max_total}", alpha.total()))
        );
        self.oracle(alpha)
    }

    pub fn is_schur_oracle(&self, alpha: &DimVec, max_total: i64) -> Result<bool> {
        ensure!(!alpha.is_zero(), Error::input("the zero vector is not a root"));
        Ok(self.candecomp_oracle(alpha, max_total)?.is_single_schur())
    }

    fn oracle(&self, alpha: &DimVec) -> Result<CanDecomp> {
        if alpha.is_zero() {
            return Ok(CanDecomp::empty());
        }
        if let Some(d) = lookup(&self.oracle_memo, alpha) {
            return Ok(d);
        }
        let split = alpha.sub_vectors().into_iter().find(|beta| {
            if beta.is_zero() || beta == alpha {
                return false;
            }
            let gamma = alpha - beta;
            self.ext_unchecked(beta, &gamma) == 0 && self.ext_unchecked(&gamma, beta) == 0
        });
        let d = match split {
            Some(beta) => {
                let gamma = alpha - &beta;
                self.oracle(&beta)?.merge(self.oracle(&gamma)?)?
            }
            None => {
                let block = Block::new(&self.quiver, alpha.clone(), 1)?;
                ensure!(
                    block.class == RootClass::NonIsotropic || alpha.gcd() == 1,
                    Error::internal(format!("indecomposable {alpha:?} is divisible"))
                );
                CanDecomp::single(block)
            }
        };
        store(&self.oracle_memo, alpha.clone(), d.clone());
        Ok(d)
    }

    /// Checks every invariant of a canonical decomposition of `alpha`,
    /// including vanishing ext between distinct roots. Schur-ness of the
    /// roots is checked with the oracle when `max_total` allows.
    pub fn verify_decomposition(&self, d: &CanDecomp, alpha: &DimVec, max_total: i64) -> Result<()> {
        d.check_shape(&self.quiver, alpha)?;
        let blocks = d.blocks();
        for (i, x) in blocks.iter().enumerate() {
            for (j, y) in blocks.iter().enumerate() {
                if i != j {
                    ensure!(
                        self.ext_unchecked(&x.root, &y.root) == 0,
                        Error::internal(format!("ext({:?},{:?}) != 0", x.root, y.root))
                    );
                }
            }
            if x.mult > 1 {
                ensure!(
                    self.ext_unchecked(&x.root, &x.root) == 0,
                    Error::internal(format!("repeated root {:?} has self-extensions", x.root))
                );
            }
            if x.root.total() <= max_total {
                ensure!(
                    self.oracle(&x.root)?.is_single_schur(),
                    Error::internal(format!("{:?} is not a Schur root", x.root))
                );
            }
        }
        Ok(())
    }
}
