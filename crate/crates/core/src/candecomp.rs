//! Canonical decomposition by growing uniform rigid sub-dimension vectors,
//! Schur testing, and the rigid splitting of a Schur root.

use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, OnceLock, RwLock};

use crate::corpus;
use crate::decomp::{Block, CanDecomp, RootClass, UniformVec};
use crate::dimvec::{gcd, DimVec};
use crate::error::{ensure, Error, Result};
use crate::homext::GenericExt;
use crate::kronecker::candecomp_kronecker;
use crate::quiver::Quiver;

/// First block, in ascending root order, admitting no generic
/// homomorphisms to the other blocks.
pub fn uniform_rigid_summand(q: &Quiver, d: &CanDecomp) -> Result<UniformVec> {
    let mut blocks: Vec<&Block> = d.blocks().iter().collect();
    blocks.sort_by(|x, y| x.root.cmp(&y.root));
    for (j, bj) in blocks.iter().enumerate() {
        let mut ok = true;
        for (i, bi) in blocks.iter().enumerate() {
            if i != j && q.euler_form(&bj.root, &bi.root)? != 0 {
                ok = false;
                break;
            }
        }
        if ok {
            return Ok(UniformVec::from_block(bj));
        }
    }
    Err(Error::internal(format!("{d} has no uniform rigid summand")))
}

enum Outcome {
    Done(CanDecomp),
    /// The loop stopped at a rigid sub-dimension vector with uniform quotient.
    Split {
        decomp: CanDecomp,
        sub: UniformVec,
        quot: UniformVec,
    },
}

impl Outcome {
    fn decomp(self) -> CanDecomp {
        match self {
            Outcome::Done(d) | Outcome::Split { decomp: d, .. } => d,
        }
    }
}

/// Runs the fast algorithm on one quiver, memoizing results. Cyclic
/// supports are handled on the double quiver.
#[derive(Debug)]
pub struct Decomposer {
    hx: GenericExt,
    memo: RwLock<HashMap<DimVec, CanDecomp>>,
    double: OnceLock<Box<Decomposer>>,
    aux: RwLock<HashMap<u64, Arc<GenericExt>>>,
    checks: AtomicU64,
}

impl Decomposer {
    pub fn new(q: Quiver) -> Decomposer {
        Decomposer {
            hx: GenericExt::new(q),
            memo: RwLock::new(HashMap::new()),
            double: OnceLock::new(),
            aux: RwLock::new(HashMap::new()),
            checks: AtomicU64::new(0),
        }
    }

    pub fn quiver(&self) -> &Quiver {
        self.hx.quiver()
    }

    pub fn generic(&self) -> &GenericExt {
        &self.hx
    }

    /// Number of internal consistency assertions evaluated so far, including
    /// those made on the double quiver.
    pub fn assertions_checked(&self) -> u64 {
        self.checks.load(Ordering::Relaxed) + self.double.get().map_or(0, |d| d.assertions_checked())
    }

    fn assert(&self, cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
        self.checks.fetch_add(1, Ordering::Relaxed);
        ensure!(cond, Error::Internal(msg()));
        Ok(())
    }

    fn double(&self) -> &Decomposer {
        self.double.get_or_init(|| Box::new(Decomposer::new(self.quiver().double().0)))
    }

    pub fn canonical_decomposition(&self, alpha: &DimVec) -> Result<CanDecomp> {
        self.quiver().check_dim(alpha)?;
        alpha.check_nonneg()?;
        self.decompose(alpha)
    }

    pub fn is_schur(&self, alpha: &DimVec) -> Result<bool> {
        ensure!(!alpha.is_zero(), Error::input("the zero vector is not a root"));
        Ok(self.canonical_decomposition(alpha)?.is_single_schur())
    }

    /// For a Schur root on an acyclic support of at least two vertices,
    /// returns `(sub, quotient)`: a rigid sub-dimension vector and the
    /// complementary quotient, both uniform.
    pub fn rigid_split(&self, alpha: &DimVec) -> Result<(UniformVec, UniformVec)> {
        let q = self.quiver();
        q.check_dim(alpha)?;
        alpha.check_nonneg()?;
        let (sup, _) = q.support(alpha)?;
        ensure!(sup.is_acyclic(), Error::input("rigid_split needs an acyclic support; lift to the double first"));
        ensure!(sup.vertex_count() >= 2, Error::input(format!("{alpha:?} is supported on a single vertex")));
        ensure!(self.is_schur(alpha)?, Error::input(format!("{alpha:?} is not a Schur root")));
        let Outcome::Split { sub, quot, .. } = self.run_loop(alpha)? else {
            return Err(Error::internal(format!("Schur root {alpha:?} produced no rigid split")));
        };
        let g = alpha.gcd();
        self.assert(gcd(sub.vector.gcd(), quot.vector.gcd()) == g, || {
            format!("hcf(g({:?}), g({:?})) != g({alpha:?})", sub.vector, quot.vector)
        })?;
        let ext = self.hx.ext(&sub.vector, &quot.vector)?;
        let hom = self.hx.hom(&sub.vector, &quot.vector)?;
        self.assert(ext == 0 && hom == 0, || {
            format!("sub {:?} of {alpha:?} is not rigid (hom {hom}, ext {ext})", sub.vector)
        })?;
        Ok((sub, quot))
    }

    fn decompose(&self, alpha: &DimVec) -> Result<CanDecomp> {
        if alpha.is_zero() {
            return Ok(CanDecomp::empty());
        }
        if let Some(d) = self.memo.read().expect("memo lock poisoned").get(alpha) {
            return Ok(d.clone());
        }
        let q = self.quiver();
        let comps = q.components_of(&alpha.support());
        let d = if comps.len() > 1 {
            let mut out = CanDecomp::empty();
            for comp in comps {
                let mut part = q.zero().into_entries();
                for v in comp {
                    part[v] = alpha[v];
                }
                out = out.merge(self.decompose(&DimVec::new(part))?)?;
            }
            out
        } else if !q.restrict(&comps[0]).is_acyclic() {
            self.via_double(alpha)?
        } else {
            self.run_loop(alpha)?.decomp()
        };
        self.memo.write().expect("memo lock poisoned").insert(alpha.clone(), d.clone());
        Ok(d)
    }

    fn via_double(&self, alpha: &DimVec) -> Result<CanDecomp> {
        let q = self.quiver();
        let lifted = self.double().decompose(&q.lift_dimvec(alpha)?)?;
        let mut out = CanDecomp::empty();
        for b in lifted.blocks() {
            let root = q.pull_back_dimvec(&b.root)?;
            let block = Block::new(q, root, b.mult)?;
            self.assert(block.class == b.class, || {
                format!("class of {:?} changed when pulled back from the double", b.root)
            })?;
            out.push(block)?;
        }
        Ok(out)
    }

    fn run_loop(&self, alpha: &DimVec) -> Result<Outcome> {
        let q = self.quiver();
        let support = alpha.support();
        let sub_quiver = q.restrict(&support);
        let local_sink =
            sub_quiver.sinks().first().copied().ok_or_else(|| Error::internal("acyclic support without a sink"))?;
        let v = support[local_sink];
        let mut eps = UniformVec {
            vector: alpha[v] * &q.unit(v),
            root: q.unit(v),
            mult: alpha[v] as u64,
            class: RootClass::Real,
        };
        let g = alpha.gcd();
        loop {
            self.assert(eps.vector.gcd().is_multiple_of(g), || {
                format!("g({alpha:?}) does not divide g({:?})", eps.vector)
            })?;
            self.assert(self.hx.is_generic_sub(&eps.vector, alpha)?, || {
                format!("{:?} is not a generic sub-dimension vector of {alpha:?}", eps.vector)
            })?;
            let rho = alpha - &eps.vector;
            if rho.is_zero() {
                return Ok(Outcome::Done(CanDecomp::single(eps.as_block())));
            }
            let d = self.decompose(&rho)?;
            if d.len() == 1 {
                let quot = UniformVec::from_block(&d.blocks()[0]);
                return self.terminal(alpha, eps, quot);
            }
            let gamma = uniform_rigid_summand(q, &d)?;
            let rest = alpha - &gamma.root;
            if self.hx.ext_unchecked(&gamma.root, &rest) == 0 && self.hx.ext_unchecked(&rest, &gamma.root) == 0 {
                let peeled = CanDecomp::single(Block::new(q, gamma.root.clone(), 1)?);
                return Ok(Outcome::Done(peeled.merge(self.decompose(&rest)?)?));
            }
            let grown = &eps.vector + &gamma.vector;
            self.assert(self.hx.is_generic_sub(&grown, alpha)?, || {
                format!("{grown:?} should be a rigid sub-dimension vector of {alpha:?}")
            })?;
            let next = uniform_rigid_summand(q, &self.decompose(&grown)?)?;
            self.assert(eps.root.lt(&next.root), || format!("root {:?} does not grow past {:?}", next.root, eps.root))?;
            eps = next;
        }
    }

    /// `alpha = sub + quot` with `sub` a uniform rigid sub-dimension vector
    /// and `quot` uniform.
    fn terminal(&self, alpha: &DimVec, sub: UniformVec, quot: UniformVec) -> Result<Outcome> {
        let q = self.quiver();
        if sub.root == quot.root {
            self.assert(sub.class != RootClass::NonIsotropic, || {
                format!("non-isotropic root {:?} on both sides of a split", sub.root)
            })?;
            let b = Block { root: sub.root.clone(), mult: sub.mult + quot.mult, class: sub.class };
            return Ok(Outcome::Done(CanDecomp::single(b)));
        }
        let t = self.hx.ext_unchecked(&quot.root, &sub.root) as u64;
        // `s` is the real side at the second vertex, `r` the other side at
        // the first; dualizing swaps which of sub and quotient plays `s`.
        let (s, sm, r, rm) = if sub.class == RootClass::Real {
            (&sub.root, sub.mult, &quot.root, quot.mult)
        } else if quot.class == RootClass::Real {
            (&quot.root, quot.mult, &sub.root, sub.mult)
        } else {
            let d = CanDecomp::single(Block::new(q, alpha.clone(), 1)?);
            return Ok(Outcome::Split { decomp: d, sub, quot });
        };
        let r_class = RootClass::of(q, r)?;
        let aux = match r_class {
            RootClass::Real if t == 0 => CanDecomp::from_blocks([
                Block { root: [1, 0].into(), mult: rm, class: RootClass::Real },
                Block { root: [0, 1].into(), mult: sm, class: RootClass::Real },
            ])?,
            RootClass::Real => candecomp_kronecker(t, &DimVec::from([rm as i64, sm as i64]))?,
            RootClass::Isotropic => self.isotropic_aux(t, rm, sm)?,
            RootClass::NonIsotropic => {
                self.assert(rm == 1, || format!("non-isotropic {r:?} with multiplicity {rm}"))?;
                let d = if sm <= t {
                    CanDecomp::single(Block::new(q, alpha.clone(), 1)?)
                } else {
                    CanDecomp::from_blocks([
                        Block::new(q, r + &s.scale(t as i64), 1)?,
                        Block { root: s.clone(), mult: sm - t, class: RootClass::Real },
                    ])?
                };
                return Ok(self.finish(d, sub, quot));
            }
        };
        let mut d = CanDecomp::empty();
        for b in aux.blocks() {
            let root = &r.scale(b.root[0]) + &s.scale(b.root[1]);
            let block = Block::new(q, root, b.mult)?;
            self.assert(block.class == b.class, || {
                format!("auxiliary block {:?} changed class when substituted", b.root)
            })?;
            d.push(block)?;
        }
        Ok(self.finish(d, sub, quot))
    }

    fn finish(&self, d: CanDecomp, sub: UniformVec, quot: UniformVec) -> Outcome {
        if d.is_single_schur() {
            Outcome::Split { decomp: d, sub, quot }
        } else {
            Outcome::Done(d)
        }
    }

    /// Decomposes `(rm, sm)` on the quiver with one loop at the first vertex
    /// and `t` arrows to the second, through the oracle on its double.
    fn isotropic_aux(&self, t: u64, rm: u64, sm: u64) -> Result<CanDecomp> {
        let aux_q = corpus::q_ptq(1, t as usize, 0);
        let cached = self.aux.read().expect("aux lock poisoned").get(&t).cloned();
        let hx = match cached {
            Some(hx) => hx,
            None => {
                let hx = Arc::new(GenericExt::new(aux_q.double().0));
                self.aux.write().expect("aux lock poisoned").entry(t).or_insert(hx).clone()
            }
        };
        let lifted = aux_q.lift_dimvec(&DimVec::from([rm as i64, sm as i64]))?;
        let d = hx.candecomp_oracle(&lifted, i64::MAX)?;
        d.map_roots(&aux_q, |root| aux_q.pull_back_dimvec(root))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dv<const N: usize>(x: [i64; N]) -> DimVec {
        x.into()
    }

    fn roots(d: &CanDecomp) -> Vec<(DimVec, u64)> {
        d.blocks().iter().map(|b| (b.root.clone(), b.mult)).collect()
    }

    #[test]
    fn uniform_rigid_summand_examples() {
        let a2 = corpus::a2();
        let d =
            CanDecomp::from_blocks([Block::new(&a2, dv([1, 1]), 1).unwrap(), Block::new(&a2, dv([1, 0]), 1).unwrap()])
                .unwrap();
        assert_eq!(uniform_rigid_summand(&a2, &d).unwrap().root, dv([1, 0]));
        let k2 = corpus::kronecker(2);
        let d = candecomp_kronecker(2, &dv([1, 3])).unwrap();
        assert_eq!(uniform_rigid_summand(&k2, &d).unwrap().root, dv([1, 2]));
        let single = CanDecomp::single(Block::new(&k2, dv([1, 1]), 2).unwrap());
        assert_eq!(uniform_rigid_summand(&k2, &single).unwrap().vector, dv([2, 2]));
    }

    #[test]
    fn decomposition_examples() {
        let a2 = Decomposer::new(corpus::a2());
        assert_eq!(roots(&a2.canonical_decomposition(&dv([2, 1])).unwrap()), vec![(dv([1, 1]), 1), (dv([1, 0]), 1)]);
        assert!(!a2.is_schur(&dv([2, 1])).unwrap());

        let l1 = Decomposer::new(corpus::loops(1));
        let d = l1.canonical_decomposition(&dv([3])).unwrap();
        assert_eq!(d.blocks(), &[Block { root: dv([1]), mult: 3, class: RootClass::Isotropic }]);

        let k3 = Decomposer::new(corpus::kronecker(3));
        let d = k3.canonical_decomposition(&dv([2, 2])).unwrap();
        assert_eq!(d.blocks(), &[Block { root: dv([2, 2]), mult: 1, class: RootClass::NonIsotropic }]);
        assert!(k3.is_schur(&dv([2, 3])).unwrap());
        assert!(!Decomposer::new(corpus::kronecker(2)).is_schur(&dv([2, 2])).unwrap());
        assert!(k3.assertions_checked() > 0);
    }

    #[test]
    fn rigid_split_examples() {
        let k3 = Decomposer::new(corpus::kronecker(3));
        let (sub, quot) = k3.rigid_split(&dv([2, 2])).unwrap();
        assert_eq!((sub.vector, quot.vector), (dv([0, 2]), dv([2, 0])));
        let (sub, quot) = k3.rigid_split(&dv([2, 3])).unwrap();
        assert_eq!((sub.vector, quot.vector), (dv([0, 3]), dv([2, 0])));
        let k2 = Decomposer::new(corpus::kronecker(2));
        let (sub, quot) = k2.rigid_split(&dv([1, 1])).unwrap();
        assert_eq!((sub.vector, quot.vector), (dv([0, 1]), dv([1, 0])));
        assert_eq!(k2.rigid_split(&dv([2, 2])).unwrap_err().reason(), "input");
        assert_eq!(k3.rigid_split(&dv([0, 1])).unwrap_err().reason(), "input");
    }

    #[test]
    fn matches_oracle_on_small_vectors() {
        for q in [corpus::a3_sink(), corpus::d4_subspace(), corpus::kronecker(3), corpus::q_ptq(1, 1, 1)] {
            let dec = Decomposer::new(q.clone());
            let oracle = GenericExt::new(if q.is_acyclic() { q.clone() } else { q.double().0 });
            for alpha in DimVec::from(vec![2; q.vertex_count()]).sub_vectors() {
                let fast = dec.canonical_decomposition(&alpha).unwrap();
                let slow = if q.is_acyclic() {
                    oracle.candecomp_oracle(&alpha, 24).unwrap()
                } else {
                    oracle
                        .candecomp_oracle(&q.lift_dimvec(&alpha).unwrap(), 24)
                        .unwrap()
                        .map_roots(&q, |r| q.pull_back_dimvec(r))
                        .unwrap()
                };
                assert_eq!(fast, slow, "{q} at {alpha:?}");
            }
        }
    }
}
