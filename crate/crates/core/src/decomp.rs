//! Canonical decompositions as multisets of uniform blocks.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::dimvec::DimVec;
use crate::error::{ensure, Error, Result};
use crate::quiver::Quiver;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RootClass {
    Real,
    Isotropic,
    NonIsotropic,
}

impl RootClass {
    /// Class from the Euler form `<r, r>` of a Schur root.
    pub fn from_self_pairing(q: i64) -> Result<RootClass> {
        match q {
            1 => Ok(RootClass::Real),
            0 => Ok(RootClass::Isotropic),
            x if x < 0 => Ok(RootClass::NonIsotropic),
            x => Err(Error::internal(format!("<r,r> = {x} cannot belong to a Schur root"))),
        }
    }

    pub fn of(q: &Quiver, root: &DimVec) -> Result<RootClass> {
        RootClass::from_self_pairing(q.euler_form(root, root)?)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            RootClass::Real => "real",
            RootClass::Isotropic => "isotropic",
            RootClass::NonIsotropic => "non_isotropic",
        }
    }
}

/// `mult` copies of a Schur root.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Block {
    pub root: DimVec,
    pub mult: u64,
    pub class: RootClass,
}

impl Block {
    pub fn new(q: &Quiver, root: DimVec, mult: u64) -> Result<Block> {
        let class = RootClass::of(q, &root)?;
        Ok(Block { root, mult, class })
    }

    pub fn vector(&self) -> DimVec {
        self.root.scale(self.mult as i64)
    }
}

/// A uniform dimension vector `mult * root` with `root` an indivisible Schur
/// root, or a non-isotropic Schur root standing for itself.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UniformVec {
    pub vector: DimVec,
    pub root: DimVec,
    pub mult: u64,
    pub class: RootClass,
}

impl UniformVec {
    pub fn from_block(b: &Block) -> UniformVec {
        UniformVec { vector: b.vector(), root: b.root.clone(), mult: b.mult, class: b.class }
    }

    pub fn as_block(&self) -> Block {
        Block { root: self.root.clone(), mult: self.mult, class: self.class }
    }
}

/// Blocks are kept with pairwise distinct roots, sorted by root in
/// descending lexicographic order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CanDecomp {
    blocks: Vec<Block>,
}

impl CanDecomp {
    pub fn empty() -> CanDecomp {
        CanDecomp { blocks: Vec::new() }
    }

    pub fn single(block: Block) -> CanDecomp {
        CanDecomp { blocks: vec![block] }
    }

    /// Collects blocks, merging repeated real or isotropic roots.
    pub fn from_blocks(blocks: impl IntoIterator<Item = Block>) -> Result<CanDecomp> {
        let mut d = CanDecomp::empty();
        for b in blocks {
            d.push(b)?;
        }
        Ok(d)
    }

    pub fn push(&mut self, b: Block) -> Result<()> {
        ensure!(b.mult > 0, Error::internal("block with zero multiplicity"));
        if let Some(existing) = self.blocks.iter_mut().find(|x| x.root == b.root) {
            ensure!(
                existing.class != RootClass::NonIsotropic && existing.class == b.class,
                Error::internal(format!("non-isotropic root {:?} repeated", b.root))
            );
            existing.mult += b.mult;
        } else {
            self.blocks.push(b);
            self.blocks.sort_by(|x, y| y.root.cmp(&x.root));
        }
        Ok(())
    }

    pub fn merge(mut self, other: CanDecomp) -> Result<CanDecomp> {
        for b in other.blocks {
            self.push(b)?;
        }
        Ok(self)
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn total(&self, len: usize) -> DimVec {
        self.blocks.iter().fold(DimVec::zero(len), |acc, b| &acc + &b.vector())
    }

    /// True iff the decomposition is one block of multiplicity one.
    pub fn is_single_schur(&self) -> bool {
        self.blocks.len() == 1 && self.blocks[0].mult == 1
    }

    /// Maps every root through `f`, recomputing classes on `q`.
    pub fn map_roots(&self, q: &Quiver, mut f: impl FnMut(&DimVec) -> Result<DimVec>) -> Result<CanDecomp> {
        let mut out = CanDecomp::empty();
        for b in &self.blocks {
            out.push(Block::new(q, f(&b.root)?, b.mult)?)?;
        }
        Ok(out)
    }

    /// Checks the structural invariants that do not need generic ext data:
    /// the blocks sum to `alpha`, classes match `<r,r>`, real and isotropic
    /// roots are indivisible and non-isotropic blocks have multiplicity one.
    pub fn check_shape(&self, q: &Quiver, alpha: &DimVec) -> Result<()> {
        ensure!(
            &self.total(q.vertex_count()) == alpha,
            Error::internal(format!("blocks of {self} do not sum to {alpha:?}"))
        );
        for b in &self.blocks {
            ensure!(
                RootClass::of(q, &b.root)? == b.class,
                Error::internal(format!("class of {:?} is inconsistent", b.root))
            );
            match b.class {
                RootClass::NonIsotropic => ensure!(
                    b.mult == 1,
                    Error::internal(format!("non-isotropic block {:?} has multiplicity {}", b.root, b.mult))
                ),
                _ => ensure!(b.root.gcd() == 1, Error::internal(format!("root {:?} is divisible", b.root))),
            }
        }
        Ok(())
    }
}

impl fmt::Display for CanDecomp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.blocks.is_empty() {
            return write!(f, "0");
        }
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if b.mult == 1 {
                write!(f, "{:?}", b.root)?;
            } else {
                write!(f, "{}{:?}", b.mult, b.root)?;
            }
        }
        Ok(())
    }
}
