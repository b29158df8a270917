//! The generalized Kronecker quiver `Q(n)`: preprojective and preinjective
//! dimension vectors, classification of general representations and the
//! resulting canonical decompositions.
//!
//! Coordinates are `(a, b)` with `a` at the source `v` and `b` at the sink `w`.

use serde::Serialize;

use crate::corpus;
use crate::decomp::{Block, CanDecomp, RootClass};
use crate::dimvec::DimVec;
use crate::error::{ensure, Error, Result};
use crate::quiver::Sign;
use crate::word::{ReflectionWord, WordStep};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "class", rename_all = "snake_case")]
pub enum KroneckerClass {
    /// General representation `P(l)^c + P(l+1)^d`.
    Preprojective { l: u64, c: u64, d: u64 },
    /// General representation `I(l)^c + I(l+1)^d`.
    Preinjective { l: u64, c: u64, d: u64 },
    /// A Schur root; the word carries it into the fundamental region.
    SchurRoot { word: ReflectionWord, fundamental: DimVec },
    /// `h (1,1)` on `Q(2)` with `h > 1`.
    DivisibleNull { h: u64 },
}

fn check_n(n: u64) -> Result<()> {
    ensure!(n >= 1, Error::input("the Kronecker quiver needs at least one arrow"));
    Ok(())
}

/// `dim P(l)`, from `P(0) = (0,1)` by `(x, y) -> (y, n y - x)`.
pub fn preprojective_dim(n: u64, l: u64) -> Result<DimVec> {
    check_n(n)?;
    let (mut x, mut y) = (0i64, 1i64);
    for _ in 0..l {
        let next = (n as i64)
            .checked_mul(y)
            .and_then(|ny| ny.checked_sub(x))
            .ok_or_else(|| Error::input("preprojective dimension overflows"))?;
        (x, y) = (y, next);
    }
    ensure!(x >= 0 && y >= 0, Error::input(format!("P({l}) does not exist on Q({n})")));
    Ok(DimVec::from([x, y]))
}

/// `dim I(l)`: the coordinate swap of `dim P(l)`.
pub fn preinjective_dim(n: u64, l: u64) -> Result<DimVec> {
    let p = preprojective_dim(n, l)?;
    Ok(DimVec::from([p[1], p[0]]))
}

fn is_fundamental(n: i64, a: i64, b: i64) -> bool {
    2 * a <= n * b && 2 * b <= n * a
}

fn check_pair(alpha: &DimVec) -> Result<(i64, i64)> {
    alpha.check_len(2)?;
    alpha.check_nonneg()?;
    ensure!(!alpha.is_zero(), Error::input("the zero vector has no class"));
    Ok((alpha[0], alpha[1]))
}

/// Classifies the general representation of dimension `(a, b)` on `Q(n)`.
pub fn classify(n: u64, alpha: &DimVec) -> Result<KroneckerClass> {
    check_n(n)?;
    let (a, b) = check_pair(alpha)?;
    let ni = n as i64;
    let mut word = ReflectionWord::default();
    let (mut a, mut b) = (a, b);
    let mut dual = false;
    if a > b && !is_fundamental(ni, a, b) {
        dual = true;
        word.dualize = true;
        word.steps.push(WordStep::Transpose(0, 1));
        (a, b) = (b, a);
    }
    let mut depth = 0u64;
    loop {
        if is_fundamental(ni, a, b) {
            if n == 2 && a == b && a > 1 {
                return Ok(KroneckerClass::DivisibleNull { h: a as u64 });
            }
            return Ok(KroneckerClass::SchurRoot { word, fundamental: DimVec::from([a, b]) });
        }
        ensure!(a <= b, Error::internal(format!("({a},{b}) left the a <= b chamber on Q({n})")));
        if ni * a <= b {
            let (mut l, mut c, mut d) = (depth, (b - ni * a) as u64, a as u64);
            if c == 0 {
                (l, c, d) = (l + 1, d, 0);
            }
            return Ok(if dual {
                KroneckerClass::Preinjective { l, c, d }
            } else {
                KroneckerClass::Preprojective { l, c, d }
            });
        }
        word.steps.push(WordStep::Reflect { vertex: 1, sign: Sign::Minus });
        word.steps.push(WordStep::Transpose(0, 1));
        (a, b) = (ni * a - b, a);
        depth += 1;
    }
}

/// Canonical decomposition of `(a, b)` on `Q(n)` read off from [`classify`].
pub fn candecomp_kronecker(n: u64, alpha: &DimVec) -> Result<CanDecomp> {
    let q = corpus::kronecker(n as usize);
    let pre = |dim: fn(u64, u64) -> Result<DimVec>, l: u64, c: u64, d: u64| -> Result<CanDecomp> {
        let mut out = CanDecomp::empty();
        if c > 0 {
            out.push(Block { root: dim(n, l)?, mult: c, class: RootClass::Real })?;
        }
        if d > 0 {
            out.push(Block { root: dim(n, l + 1)?, mult: d, class: RootClass::Real })?;
        }
        Ok(out)
    };
    match classify(n, alpha)? {
        KroneckerClass::Preprojective { l, c, d } => pre(preprojective_dim, l, c, d),
        KroneckerClass::Preinjective { l, c, d } => pre(preinjective_dim, l, c, d),
        KroneckerClass::SchurRoot { .. } => Ok(CanDecomp::single(Block::new(&q, alpha.clone(), 1)?)),
        KroneckerClass::DivisibleNull { h } => {
            Ok(CanDecomp::single(Block { root: DimVec::from([1, 1]), mult: h, class: RootClass::Isotropic }))
        }
    }
}
