//! Integer vectors indexed by the vertices of a quiver.
//!
//! Entries follow the vertex declaration order of the owning [`Quiver`](crate::Quiver).
//! Negative entries are allowed so that reflections act on the whole root
//! lattice; operations that need representation dimensions check for
//! non-negativity themselves.

use std::fmt;
use std::ops::{Add, Index, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{ensure, Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DimVec(Vec<i64>);

impl DimVec {
    pub fn new(entries: Vec<i64>) -> Self {
        DimVec(entries)
    }

    pub fn zero(len: usize) -> Self {
        DimVec(vec![0; len])
    }

    /// The coordinate vector `e_v`.
    pub fn unit(len: usize, v: usize) -> Self {
        let mut e = vec![0; len];
        e[v] = 1;
        DimVec(e)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<i64> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn is_nonneg(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Componentwise `self <= other`.
    pub fn le(&self, other: &DimVec) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Componentwise `self <= other` and `self != other`.
    pub fn lt(&self, other: &DimVec) -> bool {
        self.le(other) && self != other
    }

    pub fn scale(&self, k: i64) -> DimVec {
        DimVec(self.0.iter().map(|x| x * k).collect())
    }

    /// Exact division by `k`; `None` if some entry is not a multiple.
    pub fn div_exact(&self, k: i64) -> Option<DimVec> {
        if k == 0 || self.0.iter().any(|x| x % k != 0) {
            return None;
        }
        Some(DimVec(self.0.iter().map(|x| x / k).collect()))
    }

    /// Greatest common divisor of the entries (0 for the zero vector).
    pub fn gcd(&self) -> u64 {
        self.0.iter().fold(0u64, |g, &x| gcd(g, x.unsigned_abs()))
    }

    /// Indices of the non-zero entries.
    pub fn support(&self) -> Vec<usize> {
        self.0.iter().enumerate().filter(|(_, &x)| x != 0).map(|(i, _)| i).collect()
    }

    pub(crate) fn check_len(&self, len: usize) -> Result<()> {
        ensure!(
            self.0.len() == len,
            Error::input(format!("dimension vector has {} entries, quiver has {} vertices", self.0.len(), len))
        );
        Ok(())
    }

    pub(crate) fn check_nonneg(&self) -> Result<()> {
        ensure!(self.is_nonneg(), Error::input(format!("dimension vector {self:?} has negative entries")));
        Ok(())
    }

    /// All vectors `0 <= b <= self`, in graded lexicographic order
    /// (total dimension first, then lexicographic).
    pub fn sub_vectors(&self) -> Vec<DimVec> {
        let mut out = vec![DimVec::zero(self.len())];
        for (i, &bound) in self.0.iter().enumerate() {
            let mut next = Vec::with_capacity(out.len() * (bound.max(0) as usize + 1));
            for v in &out {
                for k in 0..=bound.max(0) {
                    let mut w = v.clone();
                    w.0[i] = k;
                    next.push(w);
                }
            }
            out = next;
        }
        out.sort_by(|a, b| a.total().cmp(&b.total()).then_with(|| a.cmp(b)));
        out
    }
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl fmt::Debug for DimVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for DimVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Index<usize> for DimVec {
    type Output = i64;
    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

impl From<Vec<i64>> for DimVec {
    fn from(v: Vec<i64>) -> Self {
        DimVec(v)
    }
}

impl<const N: usize> From<[i64; N]> for DimVec {
    fn from(v: [i64; N]) -> Self {
        DimVec(v.to_vec())
    }
}

impl Add for &DimVec {
    type Output = DimVec;
    fn add(self, rhs: &DimVec) -> DimVec {
        assert_eq!(self.len(), rhs.len());
        DimVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &DimVec {
    type Output = DimVec;
    fn sub(self, rhs: &DimVec) -> DimVec {
        assert_eq!(self.len(), rhs.len());
        DimVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Add for DimVec {
    type Output = DimVec;
    fn add(self, rhs: DimVec) -> DimVec {
        &self + &rhs
    }
}

impl Sub for DimVec {
    type Output = DimVec;
    fn sub(self, rhs: DimVec) -> DimVec {
        &self - &rhs
    }
}

impl Mul<&DimVec> for i64 {
    type Output = DimVec;
    fn mul(self, rhs: &DimVec) -> DimVec {
        rhs.scale(self)
    }
}

impl Neg for &DimVec {
    type Output = DimVec;
    fn neg(self) -> DimVec {
        self.scale(-1)
    }
}
