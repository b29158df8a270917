//! Exact fields: prime fields `F_p` and the rationals.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{ensure, Error, Result};

/// Identifies a field in reports and rep dumps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FieldDesc {
    Prime(u64),
    Rationals,
}

pub trait Field: Clone + Debug + PartialEq + Send + Sync {
    type Elem: Clone + Debug + PartialEq + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, x: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Panics on zero; callers test [`is_zero`](Field::is_zero) first.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn random(&self, rng: &mut ChaCha8Rng) -> Self::Elem;
    fn descriptor(&self) -> FieldDesc;
    fn elem_to_json(&self, a: &Self::Elem) -> Value;
    fn elem_from_json(&self, v: &Value) -> Result<Self::Elem>;

    /// Number of elements, if finite.
    fn order(&self) -> Option<u64> {
        None
    }

    /// `row -= factor * pivot`, elementwise.
    fn sub_scaled_row(&self, row: &mut [Self::Elem], pivot: &[Self::Elem], factor: &Self::Elem) {
        for (r, p) in row.iter_mut().zip(pivot) {
            if !self.is_zero(p) {
                *r = self.sub(r, &self.mul(factor, p));
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

pub const DEFAULT_PRIME: u64 = 32003;

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeField {
    /// Accepts odd primes below `2^31`.
    pub fn new(p: u64) -> Result<PrimeField> {
        ensure!(p > 2 && p < (1 << 31), Error::input(format!("modulus {p} must be an odd prime below 2^31")));
        ensure!(is_prime(p), Error::input(format!("modulus {p} is not prime")));
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }
}

impl Default for PrimeField {
    fn default() -> Self {
        PrimeField { p: DEFAULT_PRIME }
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn from_i64(&self, x: i64) -> u64 {
        x.rem_euclid(self.p as i64) as u64
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.p - a) % self.p
    }
    fn inv(&self, a: &u64) -> u64 {
        assert!(*a != 0, "inverse of zero");
        let (mut base, mut exp, mut acc) = (*a, self.p - 2, 1u64);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            exp >>= 1;
        }
        acc
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn random(&self, rng: &mut ChaCha8Rng) -> u64 {
        rng.gen_range(0..self.p)
    }
    fn descriptor(&self) -> FieldDesc {
        FieldDesc::Prime(self.p)
    }
    fn elem_to_json(&self, a: &u64) -> Value {
        Value::from(*a)
    }
    fn elem_from_json(&self, v: &Value) -> Result<u64> {
        let x = v.as_i64().ok_or_else(|| Error::input(format!("expected an integer, got {v}")))?;
        Ok(self.from_i64(x))
    }
    fn order(&self) -> Option<u64> {
        Some(self.p)
    }
    fn sub_scaled_row(&self, row: &mut [u64], pivot: &[u64], factor: &u64) {
        let f = self.neg(factor);
        for (r, p) in row.iter_mut().zip(pivot) {
            *r = (*r + f * p) % self.p;
        }
    }
}

/// The rationals, with exact big-integer arithmetic. Random elements are
/// small integers so that certification reruns stay cheap.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, x: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(x))
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        assert!(!a.is_zero(), "inverse of zero");
        a.recip()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn random(&self, rng: &mut ChaCha8Rng) -> BigRational {
        self.from_i64(rng.gen_range(-9..=9))
    }
    fn descriptor(&self) -> FieldDesc {
        FieldDesc::Rationals
    }
    fn elem_to_json(&self, a: &BigRational) -> Value {
        if a.is_integer() && a.numer().abs() < BigInt::from(1i64 << 53) {
            Value::from(a.numer().to_string().parse::<i64>().expect("small integer"))
        } else {
            Value::from(a.to_string())
        }
    }
    fn elem_from_json(&self, v: &Value) -> Result<BigRational> {
        if let Some(x) = v.as_i64() {
            return Ok(self.from_i64(x));
        }
        let s = v.as_str().ok_or_else(|| Error::input(format!("expected a rational, got {v}")))?;
        s.parse::<BigRational>().map_err(|e| Error::input(format!("bad rational `{s}`: {e}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn prime_field_arithmetic() {
        let f = PrimeField::default();
        for a in [1u64, 2, 17, 32002] {
            assert_eq!(f.mul(&a, &f.inv(&a)), 1);
            assert_eq!(f.add(&a, &f.neg(&a)), 0);
        }
        assert_eq!(f.from_i64(-1), 32002);
        assert!(PrimeField::new(32001).is_err());
        assert!(PrimeField::new(2).is_err());
    }

    #[test]
    fn rationals_round_trip_json() {
        let q = Rationals;
        let x = q.inv(&q.from_i64(3));
        assert_eq!(q.elem_from_json(&q.elem_to_json(&x)).unwrap(), x);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let r = q.random(&mut rng);
        assert!(r.is_integer());
    }
}
