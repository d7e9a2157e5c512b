//! Arithmetic modulo word-sized primes, and batches of residues that behave as
//! a frieze ring evaluated at many points at once.

use crate::error::{Error, Result};
use crate::int::Int;
use crate::transjective::FriezeRing;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

/// Primes just below `2^62`, largest first.
pub const PRIMES: [u64; 8] = [
    0x3fffffffffffffc7,
    0x3fffffffffffffa9,
    0x3fffffffffffff8b,
    0x3fffffffffffff71,
    0x3fffffffffffff67,
    0x3fffffffffffff59,
    0x3fffffffffffff55,
    0x3fffffffffffff3d,
];

/// `ℤ/p` for an odd prime `p < 2^62`, elements kept in Montgomery form.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Field {
    p: u64,
    ninv: u64,
    r2: u64,
    one: u64,
}

impl Field {
    pub fn new(p: u64) -> Field {
        assert!(p % 2 == 1 && p < 1 << 62);
        let mut inv = p;
        for _ in 0..6 {
            inv = inv.wrapping_mul(2u64.wrapping_sub(p.wrapping_mul(inv)));
        }
        let r = ((1u128 << 64) % p as u128) as u64;
        let r2 = ((r as u128 * r as u128) % p as u128) as u64;
        let mut f = Field { p, ninv: inv.wrapping_neg(), r2, one: 0 };
        f.one = f.from_u64(1);
        f
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    #[inline]
    fn redc(&self, t: u128) -> u64 {
        let m = (t as u64).wrapping_mul(self.ninv);
        let u = ((t + m as u128 * self.p as u128) >> 64) as u64;
        if u >= self.p {
            u - self.p
        } else {
            u
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        self.redc(a as u128 * b as u128)
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    pub fn one(&self) -> u64 {
        self.one
    }

    pub fn from_u64(&self, a: u64) -> u64 {
        self.mul(a % self.p, self.r2)
    }

    pub fn from_i64(&self, a: i64) -> u64 {
        let r = a.rem_euclid(self.p as i64) as u64;
        self.from_u64(r)
    }

    pub fn from_int(&self, a: &Int) -> u64 {
        match a.as_i64() {
            Some(v) => self.from_i64(v),
            None => {
                let r = a.to_big().mod_floor(&BigInt::from(self.p));
                self.from_u64(r.to_u64().unwrap())
            }
        }
    }

    /// Plain residue in `[0, p)`.
    pub fn to_u64(&self, a: u64) -> u64 {
        self.redc(a as u128)
    }

    pub fn pow(&self, a: u64, mut e: u64) -> u64 {
        let mut base = a;
        let mut acc = self.one;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// `a^e` for a signed exponent; `a` must be nonzero when `e < 0`.
    pub fn pow_signed(&self, a: u64, e: i64) -> u64 {
        if e >= 0 {
            self.pow(a, e as u64)
        } else {
            self.pow(self.inv(a).expect("nonzero base"), e.unsigned_abs())
        }
    }

    pub fn inv(&self, a: u64) -> Option<u64> {
        (a != 0).then(|| self.pow(a, self.p - 2))
    }

    /// Inverts every entry in place with one field inversion; `false` if some entry is zero.
    pub fn batch_inv(&self, v: &mut [u64]) -> bool {
        let mut prefix = Vec::with_capacity(v.len());
        let mut acc = self.one;
        for &x in v.iter() {
            if x == 0 {
                return false;
            }
            prefix.push(acc);
            acc = self.mul(acc, x);
        }
        let mut inv = self.inv(acc).unwrap();
        for (x, pre) in v.iter_mut().zip(prefix).rev() {
            let xi = self.mul(inv, pre);
            inv = self.mul(inv, *x);
            *x = xi;
        }
        true
    }
}

/// Frieze values at a batch of evaluation points, all modulo the same prime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModBatch {
    pub field: Field,
    pub values: Vec<u64>,
}

impl ModBatch {
    pub fn new(field: Field, values: Vec<u64>) -> Self {
        ModBatch { field, values }
    }

    fn zip_with(&self, other: &Self, op: impl Fn(&Field, u64, u64) -> u64) -> Self {
        let f = self.field;
        let values = self.values.iter().zip(&other.values).map(|(&a, &b)| op(&f, a, b)).collect();
        ModBatch { field: f, values }
    }
}

impl FriezeRing for ModBatch {
    fn one_like(&self) -> Self {
        ModBatch { field: self.field, values: vec![self.field.one(); self.values.len()] }
    }
    fn ring_mul(&self, other: &Self) -> Self {
        self.zip_with(other, Field::mul)
    }
    fn ring_add(&self, other: &Self) -> Self {
        self.zip_with(other, Field::add)
    }
    fn ring_sub(&self, other: &Self) -> Self {
        self.zip_with(other, Field::sub)
    }
    fn add_one(&self) -> Self {
        let f = self.field;
        ModBatch { field: f, values: self.values.iter().map(|&a| f.add(a, f.one())).collect() }
    }
    fn ring_div(&self, d: &Self) -> Result<Self> {
        let mut inv = d.values.clone();
        if !self.field.batch_inv(&mut inv) {
            return Err(Error::DegenerateSample(format!(
                "a divisor vanishes modulo {} at a sample point",
                self.field.modulus()
            )));
        }
        Ok(self.zip_with(&ModBatch { field: d.field, values: inv }, Field::mul))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn montgomery_round_trip_and_inverse() {
        let f = Field::new(PRIMES[0]);
        for a in [1u64, 2, 12345, PRIMES[0] - 1] {
            let m = f.from_u64(a);
            assert_eq!(f.to_u64(m), a);
            assert_eq!(f.mul(m, f.inv(m).unwrap()), f.one());
        }
        assert_eq!(f.to_u64(f.from_i64(-1)), PRIMES[0] - 1);
        let big = Int::from(1u64 << 63) * Int::from(7);
        let r = (BigInt::from(1u64 << 63) * 7u32) % PRIMES[0];
        assert_eq!(f.to_u64(f.from_int(&big)), r.to_u64().unwrap());
    }

    #[test]
    fn batch_inverse_matches_single() {
        let f = Field::new(PRIMES[3]);
        let xs: Vec<u64> = (1..50u64).map(|x| f.from_u64(x * x + 3)).collect();
        let mut ys = xs.clone();
        assert!(f.batch_inv(&mut ys));
        for (x, y) in xs.iter().zip(&ys) {
            assert_eq!(f.mul(*x, *y), f.one());
        }
        let mut z = vec![f.one(), 0];
        assert!(!f.batch_inv(&mut z));
    }
}
