//! Coefficient rings for exact elimination: the integers and prime fields.

use core::fmt::Debug;

use super::integer::Integer;
use crate::error::Error;

/// A Euclidean domain together with the operations elimination needs.
pub trait EuclideanRing: Clone + Send + Sync {
    type Elem: Clone + PartialEq + Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    #[allow(clippy::wrong_self_convention)]
    fn from_i64(&self, v: i64) -> Self::Elem;
    /// Image of an integer under the canonical map from the integers.
    #[allow(clippy::wrong_self_convention)]
    fn from_integer(&self, v: &Integer) -> Self::Elem;
    /// Canonical representative of `a` modulo a non-zero `m`.
    fn rem_canonical(&self, a: &Self::Elem, m: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn is_unit(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// `a = q*b + r` with `r` strictly smaller than `b` in the Euclidean size.
    fn div_rem(&self, a: &Self::Elem, b: &Self::Elem) -> (Self::Elem, Self::Elem);
    /// Euclidean size used to rank pivot candidates.
    fn size(&self, a: &Self::Elem) -> u64;
    /// Unit `u` such that `u*a` is the canonical associate of `a`.
    fn canonical_unit(&self, a: &Self::Elem) -> Self::Elem;
    /// Inverse of a unit.
    fn unit_inverse(&self, u: &Self::Elem) -> Self::Elem;
    /// `(g, s, t)` with `s*a + t*b = g` a canonical gcd.
    fn xgcd(&self, a: &Self::Elem, b: &Self::Elem) -> (Self::Elem, Self::Elem, Self::Elem);

    fn divides(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        if self.is_zero(a) {
            return self.is_zero(b);
        }
        let (_, r) = self.div_rem(b, a);
        self.is_zero(&r)
    }
}

/// The ring of integers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Integers;

impl EuclideanRing for Integers {
    type Elem = Integer;

    fn zero(&self) -> Integer {
        Integer::ZERO
    }
    fn one(&self) -> Integer {
        Integer::ONE
    }
    fn from_i64(&self, v: i64) -> Integer {
        Integer::from(v)
    }
    fn from_integer(&self, v: &Integer) -> Integer {
        v.clone()
    }
    fn rem_canonical(&self, a: &Integer, m: &Integer) -> Integer {
        a.mod_floor(m)
    }
    fn is_zero(&self, a: &Integer) -> bool {
        a.is_zero()
    }
    fn is_unit(&self, a: &Integer) -> bool {
        a.is_unit()
    }
    fn add(&self, a: &Integer, b: &Integer) -> Integer {
        a + b
    }
    fn sub(&self, a: &Integer, b: &Integer) -> Integer {
        a - b
    }
    fn mul(&self, a: &Integer, b: &Integer) -> Integer {
        a * b
    }
    fn neg(&self, a: &Integer) -> Integer {
        -a
    }
    fn div_rem(&self, a: &Integer, b: &Integer) -> (Integer, Integer) {
        a.div_rem_nearest(b)
    }
    fn size(&self, a: &Integer) -> u64 {
        match a {
            Integer::Small(v) => v.unsigned_abs(),
            Integer::Big(_) => u64::MAX,
        }
    }
    fn canonical_unit(&self, a: &Integer) -> Integer {
        if a.is_negative() {
            Integer::from(-1)
        } else {
            Integer::ONE
        }
    }
    fn unit_inverse(&self, u: &Integer) -> Integer {
        u.clone()
    }
    fn xgcd(&self, a: &Integer, b: &Integer) -> (Integer, Integer, Integer) {
        a.xgcd(b)
    }
}

/// The prime field with `p` elements, `p < 2^31`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, Error> {
        if !(2..(1 << 31)).contains(&p) || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn reduce(&self, v: &Integer) -> u64 {
        let m = Integer::from(self.p as i64);
        v.mod_floor(&m).to_i64().expect("residue fits in a word") as u64
    }

    fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            exp >>= 1;
        }
        acc
    }

    pub fn inverse(&self, a: u64) -> u64 {
        debug_assert!(!a.is_multiple_of(self.p));
        self.pow(a, self.p - 2)
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl EuclideanRing for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn from_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }
    fn from_integer(&self, v: &Integer) -> u64 {
        self.reduce(v)
    }
    fn rem_canonical(&self, _a: &u64, _m: &u64) -> u64 {
        0
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn is_unit(&self, a: &u64) -> bool {
        *a != 0
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
    fn div_rem(&self, a: &u64, b: &u64) -> (u64, u64) {
        (a * self.inverse(*b) % self.p, 0)
    }
    fn size(&self, a: &u64) -> u64 {
        u64::from(*a != 0)
    }
    fn canonical_unit(&self, a: &u64) -> u64 {
        self.inverse(*a)
    }
    fn unit_inverse(&self, u: &u64) -> u64 {
        self.inverse(*u)
    }
    fn xgcd(&self, a: &u64, b: &u64) -> (u64, u64, u64) {
        if *a != 0 {
            (1, self.inverse(*a), 0)
        } else if *b != 0 {
            (1, 0, self.inverse(*b))
        } else {
            (0, 1, 0)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composite_modulus_rejected() {
        assert!(PrimeField::new(4).is_err());
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(7).is_ok());
    }

    #[test]
    fn field_inverse() {
        let f = PrimeField::new(5).unwrap();
        for a in 1..5 {
            assert_eq!(f.mul(&a, &f.inverse(a)), 1);
        }
        assert_eq!(f.from_i64(-1), 4);
    }
}
