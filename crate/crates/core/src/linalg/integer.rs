//! Arbitrary-precision integers with an inline machine-word representation.
//!
//! Values that fit in an `i64` are stored inline; everything else lives in a
//! heap-allocated [`BigInt`]. Every arithmetic operation is checked and
//! promotes on overflow, so results are always exact.

use core::cmp::Ordering;
use core::fmt;
use core::hash::{Hash, Hasher};
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone)]
pub enum Integer {
    Small(i64),
    Big(BigInt),
}

impl Integer {
    pub const ZERO: Integer = Integer::Small(0);
    pub const ONE: Integer = Integer::Small(1);

    fn from_big(b: BigInt) -> Integer {
        match b.to_i64() {
            Some(v) => Integer::Small(v),
            None => Integer::Big(b),
        }
    }

    pub fn to_bigint(&self) -> BigInt {
        match self {
            Integer::Small(v) => BigInt::from(*v),
            Integer::Big(b) => b.clone(),
        }
    }

    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Integer::Small(v) => Some(*v),
            Integer::Big(_) => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Integer::Small(0))
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Integer::Small(1))
    }

    /// `true` for `1` and `-1`.
    pub fn is_unit(&self) -> bool {
        matches!(self, Integer::Small(1) | Integer::Small(-1))
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Integer::Small(v) => *v < 0,
            Integer::Big(b) => b.is_negative(),
        }
    }

    pub fn signum(&self) -> i32 {
        match self {
            Integer::Small(v) => v.signum() as i32,
            Integer::Big(b) => {
                if b.is_negative() {
                    -1
                } else {
                    1
                }
            }
        }
    }

    pub fn abs(&self) -> Integer {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    /// Number of significant bits of the absolute value.
    pub fn bits(&self) -> u64 {
        match self {
            Integer::Small(v) => 64 - v.unsigned_abs().leading_zeros() as u64,
            Integer::Big(b) => b.bits(),
        }
    }

    /// Truncated division: `self = q * rhs + r` with `|r| < |rhs|` and `r`
    /// carrying the sign of `self`. Panics on division by zero.
    pub fn div_rem(&self, rhs: &Integer) -> (Integer, Integer) {
        if let (Integer::Small(a), Integer::Small(b)) = (self, rhs) {
            assert!(*b != 0, "division by zero");
            if let (Some(q), Some(r)) = (a.checked_div(*b), a.checked_rem(*b)) {
                return (Integer::Small(q), Integer::Small(r));
            }
        }
        let (q, r) = self.to_bigint().div_rem(&rhs.to_bigint());
        (Integer::from_big(q), Integer::from_big(r))
    }

    /// Division rounding to the nearest integer, so that the remainder has
    /// absolute value at most `|rhs| / 2`.
    pub fn div_rem_nearest(&self, rhs: &Integer) -> (Integer, Integer) {
        let (mut q, mut r) = self.div_rem(rhs);
        let twice = &r.abs() + &r.abs();
        if twice > rhs.abs() {
            let step = if r.signum() == rhs.signum() {
                Integer::ONE
            } else {
                -Integer::ONE
            };
            q = &q + &step;
            r = &r - &(&step * rhs);
        }
        (q, r)
    }

    /// Exact division; the caller guarantees `rhs | self`.
    pub fn div_exact(&self, rhs: &Integer) -> Integer {
        let (q, r) = self.div_rem(rhs);
        debug_assert!(r.is_zero(), "inexact division");
        q
    }

    /// Remainder in `0..|m|`.
    pub fn mod_floor(&self, m: &Integer) -> Integer {
        let (_, r) = self.div_rem(m);
        if r.is_negative() {
            &r + &m.abs()
        } else {
            r
        }
    }

    pub fn gcd(&self, other: &Integer) -> Integer {
        let (g, _, _) = self.xgcd(other);
        g
    }

    /// Extended Euclid: returns `(g, s, t)` with `s*self + t*other = g >= 0`.
    pub fn xgcd(&self, other: &Integer) -> (Integer, Integer, Integer) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Integer::ONE, Integer::ZERO);
        let (mut t0, mut t1) = (Integer::ZERO, Integer::ONE);
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            r0 = core::mem::replace(&mut r1, r);
            let s = &s0 - &(&q * &s1);
            s0 = core::mem::replace(&mut s1, s);
            let t = &t0 - &(&q * &t1);
            t0 = core::mem::replace(&mut t1, t);
        }
        if r0.is_negative() {
            (-r0, -s0, -t0)
        } else {
            (r0, s0, t0)
        }
    }
}

impl Default for Integer {
    fn default() -> Self {
        Integer::ZERO
    }
}

impl From<i64> for Integer {
    fn from(v: i64) -> Self {
        Integer::Small(v)
    }
}

impl From<i32> for Integer {
    fn from(v: i32) -> Self {
        Integer::Small(v as i64)
    }
}

impl From<BigInt> for Integer {
    fn from(b: BigInt) -> Self {
        Integer::from_big(b)
    }
}

impl From<&Integer> for BigInt {
    fn from(v: &Integer) -> Self {
        v.to_bigint()
    }
}

impl PartialEq for Integer {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Integer::Small(a), Integer::Small(b)) => a == b,
            (Integer::Big(a), Integer::Big(b)) => a == b,
            _ => false,
        }
    }
}

impl Eq for Integer {}

impl Ord for Integer {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Integer::Small(a), Integer::Small(b)) => a.cmp(b),
            _ => self.to_bigint().cmp(&other.to_bigint()),
        }
    }
}

impl PartialOrd for Integer {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Hash for Integer {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match self {
            Integer::Small(v) => v.hash(state),
            Integer::Big(b) => b.hash(state),
        }
    }
}

impl fmt::Display for Integer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Integer::Small(v) => fmt::Display::fmt(v, f),
            Integer::Big(b) => fmt::Display::fmt(b, f),
        }
    }
}

impl fmt::Debug for Integer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

macro_rules! checked_binop {
    ($trait:ident, $method:ident, $checked:ident, $op:tt) => {
        impl<'a, 'b> $trait<&'b Integer> for &'a Integer {
            type Output = Integer;
            fn $method(self, rhs: &'b Integer) -> Integer {
                if let (Integer::Small(a), Integer::Small(b)) = (self, rhs) {
                    if let Some(v) = a.$checked(*b) {
                        return Integer::Small(v);
                    }
                }
                Integer::from_big(self.to_bigint() $op rhs.to_bigint())
            }
        }
        impl $trait<Integer> for Integer {
            type Output = Integer;
            fn $method(self, rhs: Integer) -> Integer {
                (&self).$method(&rhs)
            }
        }
    };
}

checked_binop!(Add, add, checked_add, +);
checked_binop!(Sub, sub, checked_sub, -);
checked_binop!(Mul, mul, checked_mul, *);

impl Neg for &Integer {
    type Output = Integer;
    fn neg(self) -> Integer {
        match self {
            Integer::Small(v) => match v.checked_neg() {
                Some(n) => Integer::Small(n),
                None => Integer::from_big(-BigInt::from(*v)),
            },
            Integer::Big(b) => Integer::from_big(-b.clone()),
        }
    }
}

impl Neg for Integer {
    type Output = Integer;
    fn neg(self) -> Integer {
        -&self
    }
}

impl Zero for Integer {
    fn zero() -> Self {
        Integer::ZERO
    }
    fn is_zero(&self) -> bool {
        Integer::is_zero(self)
    }
}

impl One for Integer {
    fn one() -> Self {
        Integer::ONE
    }
}
