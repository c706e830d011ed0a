//! Arithmetic in the prime field F_p.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

/// Largest supported characteristic; products of two residues fit in a `u64`.
pub const MAX_CHARACTERISTIC: u32 = i32::MAX as u32;

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let n = u64::from(n);
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

#[inline]
pub(crate) fn add_mod(a: u32, b: u32, p: u32) -> u32 {
    let s = u64::from(a) + u64::from(b);
    (s % u64::from(p)) as u32
}

#[inline]
pub(crate) fn sub_mod(a: u32, b: u32, p: u32) -> u32 {
    if a >= b {
        a - b
    } else {
        (u64::from(a) + u64::from(p) - u64::from(b)) as u32
    }
}

#[inline]
pub(crate) fn mul_mod(a: u32, b: u32, p: u32) -> u32 {
    (u64::from(a) * u64::from(b) % u64::from(p)) as u32
}

#[inline]
pub(crate) fn neg_mod(a: u32, p: u32) -> u32 {
    if a == 0 {
        0
    } else {
        p - a
    }
}

pub(crate) fn pow_mod(mut base: u32, mut exp: u64, p: u32) -> u32 {
    let mut acc = 1 % p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Inverse by Fermat; `a` must be non-zero mod `p`.
pub(crate) fn inv_mod(a: u32, p: u32) -> u32 {
    debug_assert!(!a.is_multiple_of(p), "inverse of zero");
    pow_mod(a, u64::from(p) - 2, p)
}

pub(crate) fn reduce_i64(value: i64, p: u32) -> u32 {
    value.rem_euclid(i64::from(p)) as u32
}

/// An element of F_p, carrying its characteristic.
///
/// Binary operators panic when the characteristics differ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FpElement {
    value: u32,
    p: u32,
}

impl FpElement {
    pub fn new(value: i64, p: u32) -> Self {
        debug_assert!(is_prime(p), "characteristic {p} is not prime");
        FpElement {
            value: reduce_i64(value, p),
            p,
        }
    }

    pub(crate) fn from_residue(value: u32, p: u32) -> Self {
        debug_assert!(value < p);
        FpElement { value, p }
    }

    pub fn zero(p: u32) -> Self {
        FpElement { value: 0, p }
    }

    pub fn one(p: u32) -> Self {
        FpElement { value: 1 % p, p }
    }

    /// The residue in `0..p`.
    pub fn value(self) -> u32 {
        self.value
    }

    pub fn characteristic(self) -> u32 {
        self.p
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn inv(self) -> Option<Self> {
        (!self.is_zero()).then(|| FpElement {
            value: inv_mod(self.value, self.p),
            p: self.p,
        })
    }

    pub fn pow(self, exp: u64) -> Self {
        FpElement {
            value: pow_mod(self.value, exp, self.p),
            p: self.p,
        }
    }

    /// Signed representative in `(-p/2, p/2]`, handy for printing.
    pub fn signed(self) -> i64 {
        let v = i64::from(self.value);
        let p = i64::from(self.p);
        if 2 * v > p {
            v - p
        } else {
            v
        }
    }

    fn check(self, other: Self) {
        assert_eq!(self.p, other.p, "characteristic mismatch");
    }
}

impl Add for FpElement {
    type Output = FpElement;
    fn add(self, rhs: Self) -> Self {
        self.check(rhs);
        FpElement {
            value: add_mod(self.value, rhs.value, self.p),
            p: self.p,
        }
    }
}

impl Sub for FpElement {
    type Output = FpElement;
    fn sub(self, rhs: Self) -> Self {
        self.check(rhs);
        FpElement {
            value: sub_mod(self.value, rhs.value, self.p),
            p: self.p,
        }
    }
}

impl Mul for FpElement {
    type Output = FpElement;
    fn mul(self, rhs: Self) -> Self {
        self.check(rhs);
        FpElement {
            value: mul_mod(self.value, rhs.value, self.p),
            p: self.p,
        }
    }
}

impl Neg for FpElement {
    type Output = FpElement;
    fn neg(self) -> Self {
        FpElement {
            value: neg_mod(self.value, self.p),
            p: self.p,
        }
    }
}

impl fmt::Display for FpElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}
