//! Exact arithmetic in `Z[sqrt(3)]`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Mul, Sub};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// `a + b * sqrt(3)` with integer `a`, `b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadInt {
    pub a: BigInt,
    pub b: BigInt,
}

impl QuadInt {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        QuadInt { a: a.into(), b: b.into() }
    }

    pub fn from_int(a: impl Into<BigInt>) -> Self {
        QuadInt { a: a.into(), b: BigInt::zero() }
    }

    pub fn one() -> Self {
        QuadInt::from_int(1)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = QuadInt::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Sign of the real number `a + b sqrt(3)`.
    ///
    /// Same-sign parts decide directly. Otherwise the part with the larger
    /// magnitude wins, compared through `a^2` versus `3 b^2`; these are never
    /// equal unless both are zero, since `sqrt(3)` is irrational.
    pub fn signum(&self) -> Ordering {
        let sa = self.a.sign_cmp();
        let sb = self.b.sign_cmp();
        match (sa, sb) {
            (Ordering::Equal, s) | (s, Ordering::Equal) => s,
            (x, y) if x == y => x,
            (sa, _) => {
                let a2 = &self.a * &self.a;
                let b2 = &self.b * &self.b * 3;
                match a2.cmp(&b2) {
                    Ordering::Greater => sa,
                    _ => sa.reverse(),
                }
            }
        }
    }

    /// Approximate value as a double, for display only.
    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.a.to_f64().unwrap_or(f64::NAN) + self.b.to_f64().unwrap_or(f64::NAN) * 3f64.sqrt()
    }
}

trait SignCmp {
    fn sign_cmp(&self) -> Ordering;
}

impl SignCmp for BigInt {
    fn sign_cmp(&self) -> Ordering {
        if self.is_positive() {
            Ordering::Greater
        } else if self.is_negative() {
            Ordering::Less
        } else {
            Ordering::Equal
        }
    }
}

impl PartialOrd for QuadInt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QuadInt {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).signum()
    }
}

impl Mul for &QuadInt {
    type Output = QuadInt;
    fn mul(self, rhs: &QuadInt) -> QuadInt {
        QuadInt { a: &self.a * &rhs.a + &self.b * &rhs.b * 3, b: &self.a * &rhs.b + &self.b * &rhs.a }
    }
}

impl Sub for &QuadInt {
    type Output = QuadInt;
    fn sub(self, rhs: &QuadInt) -> QuadInt {
        QuadInt { a: &self.a - &rhs.a, b: &self.b - &rhs.b }
    }
}

impl fmt::Display for QuadInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_negative() {
            write!(f, "{} - {}*sqrt(3)", self.a, -&self.b)
        } else {
            write!(f, "{} + {}*sqrt(3)", self.a, self.b)
        }
    }
}

/// `7 + 4 sqrt(3) = (2 + sqrt(3))^2`.
pub fn headline_base() -> QuadInt {
    QuadInt::new(7, 4)
}
