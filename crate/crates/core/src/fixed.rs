//! Binary fixed-point reals over `BigInt` with 256 fractional bits.
//!
//! Used where `f64` runs out of significand: `h_n` passes 2^53 near n = 28,
//! so rounding a closed-form evaluation back to the exact integer needs more
//! bits than a double carries. Every operation truncates toward negative
//! infinity; the error per multiply is below 2^-256 relative to the operands.

use std::cmp::Ordering;
use std::ops::{Add, Mul, Sub};

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{Signed, ToPrimitive, Zero};

pub const FRAC_BITS: u32 = 256;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct BigFixed {
    raw: BigInt,
}

impl BigFixed {
    pub fn from_int(v: impl Into<BigInt>) -> Self {
        BigFixed { raw: v.into() << FRAC_BITS }
    }

    pub fn zero() -> Self {
        BigFixed { raw: BigInt::zero() }
    }

    /// `sqrt(k)` truncated to the working precision.
    pub fn sqrt_of(k: u64) -> Self {
        let scaled = BigUint::from(k) << (2 * FRAC_BITS);
        BigFixed { raw: BigInt::from_biguint(Sign::Plus, scaled.sqrt()) }
    }

    pub fn div_int(&self, d: i64) -> Self {
        BigFixed { raw: &self.raw / d }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = BigFixed::from_int(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn abs(&self) -> Self {
        BigFixed { raw: self.raw.abs() }
    }

    /// Nearest integer, ties rounded up.
    pub fn round(&self) -> BigInt {
        (&self.raw + (BigInt::from(1) << (FRAC_BITS - 1))) >> FRAC_BITS
    }

    pub fn to_f64(&self) -> f64 {
        // Keep 64 fractional bits; f64 cannot use more.
        let top = &self.raw >> (FRAC_BITS - 64);
        top.to_f64().unwrap_or(f64::NAN) / 2f64.powi(64)
    }

    /// `|self - exact| / |exact|` as a double.
    pub fn relative_error(&self, exact: &BigInt) -> f64 {
        let exact_fixed = BigFixed::from_int(exact.clone());
        let diff = (self - &exact_fixed).abs();
        if exact.is_zero() {
            return if diff.raw.is_zero() { 0.0 } else { f64::INFINITY };
        }
        // Scale the quotient by 2^128 before leaving integer arithmetic.
        let q: BigInt = (diff.raw << 128) / exact_fixed.raw.abs();
        q.to_f64().unwrap_or(f64::INFINITY) / 2f64.powi(128)
    }

    pub fn cmp_int(&self, v: &BigInt) -> Ordering {
        self.raw.cmp(&(v.clone() << FRAC_BITS))
    }
}

impl Add for &BigFixed {
    type Output = BigFixed;
    fn add(self, rhs: &BigFixed) -> BigFixed {
        BigFixed { raw: &self.raw + &rhs.raw }
    }
}

impl Sub for &BigFixed {
    type Output = BigFixed;
    fn sub(self, rhs: &BigFixed) -> BigFixed {
        BigFixed { raw: &self.raw - &rhs.raw }
    }
}

impl Mul for &BigFixed {
    type Output = BigFixed;
    fn mul(self, rhs: &BigFixed) -> BigFixed {
        BigFixed { raw: (&self.raw * &rhs.raw) >> FRAC_BITS }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt3_digits() {
        let s = BigFixed::sqrt_of(3);
        assert!((s.to_f64() - 3f64.sqrt()).abs() < 1e-15);
        let sq = &s * &s;
        assert!(sq.relative_error(&BigInt::from(3)) < 1e-70);
    }

    #[test]
    fn rounding_and_powers() {
        let two = BigFixed::from_int(2);
        assert_eq!(two.pow(100).round(), BigInt::from(1) << 100);
        let half = BigFixed::from_int(1).div_int(2);
        assert_eq!(half.round(), BigInt::from(1));
        assert_eq!(BigFixed::from_int(-3).div_int(2).round(), BigInt::from(-1));
        assert_eq!(BigFixed::zero().relative_error(&BigInt::from(0)), 0.0);
    }
}
