//! Words over `{A, B, C, D}` with no `CB` factor.
//!
//! `h_n` counts such words of length `n`. Three independent routes produce
//! it: the linear recurrence `h_n = 4 h_{n-1} - h_{n-2}` from `h_0 = 1`,
//! `h_1 = 4`; long division of the power series `1 / (1 - 4x + x^2)`; and the
//! two-term closed form in `2 +- sqrt(3)`. A full scan of `4^n` words serves
//! as the brute-force oracle for small `n`.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::coloring::{Mark, TypeWord};
use crate::error::{Error, Result};
use crate::fixed::BigFixed;

/// Longest length `enumerate_cb_free` will scan.
pub const MAX_SCAN_LEN: usize = 10;

pub fn has_cb_factor(letters: &[Mark]) -> bool {
    letters.windows(2).any(|w| w == [Mark::C, Mark::B])
}

pub fn is_cb_free(word: &TypeWord) -> bool {
    !has_cb_factor(word.letters())
}

/// `h_0, ..., h_N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountSequence {
    values: Vec<BigUint>,
}

impl CountSequence {
    pub fn values(&self) -> &[BigUint] {
        &self.values
    }

    pub fn get(&self, n: usize) -> Option<&BigUint> {
        self.values.get(n)
    }

    pub fn max_len(&self) -> usize {
        self.values.len() - 1
    }
}

pub fn count_cb_free(max_len: usize) -> CountSequence {
    let mut values = Vec::with_capacity(max_len + 1);
    values.push(BigUint::one());
    if max_len >= 1 {
        values.push(BigUint::from(4u32));
    }
    for n in 2..=max_len {
        // 4 h_{n-1} >= h_{n-2}, so the subtraction stays non-negative.
        let next = &values[n - 1] * 4u32 - &values[n - 2];
        values.push(next);
    }
    CountSequence { values }
}

/// `h_n` alone.
pub fn h(n: usize) -> BigUint {
    count_cb_free(n).values.swap_remove(n)
}

/// Every CB-free word of length `n` in lexicographic order (`A < B < C < D`),
/// found by scanning all `4^n` words.
pub fn enumerate_cb_free(n: usize) -> Result<CbFreeWords> {
    if n > MAX_SCAN_LEN {
        return Err(Error::LimitExceeded { n, cap: MAX_SCAN_LEN });
    }
    Ok(CbFreeWords { digits: Some(vec![0; n]) })
}

pub struct CbFreeWords {
    digits: Option<Vec<u8>>,
}

impl CbFreeWords {
    fn advance(digits: &mut [u8]) -> bool {
        for d in digits.iter_mut().rev() {
            if *d < 3 {
                *d += 1;
                return true;
            }
            *d = 0;
        }
        false
    }
}

impl Iterator for CbFreeWords {
    type Item = TypeWord;

    fn next(&mut self) -> Option<TypeWord> {
        loop {
            let digits = self.digits.as_mut()?;
            let word: Vec<Mark> = digits.iter().map(|&d| Mark::ALL[d as usize]).collect();
            if !Self::advance(digits) {
                self.digits = None;
            }
            if !has_cb_factor(&word) {
                return Some(TypeWord(word));
            }
        }
    }
}

/// First `terms` coefficients of `numerator / denominator` as formal power
/// series. The constant term of the denominator must be `+1` or `-1` so the
/// quotient stays integral.
pub fn series_divide(numerator: &[BigInt], denominator: &[BigInt], terms: usize) -> Vec<BigInt> {
    let lead = denominator.first().expect("denominator must be non-empty");
    assert!(*lead == BigInt::one() || *lead == -BigInt::one(), "denominator constant term must be a unit");
    // Schoolbook long division: peel off one quotient term at a time and
    // subtract its multiple of the denominator from the running remainder.
    let mut remainder: Vec<BigInt> =
        (0..terms).map(|i| numerator.get(i).cloned().unwrap_or_else(BigInt::zero)).collect();
    let mut quotient = Vec::with_capacity(terms);
    for k in 0..terms {
        let coeff = &remainder[k] * lead;
        for (j, d) in denominator.iter().enumerate() {
            if k + j < terms {
                remainder[k + j] -= &coeff * d;
            }
        }
        quotient.push(coeff);
    }
    quotient
}

/// Taylor coefficients `[x^0 .. x^N]` of `1 / (1 - 4x + x^2)`.
pub fn gf_coefficients(max_len: usize) -> Vec<BigInt> {
    let numerator = [BigInt::one()];
    let denominator = [BigInt::one(), BigInt::from(-4), BigInt::one()];
    series_divide(&numerator, &denominator, max_len + 1)
}

/// `((3 + 2 sqrt3) / 6) (2 + sqrt3)^n + ((3 - 2 sqrt3) / 6) (2 - sqrt3)^n`
/// in 256-bit fixed point.
pub fn h_closed_form(n: u32) -> BigFixed {
    let sqrt3 = BigFixed::sqrt_of(3);
    let two = BigFixed::from_int(2);
    let three = BigFixed::from_int(3);
    let two_sqrt3 = &sqrt3 + &sqrt3;
    let c_plus = (&three + &two_sqrt3).div_int(6);
    let c_minus = (&three - &two_sqrt3).div_int(6);
    let r_plus = (&two + &sqrt3).pow(n);
    let r_minus = (&two - &sqrt3).pow(n);
    &(&c_plus * &r_plus) + &(&c_minus * &r_minus)
}
