//! Numerical checks of the counting claims for `S_n(1324)`.
//!
//! All pass/fail decisions use exact arithmetic: big integers for the `16^n`
//! and `h_{n-1}^2` comparisons and `Z[sqrt(3)]` for `(7 + 4 sqrt3)^n`.

use std::collections::HashSet;

use num_bigint::{BigInt, BigUint};
use num_traits::ToPrimitive;
use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::codec::encode;
use crate::enumerate::{count_avoiders, enumerate_avoiders, Limits};
use crate::error::Result;
use crate::perm::Permutation;
use crate::quadratic::{headline_base, QuadInt};
use crate::words::count_cb_free;

/// Best known exponential lower growth rate for 1324-avoiders. Reported
/// beside the growth table, never asserted.
pub const REFERENCE_LOWER_GROWTH: f64 = 9.42;

pub fn pattern_1324() -> Permutation {
    Permutation::new(vec![1, 3, 2, 4]).expect("valid pattern")
}

/// Raw numbers for one length `n`. Every pass flag is derived on demand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountReport {
    pub n: usize,
    pub s_n: BigUint,
    pub h_prev: BigUint,
    pub h_prev_sq: BigUint,
    pub bound_16: BigUint,
    /// `(7 + 4 sqrt3)^n`, exact.
    pub headline: QuadInt,
}

impl CountReport {
    /// Builds the report for a known `s_n`. `n >= 1`.
    pub fn new(n: usize, s_n: BigUint) -> Self {
        assert!(n >= 1, "reports start at n = 1");
        let h_prev = count_cb_free(n - 1).values()[n - 1].clone();
        let h_prev_sq = &h_prev * &h_prev;
        let bound_16 = BigUint::from(16u32).pow(n as u32);
        let headline = headline_base().pow(n as u32);
        CountReport { n, s_n, h_prev, h_prev_sq, bound_16, headline }
    }

    /// The corollary is asserted from `n = 2`; at `n = 1` both sides are 1.
    pub fn corollary_asserted(&self) -> bool {
        self.n >= 2
    }

    pub fn corollary_holds(&self) -> bool {
        self.s_n < self.h_prev_sq
    }

    pub fn below_16(&self) -> bool {
        self.s_n < self.bound_16
    }

    pub fn below_headline(&self) -> bool {
        below_exact(&self.s_n, &self.headline)
    }

    pub fn h_prev_sq_below_headline(&self) -> bool {
        below_exact(&self.h_prev_sq, &self.headline)
    }

    /// True iff every asserted comparison holds.
    pub fn passed(&self) -> bool {
        (!self.corollary_asserted() || self.corollary_holds())
            && self.below_16()
            && self.below_headline()
            && self.h_prev_sq_below_headline()
    }

    pub fn headline_approx(&self) -> f64 {
        self.headline.to_f64()
    }

    pub fn ratio_corollary(&self) -> f64 {
        ratio(&self.s_n, &self.h_prev_sq)
    }

    pub fn ratio_16(&self) -> f64 {
        ratio(&self.s_n, &self.bound_16)
    }

    pub fn ratio_headline(&self) -> f64 {
        self.s_n.to_f64().unwrap_or(f64::NAN) / self.headline_approx()
    }
}

fn below_exact(x: &BigUint, bound: &QuadInt) -> bool {
    QuadInt::from_int(BigInt::from(x.clone())) < *bound
}

fn ratio(x: &BigUint, y: &BigUint) -> f64 {
    x.to_f64().unwrap_or(f64::NAN) / y.to_f64().unwrap_or(f64::NAN)
}

impl Serialize for CountReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("CountReport", 17)?;
        s.serialize_field("n", &self.n)?;
        s.serialize_field("s_n", &self.s_n.to_string())?;
        s.serialize_field("h_prev", &self.h_prev.to_string())?;
        s.serialize_field("h_prev_sq", &self.h_prev_sq.to_string())?;
        s.serialize_field("bound_16", &self.bound_16.to_string())?;
        s.serialize_field("headline_a", &self.headline.a.to_string())?;
        s.serialize_field("headline_b", &self.headline.b.to_string())?;
        s.serialize_field("headline_approx", &self.headline_approx())?;
        s.serialize_field("ratio_corollary", &self.ratio_corollary())?;
        s.serialize_field("ratio_16", &self.ratio_16())?;
        s.serialize_field("ratio_headline", &self.ratio_headline())?;
        s.serialize_field("corollary_asserted", &self.corollary_asserted())?;
        s.serialize_field("corollary_holds", &self.corollary_holds())?;
        s.serialize_field("below_16", &self.below_16())?;
        s.serialize_field("below_headline", &self.below_headline())?;
        s.serialize_field("h_prev_sq_below_headline", &self.h_prev_sq_below_headline())?;
        s.serialize_field("passed", &self.passed())?;
        s.end()
    }
}

impl CountReport {
    pub const CSV_HEADER: &'static str = "n,s_n,h_prev,h_prev_sq,bound_16,headline_approx,ratio_corollary,ratio_16,ratio_headline,corollary_asserted,corollary_holds,below_16,below_headline,h_prev_sq_below_headline,passed";

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{:.6e},{:.6e},{:.6e},{:.6e},{},{},{},{},{},{}",
            self.n,
            self.s_n,
            self.h_prev,
            self.h_prev_sq,
            self.bound_16,
            self.headline_approx(),
            self.ratio_corollary(),
            self.ratio_16(),
            self.ratio_headline(),
            self.corollary_asserted(),
            self.corollary_holds(),
            self.below_16(),
            self.below_headline(),
            self.h_prev_sq_below_headline(),
            self.passed()
        )
    }
}

pub fn verify_corollary(n: usize, limits: &Limits) -> Result<CountReport> {
    let s_n = count_avoiders(n, &pattern_1324(), limits)?;
    Ok(CountReport::new(n, s_n))
}

/// `S_n(1324) < 16^n`.
pub fn verify_16(n: usize, limits: &Limits) -> Result<bool> {
    Ok(verify_corollary(n, limits)?.below_16())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HeadlineCheck {
    /// `S_n(1324) < (7 + 4 sqrt3)^n`
    pub count_below: bool,
    /// `h_{n-1}^2 < (7 + 4 sqrt3)^n`
    pub h_prev_sq_below: bool,
}

pub fn verify_headline(n: usize, limits: &Limits) -> Result<HeadlineCheck> {
    let r = verify_corollary(n, limits)?;
    Ok(HeadlineCheck { count_below: r.below_headline(), h_prev_sq_below: r.h_prev_sq_below_headline() })
}

/// `h_{n-1}^2 < (7 + 4 sqrt3)^n`, needing no enumeration. `n >= 1`.
pub fn h_prev_sq_below_headline(n: usize) -> bool {
    let h_prev = count_cb_free(n - 1).values()[n - 1].clone();
    below_exact(&(&h_prev * &h_prev), &headline_base().pow(n as u32))
}

#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct GrowthRow {
    pub n: usize,
    #[serde(serialize_with = "as_decimal")]
    pub s_n: BigUint,
    /// `S_n^{1/n}`
    pub root: f64,
}

fn as_decimal<S: Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

pub fn growth_row(n: usize, s_n: BigUint) -> GrowthRow {
    let root = s_n.to_f64().unwrap_or(f64::NAN).powf(1.0 / n as f64);
    GrowthRow { n, s_n, root }
}

pub fn growth_table(n_max: usize, limits: &Limits) -> Result<Vec<GrowthRow>> {
    (1..=n_max).map(|n| Ok(growth_row(n, count_avoiders(n, &pattern_1324(), limits)?))).collect()
}

/// Number of distinct code pairs over `Av_n(1324)`.
pub fn count_code_images(n: usize, limits: &Limits) -> Result<usize> {
    let images: HashSet<_> = enumerate_avoiders(n, &pattern_1324(), limits)?.map(|p| encode(&p)).collect();
    Ok(images.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn boundary_at_one() {
        let r = verify_corollary(1, &lim()).unwrap();
        assert_eq!(r.s_n, BigUint::from(1u32));
        assert_eq!(r.h_prev_sq, BigUint::from(1u32));
        assert!(!r.corollary_holds());
        assert!(!r.corollary_asserted());
        assert!(r.passed());
        assert!(verify_16(1, &lim()).unwrap());
    }

    #[test]
    fn small_reports() {
        let r4 = verify_corollary(4, &lim()).unwrap();
        assert_eq!(r4.s_n, BigUint::from(23u32));
        assert_eq!(r4.h_prev_sq, BigUint::from(3136u32));
        assert!(r4.corollary_holds());

        let r8 = verify_corollary(8, &lim()).unwrap();
        assert_eq!(r8.s_n, BigUint::from(15793u32));
        assert_eq!(r8.h_prev, BigUint::from(10864u32));
        assert!(r8.passed());
        assert!(verify_16(6, &lim()).unwrap());

        let h2 = verify_headline(2, &lim()).unwrap();
        assert!(h2.count_below && h2.h_prev_sq_below);
        assert!((verify_corollary(2, &lim()).unwrap().headline_approx() - 193.9948).abs() < 1e-3);
    }

    #[test]
    fn growth_rows() {
        let t = growth_table(8, &lim()).unwrap();
        assert_eq!(t[0].root, 1.0);
        assert!((t[3].root - 23f64.powf(0.25)).abs() < 1e-12);
        assert!((t[3].root - 2.19).abs() < 0.01);
        assert!((t[7].root - 3.35).abs() < 0.01);
    }

    #[test]
    fn report_serializes_flags_from_numbers() {
        let r = verify_corollary(3, &lim()).unwrap();
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["s_n"], "6");
        assert_eq!(json["h_prev_sq"], "225");
        assert_eq!(json["corollary_holds"], true);
        assert_eq!(r.csv_row().split(',').count(), CountReport::CSV_HEADER.split(',').count());
    }
}
