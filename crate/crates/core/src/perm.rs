//! Permutations in one-line notation.
//!
//! Values and positions are 1-based at every public boundary. A permutation of
//! length `n` holds each of `1..=n` exactly once; the empty permutation is not
//! representable.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A permutation `p_1 p_2 ... p_n` of `{1, ..., n}`, `n >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    entries: Vec<usize>,
}

/// Patterns are ordinary permutations; the alias only documents the role.
pub type Pattern = Permutation;

impl Permutation {
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::Empty);
        }
        let n = entries.len();
        let mut seen = vec![false; n + 1];
        for &v in &entries {
            if v == 0 || v > n || seen[v] {
                return Err(Error::NotAPermutation { entries, len: n });
            }
            seen[v] = true;
        }
        Ok(Permutation { entries })
    }

    /// Caller guarantees the bijection invariant.
    pub(crate) fn from_vec_unchecked(entries: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(entries.clone()).is_ok());
        Permutation { entries }
    }

    pub fn identity(n: usize) -> Result<Self> {
        Permutation::new((1..=n).collect())
    }

    /// `n (n-1) ... 1`
    pub fn decreasing(n: usize) -> Result<Self> {
        Permutation::new((1..=n).rev().collect())
    }

    /// The permutation order-isomorphic to `values` (its pattern reduction).
    /// `values` must be pairwise distinct and non-empty.
    pub fn standardize(values: &[usize]) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Empty);
        }
        let mut order: Vec<usize> = (0..values.len()).collect();
        order.sort_by_key(|&i| values[i]);
        if order.windows(2).any(|w| values[w[0]] == values[w[1]]) {
            return Err(Error::Parse { input: format!("{values:?}"), reason: "repeated value".into() });
        }
        let mut entries = vec![0; values.len()];
        for (rank, &i) in order.iter().enumerate() {
            entries[i] = rank + 1;
        }
        Ok(Permutation { entries })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    /// Always false; present for API symmetry with `len`.
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<usize> {
        self.entries
    }

    /// `p_pos`, with `pos` in `1..=n`.
    pub fn value_at(&self, pos: usize) -> usize {
        self.entries[pos - 1]
    }

    /// `positions[v - 1]` is the 1-based position holding value `v`.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.len()];
        for (i, &v) in self.entries.iter().enumerate() {
            pos[v - 1] = i + 1;
        }
        pos
    }

    pub fn inverse(&self) -> Permutation {
        Permutation { entries: self.positions() }
    }

    pub fn reverse(&self) -> Permutation {
        Permutation { entries: self.entries.iter().rev().copied().collect() }
    }

    pub fn complement(&self) -> Permutation {
        let n = self.len();
        Permutation { entries: self.entries.iter().map(|&v| n + 1 - v).collect() }
    }

    /// Reverse followed by complement. Exchanges 132 with 213 and
    /// left-to-right minima with right-to-left maxima.
    pub fn reverse_complement(&self) -> Permutation {
        let n = self.len();
        Permutation { entries: self.entries.iter().rev().map(|&v| n + 1 - v).collect() }
    }

    /// Left-to-right minima as `(position, value)` in increasing position order.
    pub fn ltr_minima(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        let mut min = usize::MAX;
        for (i, &v) in self.entries.iter().enumerate() {
            if v < min {
                min = v;
                out.push((i + 1, v));
            }
        }
        out
    }

    /// Right-to-left maxima as `(position, value)` in increasing position order.
    pub fn rtl_maxima(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        let mut max = 0;
        for (i, &v) in self.entries.iter().enumerate().rev() {
            if v > max {
                max = v;
                out.push((i + 1, v));
            }
        }
        out.reverse();
        out
    }
}

impl fmt::Display for Permutation {
    /// Contiguous digits when `n <= 9`, comma-separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len() <= 9 {
            for v in &self.entries {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.entries.iter().map(|v| v.to_string()).collect();
            f.write_str(&parts.join(","))
        }
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts `3,6,1,2,7,4,5` always and `3612745` when `n <= 9`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let parse_err = |reason: &str| Error::Parse { input: s.to_string(), reason: reason.to_string() };
        if s.is_empty() {
            return Err(Error::Empty);
        }
        let entries: Vec<usize> = if s.contains(',') {
            s.split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|_| parse_err("expected comma-separated integers")))
                .collect::<Result<_>>()?
        } else {
            if s.chars().count() > 9 {
                return Err(parse_err("contiguous digits are only accepted for n <= 9; use commas"));
            }
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(|| parse_err("expected digits")))
                .collect::<Result<_>>()?
        };
        Permutation::new(entries)
    }
}

/// All permutations of length `n` in lexicographic order.
pub fn all_permutations(n: usize) -> AllPermutations {
    AllPermutations { next: if n == 0 { None } else { Some((1..=n).collect()) } }
}

pub struct AllPermutations {
    next: Option<Vec<usize>>,
}

impl Iterator for AllPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if next_lexicographic(&mut succ) {
            self.next = Some(succ);
        }
        Some(Permutation { entries: current })
    }
}

fn next_lexicographic(a: &mut [usize]) -> bool {
    let Some(i) = (1..a.len()).rev().find(|&i| a[i - 1] < a[i]) else {
        return false;
    };
    let j = (i..a.len()).rev().find(|&j| a[j] > a[i - 1]).unwrap();
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn rejects_non_permutations() {
        assert_eq!(Permutation::new(vec![]), Err(Error::Empty));
        assert!(Permutation::new(vec![1, 1]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert!(Permutation::new(vec![1, 3]).is_err());
        assert!("".parse::<Permutation>().is_err());
        assert!("12a".parse::<Permutation>().is_err());
        assert!("12345678910".parse::<Permutation>().is_err());
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(p("3612745").entries(), &[3, 6, 1, 2, 7, 4, 5]);
        assert_eq!(p("3, 1,2").entries(), &[3, 1, 2]);
        let long = p("10,9,8,7,6,5,4,3,2,1");
        assert_eq!(long.to_string(), "10,9,8,7,6,5,4,3,2,1");
        assert_eq!(p("3,1,2").to_string(), "312");
    }

    #[test]
    fn minima_and_maxima() {
        let q = p("351624");
        let min_values: Vec<usize> = q.ltr_minima().into_iter().map(|(_, v)| v).collect();
        assert_eq!(min_values, vec![3, 1]);
        let max_values: Vec<usize> = q.rtl_maxima().into_iter().map(|(_, v)| v).collect();
        assert_eq!(max_values, vec![6, 4]);

        assert_eq!(p("3612745").ltr_minima(), vec![(1, 3), (3, 1)]);
        // The blue subsequence 45 of 3612745, reduced to 12.
        assert_eq!(Permutation::standardize(&[4, 5]).unwrap().rtl_maxima(), vec![(2, 2)]);
        assert_eq!(Permutation::decreasing(5).unwrap().ltr_minima().len(), 5);
        assert_eq!(Permutation::decreasing(5).unwrap().rtl_maxima().len(), 5);
        assert_eq!(Permutation::identity(5).unwrap().rtl_maxima(), vec![(5, 5)]);
        assert_eq!(Permutation::identity(5).unwrap().ltr_minima(), vec![(1, 1)]);
    }

    #[test]
    fn standardize_reduces_to_pattern() {
        assert_eq!(Permutation::standardize(&[36, 6, 12, 27]).unwrap(), p("4123"));
        assert_eq!(Permutation::standardize(&[4, 5]).unwrap(), p("12"));
        assert!(Permutation::standardize(&[2, 2]).is_err());
    }

    #[test]
    fn symmetries() {
        let q = p("132");
        assert_eq!(q.reverse_complement(), p("213"));
        assert_eq!(q.reverse().complement(), q.reverse_complement());
        assert_eq!(p("3612745").inverse(), p("3416725"));
        assert_eq!(p("3612745").inverse().inverse(), p("3612745"));
    }

    #[test]
    fn lexicographic_enumeration() {
        let all: Vec<String> = all_permutations(3).map(|q| q.to_string()).collect();
        assert_eq!(all, ["123", "132", "213", "231", "312", "321"]);
        assert_eq!(all_permutations(6).count(), 720);
        assert_eq!(all_permutations(0).count(), 0);
    }
}
