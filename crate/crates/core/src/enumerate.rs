//! Enumeration and counting of avoidance classes `Av_n(q)`.
//!
//! Permutations are grown one entry at a time in lexicographic order; a
//! prefix is abandoned the moment it contains `q`, which is detected by an
//! anchored search ending at the entry just appended.

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::pattern::seq_contains_ending_at_last;
use crate::perm::{Pattern, Permutation};

/// Caps on exhaustive enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_len: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_len: 11 }
    }
}

impl Limits {
    pub fn with_max_len(max_len: usize) -> Self {
        Limits { max_len }
    }

    pub fn check(&self, n: usize) -> Result<()> {
        if n == 0 {
            Err(Error::Empty)
        } else if n > self.max_len {
            Err(Error::LimitExceeded { n, cap: self.max_len })
        } else {
            Ok(())
        }
    }
}

/// Lexicographic stream of `Av_n(q)`.
pub fn enumerate_avoiders(n: usize, q: &Pattern, limits: &Limits) -> Result<Avoiders> {
    limits.check(n)?;
    Ok(Avoiders::new(n, q.entries().to_vec()))
}

/// `|Av_n(q)|`. Subtrees under each first entry are counted in parallel on
/// the current rayon pool.
pub fn count_avoiders(n: usize, q: &Pattern, limits: &Limits) -> Result<BigUint> {
    limits.check(n)?;
    let q = q.entries();
    let total: u64 = (1..=n)
        .into_par_iter()
        .map(|first| {
            let mut prefix = Vec::with_capacity(n);
            let mut used = vec![false; n + 1];
            prefix.push(first);
            used[first] = true;
            if seq_contains_ending_at_last(&prefix, q) {
                0
            } else {
                count_below(n, q, &mut prefix, &mut used)
            }
        })
        .sum();
    Ok(BigUint::from(total))
}

fn count_below(n: usize, q: &[usize], prefix: &mut Vec<usize>, used: &mut [bool]) -> u64 {
    if prefix.len() == n {
        return 1;
    }
    let mut total = 0;
    for v in 1..=n {
        if used[v] {
            continue;
        }
        prefix.push(v);
        if !seq_contains_ending_at_last(prefix, q) {
            used[v] = true;
            total += count_below(n, q, prefix, used);
            used[v] = false;
        }
        prefix.pop();
    }
    total
}

pub struct Avoiders {
    n: usize,
    q: Vec<usize>,
    prefix: Vec<usize>,
    used: Vec<bool>,
    /// `next_candidate[d]` is the smallest value not yet tried at depth `d`.
    next_candidate: Vec<usize>,
    at_leaf: bool,
    done: bool,
}

impl Avoiders {
    fn new(n: usize, q: Vec<usize>) -> Self {
        let next_candidate = vec![1; n + 1];
        Avoiders {
            n,
            q,
            prefix: Vec::with_capacity(n),
            used: vec![false; n + 1],
            next_candidate,
            at_leaf: false,
            done: false,
        }
    }

    fn pop(&mut self) {
        if let Some(v) = self.prefix.pop() {
            self.used[v] = false;
        }
    }
}

impl Iterator for Avoiders {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        if self.at_leaf {
            self.at_leaf = false;
            self.pop();
        }
        loop {
            let depth = self.prefix.len();
            let mut advanced = false;
            while self.next_candidate[depth] <= self.n {
                let v = self.next_candidate[depth];
                self.next_candidate[depth] += 1;
                if self.used[v] {
                    continue;
                }
                self.prefix.push(v);
                if seq_contains_ending_at_last(&self.prefix, &self.q) {
                    self.prefix.pop();
                    continue;
                }
                self.used[v] = true;
                advanced = true;
                break;
            }
            if advanced {
                if self.prefix.len() == self.n {
                    self.at_leaf = true;
                    return Some(Permutation::from_vec_unchecked(self.prefix.clone()));
                }
                self.next_candidate[self.prefix.len()] = 1;
            } else if depth == 0 {
                self.done = true;
                return None;
            } else {
                self.pop();
            }
        }
    }
}

/// `C_n = binom(2n, n) / (n + 1)`.
pub fn catalan(n: u64) -> BigUint {
    // C_{k+1} = C_k * 2(2k+1) / (k+2), exact at every step.
    let mut c = BigUint::from(1u32);
    for k in 0..n {
        c = c * (2 * (2 * k + 1)) / (k + 2);
    }
    c
}
