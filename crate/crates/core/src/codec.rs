//! The map `p -> (w(p), z(p))` and its greedy inverse, plus the binary
//! `(u, v)` encoding of 132-avoiders by their left-to-right minima.
//!
//! Decoding places the type-`A` values into the `A` positions in decreasing
//! order, and likewise for `D`. `B` positions are then filled left to right
//! with the smallest unused `B` value exceeding the nearest `A` entry on the
//! left; `C` positions right to left with the largest unused `C` value below
//! the nearest `D` entry on the right. The candidate is accepted only if it
//! avoids 1324 and re-encodes to the input.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coloring::{color, Mark, TypeWord};
use crate::error::Error;
use crate::pattern::{avoids, seq_contains};
use crate::perm::Permutation;

/// An ordered pair of type words: position word `w` and value word `z`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CodePair {
    pub w: TypeWord,
    pub z: TypeWord,
}

impl CodePair {
    pub fn new(w: TypeWord, z: TypeWord) -> Self {
        CodePair { w, z }
    }

    pub fn len(&self) -> usize {
        self.w.len()
    }

    pub fn is_empty(&self) -> bool {
        self.w.is_empty()
    }
}

impl fmt::Display for CodePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.w, self.z)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecodeError {
    #[error("shape: {0}")]
    Shape(String),
    #[error("greedy: position {position}: {reason}")]
    Greedy { position: usize, reason: String },
    #[error("verification: candidate {candidate}: {reason}")]
    Verification { candidate: Permutation, reason: String },
}

impl DecodeError {
    pub fn stage(&self) -> &'static str {
        match self {
            DecodeError::Shape(_) => "shape",
            DecodeError::Greedy { .. } => "greedy",
            DecodeError::Verification { .. } => "verification",
        }
    }
}

pub fn encode(p: &Permutation) -> CodePair {
    let cp = color(p);
    CodePair { w: cp.position_word(), z: cp.value_word() }
}

/// Inverse of [`encode`] on 1324-avoiders. Any pair outside the image fails.
pub fn decode(code: &CodePair) -> Result<Permutation, DecodeError> {
    let candidate = decode_unverified(code)?;
    if !avoids(&candidate, &pattern_1324()) {
        return Err(DecodeError::Verification { candidate, reason: "contains 1324".into() });
    }
    let again = encode(&candidate);
    if again != *code {
        return Err(DecodeError::Verification { reason: format!("re-encodes to {again}"), candidate });
    }
    Ok(candidate)
}

/// The greedy reconstruction without the final check. The result is a
/// permutation but need not encode back to `code`.
pub fn decode_unverified(code: &CodePair) -> Result<Permutation, DecodeError> {
    let (w, z) = (code.w.letters(), code.z.letters());
    let n = w.len();
    if n == 0 {
        return Err(DecodeError::Shape("empty words".into()));
    }
    if z.len() != n {
        return Err(DecodeError::Shape(format!("word lengths differ ({n} vs {})", z.len())));
    }
    if code.w.letter_counts() != code.z.letter_counts() {
        return Err(DecodeError::Shape(format!(
            "letter counts differ (w has {:?}, z has {:?})",
            code.w.letter_counts(),
            code.z.letter_counts()
        )));
    }

    let positions_of = |m: Mark| (1..=n).filter(move |&i| w[i - 1] == m);
    let values_of = |m: Mark| (1..=n).filter(move |&v| z[v - 1] == m);

    let mut entries = vec![0usize; n + 1];
    for m in [Mark::A, Mark::D] {
        for (pos, val) in positions_of(m).zip(values_of(m).rev()) {
            entries[pos] = val;
        }
    }

    let mut free_b: BTreeSet<usize> = values_of(Mark::B).collect();
    let mut nearest_a = None;
    for pos in 1..=n {
        match w[pos - 1] {
            Mark::A => nearest_a = Some(entries[pos]),
            Mark::B => {
                let a = nearest_a.ok_or_else(|| DecodeError::Greedy {
                    position: pos,
                    reason: "no type-A entry on the left".into(),
                })?;
                let v = free_b.range(a + 1..).next().copied().ok_or_else(|| DecodeError::Greedy {
                    position: pos,
                    reason: format!("no unused B value above {a}"),
                })?;
                free_b.remove(&v);
                entries[pos] = v;
            }
            _ => {}
        }
    }

    let mut free_c: BTreeSet<usize> = values_of(Mark::C).collect();
    let mut nearest_d = None;
    for pos in (1..=n).rev() {
        match w[pos - 1] {
            Mark::D => nearest_d = Some(entries[pos]),
            Mark::C => {
                let d = nearest_d.ok_or_else(|| DecodeError::Greedy {
                    position: pos,
                    reason: "no type-D entry on the right".into(),
                })?;
                let v = free_c.range(..d).next_back().copied().ok_or_else(|| DecodeError::Greedy {
                    position: pos,
                    reason: format!("no unused C value below {d}"),
                })?;
                free_c.remove(&v);
                entries[pos] = v;
            }
            _ => {}
        }
    }

    entries.remove(0);
    Ok(Permutation::from_vec_unchecked(entries))
}

fn pattern_1324() -> Permutation {
    Permutation::from_vec_unchecked(vec![1, 3, 2, 4])
}

/// A word over `{0, 1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryWord(pub Vec<u8>);

impl BinaryWord {
    /// 1-based indices holding `0`.
    pub fn zeros(&self) -> Vec<usize> {
        self.0.iter().enumerate().filter(|(_, &b)| b == 0).map(|(i, _)| i + 1).collect()
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|b| write!(f, "{b}"))
    }
}

/// `u` marks positions, `v` marks values; `0` means left-to-right minimum.
pub fn uv_encode_132(p: &Permutation) -> Result<(BinaryWord, BinaryWord), Error> {
    if seq_contains(p.entries(), &[1, 3, 2]) {
        return Err(Error::ContainsPattern { perm: p.to_string(), pattern: "132".into() });
    }
    let n = p.len();
    let mut u = vec![1u8; n];
    let mut v = vec![1u8; n];
    for (pos, val) in p.ltr_minima() {
        u[pos - 1] = 0;
        v[val - 1] = 0;
    }
    Ok((BinaryWord(u), BinaryWord(v)))
}

pub fn uv_decode_132(u: &BinaryWord, v: &BinaryWord) -> Result<Permutation, ReconstructError> {
    if u.0.len() != v.0.len() {
        return Err(ReconstructError::Precondition("u and v differ in length".into()));
    }
    reconstruct_132(&v.zeros(), &u.zeros(), u.0.len())
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReconstructError {
    #[error("invalid input: {0}")]
    Precondition(String),
    #[error("no value available for position {position}")]
    Unavailable { position: usize },
    #[error("reconstructed {candidate} does not have the requested extrema")]
    Mismatch { candidate: Permutation },
}

fn check_sets(
    values: &BTreeSet<usize>,
    positions: &BTreeSet<usize>,
    n: usize,
    anchor: usize,
) -> Result<(), ReconstructError> {
    if n == 0 {
        return Err(ReconstructError::Precondition("n must be positive".into()));
    }
    if values.len() != positions.len() {
        return Err(ReconstructError::Precondition(format!(
            "{} values but {} positions",
            values.len(),
            positions.len()
        )));
    }
    if values.iter().chain(positions).any(|&x| x == 0 || x > n) {
        return Err(ReconstructError::Precondition(format!("entries must lie in 1..={n}")));
    }
    if !values.contains(&anchor) || !positions.contains(&anchor) {
        return Err(ReconstructError::Precondition(format!("{anchor} must be both a value and a position")));
    }
    Ok(())
}

/// The unique 132-avoider of length `n` whose left-to-right minima have
/// exactly these values at exactly these positions.
///
/// Minima go into their positions in decreasing order; every other position,
/// left to right, takes the smallest remaining value larger than the nearest
/// minimum to its left.
pub fn reconstruct_132(
    minima_values: &[usize],
    minima_positions: &[usize],
    n: usize,
) -> Result<Permutation, ReconstructError> {
    let values: BTreeSet<usize> = minima_values.iter().copied().collect();
    let positions: BTreeSet<usize> = minima_positions.iter().copied().collect();
    if values.len() != minima_values.len() || positions.len() != minima_positions.len() {
        return Err(ReconstructError::Precondition("repeated entries".into()));
    }
    check_sets(&values, &positions, n, 1)?;

    let mut entries = vec![0usize; n];
    for (&pos, &val) in positions.iter().zip(values.iter().rev()) {
        entries[pos - 1] = val;
    }
    let mut remaining: BTreeSet<usize> = (1..=n).filter(|v| !values.contains(v)).collect();
    let mut nearest_min = 0;
    for pos in 1..=n {
        if positions.contains(&pos) {
            nearest_min = entries[pos - 1];
            continue;
        }
        let v = remaining
            .range(nearest_min + 1..)
            .next()
            .copied()
            .ok_or(ReconstructError::Unavailable { position: pos })?;
        remaining.remove(&v);
        entries[pos - 1] = v;
    }

    let candidate = Permutation::from_vec_unchecked(entries);
    let minima = candidate.ltr_minima();
    let ok = minima.len() == values.len()
        && minima.iter().all(|(p, v)| positions.contains(p) && values.contains(v))
        && !seq_contains(candidate.entries(), &[1, 3, 2]);
    if ok {
        Ok(candidate)
    } else {
        Err(ReconstructError::Mismatch { candidate })
    }
}

/// The unique 213-avoider of length `n` whose right-to-left maxima have
/// exactly these values at exactly these positions, via reverse-complement
/// of [`reconstruct_132`].
pub fn reconstruct_213(
    maxima_values: &[usize],
    maxima_positions: &[usize],
    n: usize,
) -> Result<Permutation, ReconstructError> {
    if maxima_values.iter().chain(maxima_positions).any(|&x| x == 0 || x > n) {
        return Err(ReconstructError::Precondition(format!("entries must lie in 1..={n}")));
    }
    let mirrored_values: Vec<usize> = maxima_values.iter().map(|&v| n + 1 - v).collect();
    let mirrored_positions: Vec<usize> = maxima_positions.iter().map(|&p| n + 1 - p).collect();
    let mirrored = reconstruct_132(&mirrored_values, &mirrored_positions, n).map_err(|e| match e {
        ReconstructError::Precondition(msg) => ReconstructError::Precondition(format!("{msg} (after mirroring)")),
        ReconstructError::Unavailable { position } => ReconstructError::Unavailable { position: n + 1 - position },
        ReconstructError::Mismatch { candidate } => {
            ReconstructError::Mismatch { candidate: candidate.reverse_complement() }
        }
    })?;
    let candidate = mirrored.reverse_complement();

    let values: BTreeSet<usize> = maxima_values.iter().copied().collect();
    let positions: BTreeSet<usize> = maxima_positions.iter().copied().collect();
    let maxima = candidate.rtl_maxima();
    let ok = maxima.len() == values.len()
        && maxima.iter().all(|(p, v)| positions.contains(p) && values.contains(v))
        && !seq_contains(candidate.entries(), &[2, 1, 3]);
    if ok {
        Ok(candidate)
    } else {
        Err(ReconstructError::Mismatch { candidate })
    }
}
