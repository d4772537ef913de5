//! Exhaustive small-`n` machinery for 1324-avoiding permutations.
//!
//! A 1324-avoider is colored red/blue so that the reds avoid 132 and the
//! blues avoid 213, each entry is then typed `A`/`B`/`C`/`D`, and the pair of
//! type words (indexed by position and by value) determines the permutation.
//! Both words are free of the factor `CB`, and counting such words gives the
//! bound `S_n(1324) < h_{n-1}^2 < (7 + 4 sqrt3)^n`.
//!
//! - [`perm`], [`pattern`], [`enumerate`]: permutations, containment and
//!   avoidance classes.
//! - [`coloring`]: the coloring and the type words.
//! - [`words`]: counting CB-free words three ways.
//! - [`codec`]: encoder, greedy decoder and the binary 132-encoding.
//! - [`bounds`]: exact comparisons of the counts against each bound.

pub mod bounds;
pub mod codec;
pub mod coloring;
pub mod enumerate;
pub mod error;
pub mod fixed;
pub mod pattern;
pub mod perm;
pub mod quadratic;
pub mod words;

pub use codec::{decode, encode, CodePair, DecodeError};
pub use coloring::{color, Color, ColoredPermutation, Mark, TypeWord};
pub use enumerate::{catalan, count_avoiders, enumerate_avoiders, Limits};
pub use error::{Error, Result};
pub use pattern::{avoids, contains};
pub use perm::{Pattern, Permutation};
