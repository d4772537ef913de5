use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("permutations must have at least one entry")]
    Empty,
    #[error("{entries:?} is not a permutation of 1..={len}")]
    NotAPermutation { entries: Vec<usize>, len: usize },
    #[error("cannot parse {input:?} as a permutation: {reason}")]
    Parse { input: String, reason: String },
    #[error("cannot parse {input:?} as a type word: unexpected {found:?}")]
    ParseWord { input: String, found: char },
    #[error("length {n} exceeds the enumeration cap of {cap}")]
    LimitExceeded { n: usize, cap: usize },
    #[error("{perm} contains {pattern}")]
    ContainsPattern { perm: String, pattern: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
