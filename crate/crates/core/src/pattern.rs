//! Classical pattern containment.
//!
//! The search walks candidate index tuples `i_1 < i_2 < ... < i_k` left to
//! right and abandons a partial tuple as soon as one chosen value disagrees in
//! relative order with the pattern. It works on any sequence of distinct
//! values, so red/blue subsequences can be tested without re-standardizing.

use crate::perm::{Pattern, Permutation};

pub fn contains(p: &Permutation, q: &Pattern) -> bool {
    seq_contains(p.entries(), q.entries())
}

pub fn avoids(p: &Permutation, q: &Pattern) -> bool {
    !contains(p, q)
}

/// True iff some subsequence of `text` (distinct values) is order-isomorphic
/// to `pattern`.
pub fn seq_contains(text: &[usize], pattern: &[usize]) -> bool {
    if pattern.len() > text.len() {
        return false;
    }
    if pattern.is_empty() {
        return true;
    }
    let mut chosen = Vec::with_capacity(pattern.len());
    extend(text, pattern, 0, text.len(), &mut chosen)
}

/// True iff `text` contains `pattern` with the final entry of `text` playing
/// the role of the final pattern letter. Appending entries one at a time and
/// calling this after each append detects the first occurrence exactly when
/// it is created.
pub fn seq_contains_ending_at_last(text: &[usize], pattern: &[usize]) -> bool {
    let (k, n) = (pattern.len(), text.len());
    if k == 0 || k > n {
        return k == 0;
    }
    let last = text[n - 1];
    let q_last = pattern[k - 1];
    let mut chosen = Vec::with_capacity(k);
    // The last letter is fixed, so the prefix search may only use text[..n-1]
    // and every chosen value must already sit on the correct side of `last`.
    search_with_anchor(text, pattern, 0, n - 1, last, q_last, &mut chosen)
}

fn consistent(pattern: &[usize], chosen: &[usize], j: usize, value: usize) -> bool {
    chosen.iter().zip(pattern).all(|(&c, &q)| (c < value) == (q < pattern[j]))
}

fn extend(text: &[usize], pattern: &[usize], from: usize, end: usize, chosen: &mut Vec<usize>) -> bool {
    let j = chosen.len();
    if j == pattern.len() {
        return true;
    }
    let remaining = pattern.len() - j;
    if end < remaining || from > end - remaining {
        return false;
    }
    for i in from..=end - remaining {
        let v = text[i];
        if consistent(pattern, chosen, j, v) {
            chosen.push(v);
            if extend(text, pattern, i + 1, end, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

fn search_with_anchor(
    text: &[usize],
    pattern: &[usize],
    from: usize,
    end: usize,
    last: usize,
    q_last: usize,
    chosen: &mut Vec<usize>,
) -> bool {
    let j = chosen.len();
    if j + 1 == pattern.len() {
        return true;
    }
    let remaining = pattern.len() - 1 - j;
    if end < remaining || from > end - remaining {
        return false;
    }
    let below = pattern[j] < q_last;
    for i in from..=end - remaining {
        let v = text[i];
        if (v < last) == below && consistent(pattern, chosen, j, v) {
            chosen.push(v);
            if search_with_anchor(text, pattern, i + 1, end, last, q_last, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::all_permutations;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    /// Every k-subset of positions, standardized and compared.
    fn contains_by_subsets(text: &Permutation, q: &Pattern) -> bool {
        let n = text.len();
        let k = q.len();
        if k > n {
            return false;
        }
        (0u32..1 << n).filter(|m| m.count_ones() as usize == k).any(|mask| {
            let sub: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| text.entries()[i]).collect();
            Permutation::standardize(&sub).unwrap() == *q
        })
    }

    #[test]
    fn worked_examples() {
        assert!(avoids(&p("2537164"), &p("1234")));
        assert!(!contains(&p("2537164"), &p("1234")));
        assert!(!contains(&p("3612745"), &p("1324")));
        assert!(avoids(&p("1"), &p("12")));
        assert!(!avoids(&p("1324"), &p("1324")));
        assert!(contains(&p("3612745"), &p("3612745")));
    }

    #[test]
    fn exhaustive_subset_check_for_1324() {
        assert!(!contains_by_subsets(&p("3612745"), &p("1324")));
        let q = p("1324");
        for n in 1..=7 {
            for perm in all_permutations(n) {
                assert_eq!(contains(&perm, &q), contains_by_subsets(&perm, &q), "{perm}");
            }
        }
    }

    #[test]
    fn matches_subsets_for_assorted_patterns() {
        for q in ["1", "12", "21", "132", "213", "2413", "3142", "12345"] {
            let q = p(q);
            for perm in all_permutations(6) {
                assert_eq!(contains(&perm, &q), contains_by_subsets(&perm, &q), "{perm} vs {q}");
            }
        }
    }

    #[test]
    fn anchored_search_detects_first_occurrence() {
        let q = p("1324");
        for perm in all_permutations(7) {
            let e = perm.entries();
            let first_hit = (1..=e.len()).find(|&m| seq_contains(&e[..m], q.entries()));
            let anchored_hit = (1..=e.len()).find(|&m| seq_contains_ending_at_last(&e[..m], q.entries()));
            assert_eq!(first_hit, anchored_hit, "{perm}");
        }
    }

    #[test]
    fn works_on_unstandardized_sequences() {
        assert!(!seq_contains(&[36, 60, 10, 20, 70], &[1, 3, 2]));
        assert!(seq_contains(&[36, 60, 10, 20, 40], &[1, 3, 2]));
        assert!(!seq_contains(&[40, 50], &[2, 1, 3]));
        assert!(seq_contains(&[], &[]));
        assert!(!seq_contains(&[], &[1]));
    }
}
