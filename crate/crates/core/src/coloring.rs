//! Red/blue coloring of a permutation and the A/B/C/D marking derived from it.
//!
//! Entries are colored left to right. An entry turns blue when coloring it red
//! would complete a 132 made only of red entries, or when a smaller blue entry
//! already exists; otherwise it is red. Red entries that are left-to-right
//! minima of the red subsequence are marked `A`, other red entries `B`. Blue
//! entries that are right-to-left maxima of the blue subsequence are marked
//! `D`, other blue entries `C`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;
use crate::perm::Permutation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Color {
    Red,
    Blue,
}

/// Entry type. `A`/`B` are red, `C`/`D` are blue.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Mark {
    A,
    B,
    C,
    D,
}

impl Mark {
    pub const ALL: [Mark; 4] = [Mark::A, Mark::B, Mark::C, Mark::D];

    pub fn color(self) -> Color {
        match self {
            Mark::A | Mark::B => Color::Red,
            Mark::C | Mark::D => Color::Blue,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Mark::A => 'A',
            Mark::B => 'B',
            Mark::C => 'C',
            Mark::D => 'D',
        }
    }

    pub fn from_char(c: char) -> Option<Mark> {
        match c {
            'A' => Some(Mark::A),
            'B' => Some(Mark::B),
            'C' => Some(Mark::C),
            'D' => Some(Mark::D),
            _ => None,
        }
    }
}

/// A word over `{A, B, C, D}`. Written as a plain uppercase string.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TypeWord(pub Vec<Mark>);

impl TypeWord {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Mark] {
        &self.0
    }

    /// Letter counts in `A, B, C, D` order.
    pub fn letter_counts(&self) -> [usize; 4] {
        let mut counts = [0; 4];
        for &m in &self.0 {
            counts[m as usize] += 1;
        }
        counts
    }

    pub fn starts_with_a(&self) -> bool {
        self.0.first() == Some(&Mark::A)
    }
}

impl fmt::Display for TypeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|m| write!(f, "{}", m.as_char()))
    }
}

impl FromStr for TypeWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        s.trim()
            .chars()
            .map(|c| Mark::from_char(c).ok_or_else(|| Error::ParseWord { input: s.to_string(), found: c }))
            .collect::<Result<Vec<_>, _>>()
            .map(TypeWord)
    }
}

impl Serialize for TypeWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for TypeWord {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredPermutation {
    base: Permutation,
    colors: Vec<Color>,
    marks: Vec<Mark>,
}

impl ColoredPermutation {
    pub fn base(&self) -> &Permutation {
        &self.base
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn marks(&self) -> &[Mark] {
        &self.marks
    }

    /// Values of the entries with the given color, in position order.
    pub fn subsequence(&self, color: Color) -> Vec<usize> {
        self.base.entries().iter().zip(&self.colors).filter(|(_, &c)| c == color).map(|(&v, _)| v).collect()
    }

    pub fn red_subsequence(&self) -> Vec<usize> {
        self.subsequence(Color::Red)
    }

    pub fn blue_subsequence(&self) -> Vec<usize> {
        self.subsequence(Color::Blue)
    }

    /// `w(p)`: letter `i` is the mark at position `i`.
    pub fn position_word(&self) -> TypeWord {
        TypeWord(self.marks.clone())
    }

    /// `z(p)`: letter `i` is the mark of the entry whose value is `i`.
    pub fn value_word(&self) -> TypeWord {
        TypeWord(self.base.positions().into_iter().map(|pos| self.marks[pos - 1]).collect())
    }
}

/// Running state for the red 132 test: each red left-to-right minimum paired
/// with the largest red entry seen after it.
#[derive(Default)]
struct RedState {
    minima: Vec<(usize, Option<usize>)>,
}

impl RedState {
    /// Would a red `x` complete a red `m y x` with `m < x < y`?
    fn completes_132(&self, x: usize) -> bool {
        self.minima.iter().any(|&(m, after)| m < x && after.is_some_and(|y| x < y))
    }

    fn push(&mut self, x: usize) {
        let is_new_min = self.minima.last().is_none_or(|&(m, _)| x < m);
        for (_, after) in &mut self.minima {
            *after = Some(after.map_or(x, |y| y.max(x)));
        }
        if is_new_min {
            self.minima.push((x, None));
        }
    }
}

pub fn color(p: &Permutation) -> ColoredPermutation {
    let n = p.len();
    let mut colors = Vec::with_capacity(n);
    let mut red = RedState::default();
    let mut min_blue = usize::MAX;
    for &x in p.entries() {
        if red.completes_132(x) || min_blue < x {
            colors.push(Color::Blue);
            min_blue = min_blue.min(x);
        } else {
            colors.push(Color::Red);
            red.push(x);
        }
    }

    let mut marks = vec![Mark::A; n];
    let mut red_min = usize::MAX;
    for (i, &x) in p.entries().iter().enumerate() {
        if colors[i] == Color::Red {
            if x < red_min {
                red_min = x;
                marks[i] = Mark::A;
            } else {
                marks[i] = Mark::B;
            }
        }
    }
    let mut blue_max = 0;
    for (i, &x) in p.entries().iter().enumerate().rev() {
        if colors[i] == Color::Blue {
            if x > blue_max {
                blue_max = x;
                marks[i] = Mark::D;
            } else {
                marks[i] = Mark::C;
            }
        }
    }

    ColoredPermutation { base: p.clone(), colors, marks }
}

pub fn position_word(cp: &ColoredPermutation) -> TypeWord {
    cp.position_word()
}

pub fn value_word(cp: &ColoredPermutation) -> TypeWord {
    cp.value_word()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::seq_contains;
    use crate::perm::all_permutations;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    /// Rules applied literally: re-scan all red entries for a 132 each step.
    fn naive_colors(p: &Permutation) -> Vec<Color> {
        let mut reds: Vec<usize> = Vec::new();
        let mut blues: Vec<usize> = Vec::new();
        let mut out = Vec::new();
        for &x in p.entries() {
            let mut trial = reds.clone();
            trial.push(x);
            if seq_contains(&trial, &[1, 3, 2]) || blues.iter().any(|&b| b < x) {
                blues.push(x);
                out.push(Color::Blue);
            } else {
                reds.push(x);
                out.push(Color::Red);
            }
        }
        out
    }

    #[test]
    fn worked_example() {
        let cp = color(&p("3612745"));
        assert_eq!(cp.red_subsequence(), vec![3, 6, 1, 2, 7]);
        assert_eq!(cp.blue_subsequence(), vec![4, 5]);
        assert_eq!(position_word(&cp).to_string(), "ABABBCD");
        assert_eq!(value_word(&cp).to_string(), "ABACDBB");
    }

    #[test]
    fn hand_executed_351624() {
        // 3, 5, 1, 6 are red; 2 would complete the red 132 formed by 1 6 2,
        // and 4 has the smaller blue 2 before it.
        let cp = color(&p("351624"));
        use Color::*;
        assert_eq!(cp.colors(), &[Red, Red, Red, Red, Blue, Blue]);
        assert_eq!(cp.position_word().to_string(), "ABABCD");
        assert_eq!(cp.value_word().to_string(), "ACADBB");
    }

    #[test]
    fn decreasing_is_all_red_a() {
        for n in 1..=6 {
            let cp = color(&Permutation::decreasing(n).unwrap());
            assert!(cp.colors().iter().all(|&c| c == Color::Red));
            assert!(cp.marks().iter().all(|&m| m == Mark::A));
        }
        assert_eq!(color(&p("1")).position_word().to_string(), "A");
        assert_eq!(color(&p("1")).value_word().to_string(), "A");
        assert_eq!(color(&p("321")).position_word().to_string(), "AAA");
        assert_eq!(color(&p("321")).value_word().to_string(), "AAA");
    }

    #[test]
    fn incremental_rule_matches_rescan() {
        for n in 1..=8 {
            for perm in all_permutations(n) {
                assert_eq!(color(&perm).colors(), naive_colors(&perm).as_slice(), "{perm}");
            }
        }
    }

    #[test]
    fn marks_agree_with_colors() {
        for perm in all_permutations(6) {
            let cp = color(&perm);
            for (c, m) in cp.colors().iter().zip(cp.marks()) {
                assert_eq!(*c, m.color());
            }
            assert_eq!(cp.position_word().letter_counts(), cp.value_word().letter_counts());
        }
    }

    #[test]
    fn type_word_text_form() {
        let w: TypeWord = "ABABBCD".parse().unwrap();
        assert_eq!(w.to_string(), "ABABBCD");
        assert!("ABE".parse::<TypeWord>().is_err());
        assert!("".parse::<TypeWord>().unwrap().is_empty());
    }
}
