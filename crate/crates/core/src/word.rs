//! Free-group words in the band generators `a1, a2, a3` of `B_3`.
//!
//! Text grammar: whitespace separated tokens `a1 a2 a3 s1 s2 d`, each with an
//! optional `^<int>` exponent. `s1`, `s2` are the Artin generators
//! (`s1 = a1`, `s2 = a2`) and `d` is the fundamental braid `a2 a1`, expanded on
//! input. Adjacent syllables with the same index are merged and zero
//! exponents dropped, so every [`Word`] is freely reduced at the syllable
//! level.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Generator index in `{1, 2, 3}`, arithmetic taken modulo 3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GenIndex(u8);

impl GenIndex {
    pub const A1: GenIndex = GenIndex(1);
    pub const A2: GenIndex = GenIndex(2);
    pub const A3: GenIndex = GenIndex(3);

    /// Reduces any integer to the representative in `{1, 2, 3}`.
    pub fn new(value: i64) -> Self {
        GenIndex(((value - 1).rem_euclid(3) + 1) as u8)
    }

    pub fn get(self) -> u8 {
        self.0
    }

    /// `self + t (mod 3)`; this is the action of `tau^t`.
    pub fn shift(self, t: i64) -> Self {
        GenIndex::new(self.0 as i64 + t.rem_euclid(3))
    }

    /// The residue of `other - self` in `{0, 1, 2}`.
    pub fn offset_to(self, other: GenIndex) -> u8 {
        ((other.0 as i64 - self.0 as i64).rem_euclid(3)) as u8
    }
}

impl fmt::Display for GenIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Syllable {
    pub index: GenIndex,
    pub exponent: i64,
}

impl Syllable {
    pub fn new(index: GenIndex, exponent: i64) -> Self {
        Syllable { index, exponent }
    }
}

/// A word `a_{i_1}^{k_1} ... a_{i_r}^{k_r}` with `k_j != 0` and
/// `i_j != i_{j+1}`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Word {
    syllables: Vec<Syllable>,
}

impl Word {
    pub fn new() -> Self {
        Word::default()
    }

    pub fn from_syllables<I: IntoIterator<Item = Syllable>>(syllables: I) -> Self {
        let mut w = Word::new();
        for s in syllables {
            w.push(s.index, s.exponent);
        }
        w
    }

    /// Builds a word from `(index, exponent)` pairs with raw integer indices.
    pub fn from_pairs<I: IntoIterator<Item = (i64, i64)>>(pairs: I) -> Self {
        Word::from_syllables(
            pairs
                .into_iter()
                .map(|(i, e)| Syllable::new(GenIndex::new(i), e)),
        )
    }

    /// Single letter `a_index^exponent`.
    pub fn letter(index: GenIndex, exponent: i64) -> Self {
        let mut w = Word::new();
        w.push(index, exponent);
        w
    }

    /// `d^power` expanded as `(a2 a1)^power`, or `(a1^-1 a2^-1)^-power`.
    pub fn delta_power(power: i64) -> Self {
        let mut w = Word::new();
        for _ in 0..power.unsigned_abs() {
            if power > 0 {
                w.push(GenIndex::A2, 1);
                w.push(GenIndex::A1, 1);
            } else {
                w.push(GenIndex::A1, -1);
                w.push(GenIndex::A2, -1);
            }
        }
        w
    }

    /// Appends `a_index^exponent`, merging with the last syllable.
    pub fn push(&mut self, index: GenIndex, exponent: i64) {
        if exponent == 0 {
            return;
        }
        match self.syllables.last_mut() {
            Some(last) if last.index == index => {
                last.exponent = last
                    .exponent
                    .checked_add(exponent)
                    .expect("exponent overflow");
                if last.exponent == 0 {
                    self.syllables.pop();
                }
            }
            _ => self.syllables.push(Syllable::new(index, exponent)),
        }
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    /// `|W|`, the sum of absolute exponents.
    pub fn word_length(&self) -> u64 {
        self.syllables.iter().map(|s| s.exponent.unsigned_abs()).sum()
    }

    /// `syl(W)`, the number of syllables.
    pub fn syl_length(&self) -> usize {
        self.syllables.len()
    }

    pub fn exponent_sum(&self) -> i64 {
        self.syllables.iter().map(|s| s.exponent).sum()
    }

    pub fn is_positive(&self) -> bool {
        self.syllables.iter().all(|s| s.exponent > 0)
    }

    /// Letters one at a time as `(index, +1 | -1)`.
    pub fn letters(&self) -> impl DoubleEndedIterator<Item = (GenIndex, i64)> + '_ {
        self.syllables.iter().flat_map(|s| {
            let sign = s.exponent.signum();
            std::iter::repeat_n((s.index, sign), s.exponent.unsigned_abs() as usize)
        })
    }

    pub fn inverse(&self) -> Word {
        Word {
            syllables: self
                .syllables
                .iter()
                .rev()
                .map(|s| Syllable::new(s.index, -s.exponent))
                .collect(),
        }
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut w = self.clone();
        w.extend(other);
        w
    }

    pub fn extend(&mut self, other: &Word) {
        for s in &other.syllables {
            self.push(s.index, s.exponent);
        }
    }

    /// Applies `tau^t`, shifting every index by `t`.
    pub fn tau(&self, t: i64) -> Word {
        Word {
            syllables: self
                .syllables
                .iter()
                .map(|s| Syllable::new(s.index.shift(t), s.exponent))
                .collect(),
        }
    }

    /// Subword made of letters `start..end` (letter positions, not syllables).
    pub fn letter_slice(&self, start: u64, end: u64) -> Word {
        let mut w = Word::new();
        let mut pos = 0u64;
        for s in &self.syllables {
            let len = s.exponent.unsigned_abs();
            let lo = start.max(pos);
            let hi = end.min(pos + len);
            if lo < hi {
                w.push(s.index, s.exponent.signum() * (hi - lo) as i64);
            }
            pos += len;
        }
        w
    }

    /// Permutation of the strands induced by the braid.
    pub fn permutation(&self) -> Permutation {
        self.syllables
            .iter()
            .filter(|s| s.exponent % 2 != 0)
            .fold(Permutation::identity(), |p, s| {
                p.then(&Permutation::of_generator(s.index))
            })
    }

    /// Number of components of the closure; `1` means a knot.
    pub fn closure_components(&self) -> u8 {
        self.permutation().cycle_count()
    }

    /// Rewrites the word in Artin generators, `a3^k = s2 s1^k s2^-1`.
    pub fn to_artin(&self) -> String {
        let mut out: Vec<(u8, i64)> = Vec::new();
        let mut push = |g: u8, e: i64| match out.last_mut() {
            Some(last) if last.0 == g => {
                last.1 += e;
                if last.1 == 0 {
                    out.pop();
                }
            }
            _ => out.push((g, e)),
        };
        for s in &self.syllables {
            match s.index.get() {
                1 => push(1, s.exponent),
                2 => push(2, s.exponent),
                _ => {
                    push(2, 1);
                    push(1, s.exponent);
                    push(2, -1);
                }
            }
        }
        out.iter()
            .map(|&(g, e)| format_token('s', g, e))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

fn format_token(prefix: char, index: u8, exponent: i64) -> String {
    if exponent == 1 {
        format!("{prefix}{index}")
    } else {
        format!("{prefix}{index}^{exponent}")
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, s) in self.syllables.iter().enumerate() {
            if n > 0 {
                f.write_str(" ")?;
            }
            f.write_str(&format_token('a', s.index.get(), s.exponent))?;
        }
        Ok(())
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(text: &str) -> Result<Word> {
        parse(text)
    }
}

/// Parses the token grammar described in the module docs.
pub fn parse(text: &str) -> Result<Word> {
    let mut word = Word::new();
    let mut rest = text;
    loop {
        let trimmed = rest.trim_start();
        if trimmed.is_empty() {
            return Ok(word);
        }
        let offset = text.len() - trimmed.len();
        let end = trimmed
            .find(char::is_whitespace)
            .unwrap_or(trimmed.len());
        let token = &trimmed[..end];
        rest = &trimmed[end..];

        let (name, exponent) = match token.split_once('^') {
            Some((name, exp)) => {
                let exponent = parse_exponent(exp).ok_or_else(|| Error::Syntax {
                    offset: offset + name.len() + 1,
                    message: format!("malformed exponent `{exp}`"),
                })?;
                (name, exponent)
            }
            None => (token, 1),
        };
        let syntax = |message: String| Error::Syntax { offset, message };
        match name {
            "a1" | "s1" => push_checked(&mut word, GenIndex::A1, exponent).map_err(syntax)?,
            "a2" | "s2" => push_checked(&mut word, GenIndex::A2, exponent).map_err(syntax)?,
            "a3" => push_checked(&mut word, GenIndex::A3, exponent).map_err(syntax)?,
            "d" => {
                if exponent.unsigned_abs() > MAX_DELTA_EXPANSION {
                    return Err(syntax(format!("power of d too large: {exponent}")));
                }
                word.extend(&Word::delta_power(exponent));
            }
            _ => return Err(syntax(format!("unknown token `{token}`"))),
        }
    }
}

/// Powers of `d` are expanded into letters; this bounds the expansion.
const MAX_DELTA_EXPANSION: u64 = 1 << 24;

fn push_checked(word: &mut Word, index: GenIndex, exponent: i64) -> std::result::Result<(), String> {
    if let Some(last) = word.syllables.last() {
        if last.index == index && last.exponent.checked_add(exponent).is_none() {
            return Err("exponent overflow".to_string());
        }
    }
    word.push(index, exponent);
    Ok(())
}

fn parse_exponent(text: &str) -> Option<i64> {
    let digits = text.strip_prefix(['-', '+']).unwrap_or(text);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    text.parse().ok()
}

/// A permutation of the three strands, stored as `images[i-1] = image of i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: [u8; 3],
}

impl Permutation {
    pub fn identity() -> Self {
        Permutation { images: [1, 2, 3] }
    }

    /// `a1 -> (1 2)`, `a2 -> (2 3)`, `a3 -> (1 3)`.
    pub fn of_generator(index: GenIndex) -> Self {
        let images = match index.get() {
            1 => [2, 1, 3],
            2 => [1, 3, 2],
            _ => [3, 2, 1],
        };
        Permutation { images }
    }

    pub fn images(&self) -> [u8; 3] {
        self.images
    }

    pub fn apply(&self, strand: u8) -> u8 {
        self.images[strand as usize - 1]
    }

    /// `self` acts first, then `next`.
    pub fn then(&self, next: &Permutation) -> Permutation {
        let mut images = [0; 3];
        for (i, slot) in images.iter_mut().enumerate() {
            *slot = next.apply(self.images[i]);
        }
        Permutation { images }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = [0; 3];
        for i in 0..3 {
            images[self.images[i] as usize - 1] = i as u8 + 1;
        }
        Permutation { images }
    }

    pub fn cycle_count(&self) -> u8 {
        let mut seen = [false; 3];
        let mut cycles = 0;
        for start in 1..=3u8 {
            if seen[start as usize - 1] {
                continue;
            }
            cycles += 1;
            let mut s = start;
            while !seen[s as usize - 1] {
                seen[s as usize - 1] = true;
                s = self.apply(s);
            }
        }
        cycles
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(text: &str) -> Word {
        text.parse().unwrap()
    }

    #[test]
    fn index_reduction() {
        assert_eq!(GenIndex::new(-2), GenIndex::A1);
        assert_eq!(GenIndex::new(4), GenIndex::A1);
        assert_eq!(GenIndex::new(0), GenIndex::A3);
        assert_eq!(GenIndex::A3.shift(1), GenIndex::A1);
        assert_eq!(GenIndex::A1.shift(-1), GenIndex::A3);
        assert_eq!(GenIndex::A3.offset_to(GenIndex::A1), 1);
    }

    #[test]
    fn parse_lengths() {
        let x = w("a1 a2^2 a3 a1^3");
        assert_eq!(x.word_length(), 7);
        assert_eq!(x.syl_length(), 4);
    }

    #[test]
    fn parse_artin_tokens() {
        assert_eq!(w("s1^-1 s2 s1^-1 s2"), Word::from_pairs([(1, -1), (2, 1), (1, -1), (2, 1)]));
        assert_eq!(w("d"), Word::from_pairs([(2, 1), (1, 1)]));
        assert_eq!(w("d^-1"), Word::from_pairs([(1, -1), (2, -1)]));
    }

    #[test]
    fn parse_empty_and_merging() {
        assert!(w("").is_empty());
        assert!(w("   ").is_empty());
        assert_eq!(w("a1 a1^-1"), Word::new());
        assert_eq!(w("a1^0 a2"), w("a2"));
        assert_eq!(w("a1 s1 a1^+2"), w("a1^4"));
    }

    #[test]
    fn parse_errors_report_offsets() {
        match "a1 b2".parse::<Word>() {
            Err(Error::Syntax { offset, .. }) => assert_eq!(offset, 3),
            other => panic!("{other:?}"),
        }
        match "a1 a2^x".parse::<Word>() {
            Err(Error::Syntax { offset, .. }) => assert_eq!(offset, 6),
            other => panic!("{other:?}"),
        }
        assert!("a1^".parse::<Word>().is_err());
        assert!("a1^-".parse::<Word>().is_err());
        assert!("a4".parse::<Word>().is_err());
        assert!("a1^99999999999999999999".parse::<Word>().is_err());
    }

    #[test]
    fn serialization() {
        assert_eq!(w("a1 a2^2 a1^-1").to_string(), "a1 a2^2 a1^-1");
        assert_eq!(Word::new().to_string(), "");
    }

    #[test]
    fn artin_conversion() {
        assert_eq!(w("a3").to_artin(), "s2 s1 s2^-1");
        assert_eq!(w("a1^2").to_artin(), "s1^2");
        assert_eq!(w("a3^-1 a1").to_artin(), "s2 s1^-1 s2^-1 s1");
    }

    #[test]
    fn free_group_operations() {
        assert_eq!(w("a1 a2^2").inverse(), w("a2^-2 a1^-1"));
        assert!(w("a1^2").concat(&w("a1^-2")).is_empty());
        assert_eq!(w("d^-2 a1^2 a2^2").exponent_sum(), 0);
        assert_eq!(w("a1^3 a2 a3^-2").letter_slice(2, 5), w("a1 a2 a3^-1"));
    }

    #[test]
    fn permutations() {
        assert_eq!(w("a1^2").permutation(), Permutation::identity());
        assert_eq!(w("a1^2").closure_components(), 3);
        assert_eq!(w("d^3").permutation(), Permutation::identity());
        assert_eq!(w("d").closure_components(), 1);
        assert_eq!(w("a1^-1 a2 a1^-1 a2").closure_components(), 1);
        assert_eq!(w("a1").closure_components(), 2);
        // a1 acts first: 1 -> 2, then a2 sends 2 -> 3
        assert_eq!(w("a1 a2").permutation().apply(1), 3);
    }
}
