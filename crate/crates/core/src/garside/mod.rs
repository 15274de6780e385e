//! Garside normal form `d^u P` of 3-braids.
//!
//! Every element of `B_3` is uniquely `d^u P` with `d = a2 a1` and `P` a
//! nondecreasing positive word: consecutive syllable indices increase by one
//! modulo 3. Since the indices of `P` are determined by the index of its first
//! syllable, [`NondecreasingWord`] stores only that start index and the list
//! of exponents. The rotation `tau` is then a shift of the start index.
//!
//! Normal forms are built by right multiplication, one syllable at a time,
//! using `a_i^-1 = d^-1 a_{i+1}`, `a_{i+1} a_i = d` and `a_i d = d a_{i+1}`.
//! The module [`rewrite`] implements the same rules as a plain term
//! rewriting system with a pluggable redex choice.

pub mod rewrite;

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::word::{GenIndex, Permutation, Word};

/// A positive word `a_s^{k_1} a_{s+1}^{k_2} ... a_{s+r-1}^{k_r}`.
///
/// The start index of the empty word is pinned to `1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NondecreasingWord {
    start: GenIndex,
    exponents: Vec<u64>,
}

impl Default for NondecreasingWord {
    fn default() -> Self {
        NondecreasingWord {
            start: GenIndex::A1,
            exponents: Vec::new(),
        }
    }
}

impl NondecreasingWord {
    pub fn new(start: GenIndex, exponents: Vec<u64>) -> Result<Self> {
        if exponents.contains(&0) {
            return Err(Error::NotPositive("zero exponent".into()));
        }
        let mut p = NondecreasingWord { start, exponents };
        p.fix_empty();
        Ok(p)
    }

    /// Accepts a word that is already positive and nondecreasing.
    pub fn from_word(w: &Word) -> Result<Self> {
        if !w.is_positive() {
            return Err(Error::NotPositive(w.to_string()));
        }
        let syl = w.syllables();
        for pair in syl.windows(2) {
            if pair[0].index.shift(1) != pair[1].index {
                return Err(Error::PreconditionFailed(format!(
                    "word `{w}` is not nondecreasing"
                )));
            }
        }
        let start = syl.first().map_or(GenIndex::A1, |s| s.index);
        NondecreasingWord::new(start, syl.iter().map(|s| s.exponent as u64).collect())
    }

    pub fn start(&self) -> GenIndex {
        self.start
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    pub fn is_empty(&self) -> bool {
        self.exponents.is_empty()
    }

    /// `|P|`.
    pub fn len(&self) -> u64 {
        self.exponents.iter().sum()
    }

    /// `syl(P)`.
    pub fn syl(&self) -> usize {
        self.exponents.len()
    }

    /// Index of syllable `j` (0-based).
    pub fn index_of(&self, j: usize) -> GenIndex {
        self.start.shift(j as i64)
    }

    pub fn last_index(&self) -> Option<GenIndex> {
        self.exponents
            .len()
            .checked_sub(1)
            .map(|j| self.index_of(j))
    }

    pub fn tau(&self, t: i64) -> NondecreasingWord {
        let mut p = self.clone();
        p.tau_in_place(t);
        p
    }

    fn tau_in_place(&mut self, t: i64) {
        if !self.exponents.is_empty() {
            self.start = self.start.shift(t);
        }
    }

    fn fix_empty(&mut self) {
        if self.exponents.is_empty() {
            self.start = GenIndex::A1;
        }
    }

    /// Removes the last letter.
    fn pop_letter(&mut self) {
        if let Some(last) = self.exponents.last_mut() {
            *last -= 1;
            if *last == 0 {
                self.exponents.pop();
                self.fix_empty();
            }
        }
    }

    pub fn to_word(&self) -> Word {
        Word::from_syllables(
            self.exponents
                .iter()
                .enumerate()
                .map(|(j, &k)| crate::word::Syllable::new(self.index_of(j), k as i64)),
        )
    }

    /// Letter indices one by one.
    pub fn letters(&self) -> impl Iterator<Item = GenIndex> + '_ {
        self.exponents
            .iter()
            .enumerate()
            .flat_map(move |(j, &k)| std::iter::repeat_n(self.index_of(j), k as usize))
    }

    /// The right complement `P*`, again nondecreasing with `|P*| = |P|`.
    pub fn right_complement(&self) -> NondecreasingWord {
        let w = right_complement(&self.to_word()).expect("nondecreasing word is positive");
        NondecreasingWord::from_word(&w).expect("complement of a nondecreasing word is nondecreasing")
    }
}

impl fmt::Display for NondecreasingWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_word().fmt(f)
    }
}

/// Right complement `P* = P^-1 d^|P|` of a positive word, letter by letter:
/// `(a_{i_1} ... a_{i_r})* = a_{i_r + 2} a_{i_{r-1} + 3} ... a_{i_1 + r + 1}`.
pub fn right_complement(p: &Word) -> Result<Word> {
    if !p.is_positive() {
        return Err(Error::NotPositive(p.to_string()));
    }
    let mut out = Word::new();
    for (j, (index, _)) in p.letters().rev().enumerate() {
        out.push(index.shift(j as i64 + 2), 1);
    }
    Ok(out)
}

/// Garside normal form `d^inf P`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NormalForm {
    delta: i64,
    positive: NondecreasingWord,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GarsideStats {
    pub inf: i64,
    pub sup: i64,
    pub canonical_length: u64,
    pub syl_length: usize,
    pub ext_syl_length: i64,
}

impl NormalForm {
    pub fn identity() -> Self {
        NormalForm::default()
    }

    pub fn new(delta: i64, positive: NondecreasingWord) -> Self {
        NormalForm { delta, positive }
    }

    pub fn delta_power(power: i64) -> Self {
        NormalForm::new(power, NondecreasingWord::default())
    }

    /// Normal form of a single letter power `a_index^exponent`.
    pub fn generator(index: GenIndex, exponent: i64) -> Self {
        let mut nf = NormalForm::identity();
        nf.mul_generator(index, exponent);
        nf
    }

    pub fn from_word(w: &Word) -> Self {
        let mut nf = NormalForm::identity();
        for s in w.syllables() {
            nf.mul_generator(s.index, s.exponent);
        }
        nf
    }

    /// The exponent `u` of `d`.
    pub fn delta_exponent(&self) -> i64 {
        self.delta
    }

    pub fn positive(&self) -> &NondecreasingWord {
        &self.positive
    }

    pub fn is_identity(&self) -> bool {
        self.delta == 0 && self.positive.is_empty()
    }

    pub fn inf(&self) -> i64 {
        self.delta
    }

    pub fn sup(&self) -> i64 {
        self.delta + self.positive.len() as i64
    }

    /// Canonical length `|P|`.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> u64 {
        self.positive.len()
    }

    pub fn syl(&self) -> usize {
        self.positive.syl()
    }

    pub fn esyl(&self) -> i64 {
        self.delta + self.positive.syl() as i64
    }

    pub fn stats(&self) -> GarsideStats {
        GarsideStats {
            inf: self.inf(),
            sup: self.sup(),
            canonical_length: self.len(),
            syl_length: self.syl(),
            ext_syl_length: self.esyl(),
        }
    }

    /// `d^u` expanded as `(a2 a1)^u`, followed by `P`.
    pub fn to_word(&self) -> Word {
        let mut w = Word::delta_power(self.delta);
        w.extend(&self.positive.to_word());
        w
    }

    pub fn exponent_sum(&self) -> i64 {
        2 * self.delta + self.positive.len() as i64
    }

    pub fn permutation(&self) -> Permutation {
        let delta = Word::delta_power(self.delta.rem_euclid(3)).permutation();
        let odd = self
            .positive
            .exponents
            .iter()
            .enumerate()
            .filter(|(_, &k)| k % 2 == 1);
        odd.fold(delta, |p, (j, _)| {
            p.then(&Permutation::of_generator(self.positive.index_of(j)))
        })
    }

    /// `tau^t(x) = d^-t x d^t`.
    pub fn tau(&self, t: i64) -> NormalForm {
        NormalForm::new(self.delta, self.positive.tau(t))
    }

    /// Right multiplication by `a_index^exponent`.
    pub fn mul_generator(&mut self, index: GenIndex, exponent: i64) {
        if exponent > 0 {
            self.mul_positive(index, exponent as u64);
        } else {
            for _ in 0..exponent.unsigned_abs() {
                // P a_j^-1 = P d^-1 a_{j+1} = d^-1 tau^-1(P) a_{j+1}
                self.delta -= 1;
                self.positive.tau_in_place(-1);
                self.mul_positive(index.shift(1), 1);
            }
        }
    }

    fn mul_positive(&mut self, index: GenIndex, mut k: u64) {
        while k > 0 {
            let Some(last) = self.positive.last_index() else {
                self.positive.start = index;
                self.positive.exponents.push(k);
                return;
            };
            match last.offset_to(index) {
                0 => {
                    *self.positive.exponents.last_mut().unwrap() += k;
                    return;
                }
                1 => {
                    self.positive.exponents.push(k);
                    return;
                }
                _ => {
                    // P' a_l a_{l-1} = P' d = d tau(P')
                    self.positive.pop_letter();
                    self.positive.tau_in_place(1);
                    self.delta += 1;
                    k -= 1;
                }
            }
        }
    }

    /// Right multiplication by `d^t`.
    pub fn mul_delta(&mut self, t: i64) {
        self.delta += t;
        self.positive.tau_in_place(t);
    }

    pub fn multiply(&self, other: &NormalForm) -> NormalForm {
        let mut out = self.clone();
        out.mul_delta(other.delta);
        for (j, &k) in other.positive.exponents.iter().enumerate() {
            out.mul_positive(other.positive.index_of(j), k);
        }
        out
    }

    /// Closed form `x^-1 = d^-sup tau^-sup(P*)`.
    pub fn inverse(&self) -> NormalForm {
        let sup = self.sup();
        NormalForm::new(-sup, self.positive.right_complement().tau(-sup))
    }

    /// `c^-1 x c`.
    pub fn conjugate_by(&self, c: &NormalForm) -> NormalForm {
        c.inverse().multiply(self).multiply(c)
    }

    /// `x^n` for any integer `n`.
    pub fn pow(&self, n: i64) -> NormalForm {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        (0..n.unsigned_abs()).fold(NormalForm::identity(), |acc, _| acc.multiply(&base))
    }
}

/// `normalize`: the unique normal form of the element a word represents.
pub fn normalize(w: &Word) -> NormalForm {
    NormalForm::from_word(w)
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "d^{} |", self.delta)?;
        if !self.positive.is_empty() {
            write!(f, " {}", self.positive)?;
        }
        Ok(())
    }
}

impl Serialize for NormalForm {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl FromStr for NormalForm {
    type Err = Error;

    /// Reads the `d^<u> | <P-word>` serialization back.
    fn from_str(text: &str) -> Result<Self> {
        let syntax = |offset: usize, message: &str| Error::Syntax {
            offset,
            message: message.to_string(),
        };
        let (head, tail) = text
            .split_once('|')
            .ok_or_else(|| syntax(0, "expected `d^<u> | <word>`"))?;
        let lead = head.len() - head.trim_start().len();
        let delta = head
            .trim()
            .strip_prefix("d^")
            .and_then(|e| e.parse::<i64>().ok())
            .ok_or_else(|| syntax(lead, "expected `d^<int>`"))?;
        let p = crate::word::parse(tail).map_err(|e| match e {
            Error::Syntax { offset, message } => Error::Syntax {
                offset: offset + head.len() + 1,
                message,
            },
            other => other,
        })?;
        Ok(NormalForm::new(delta, NondecreasingWord::from_word(&p)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nf(text: &str) -> NormalForm {
        normalize(&text.parse().unwrap())
    }

    fn nd(start: i64, exps: &[u64]) -> NondecreasingWord {
        NondecreasingWord::new(GenIndex::new(start), exps.to_vec()).unwrap()
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(nf("a2 a1"), NormalForm::delta_power(1));
        assert_eq!(nf("a1^-1"), NormalForm::new(-1, nd(2, &[1])));
        assert_eq!(nf("a1^-1 a2 a1^-1 a2"), NormalForm::new(-2, nd(1, &[2, 2])));
        assert_eq!(nf("a3^-1 a1"), NormalForm::new(-1, nd(1, &[2])));
        assert_eq!(nf("a3 a2"), nf("a1 a3"));
        assert_eq!(nf("a1 a2 a1"), NormalForm::new(1, nd(2, &[1])));
    }

    #[test]
    fn nf_to_word_round_trip() {
        for text in ["d", "a1^2 a2^2", "d^-2 a1^2 a2^2", "a3^-5 a2 a1^7", ""] {
            let x = nf(text);
            assert_eq!(normalize(&x.to_word()), x, "{text}");
        }
        assert_eq!(NormalForm::delta_power(1).to_word(), "a2 a1".parse().unwrap());
    }

    #[test]
    fn tau_examples() {
        assert_eq!(nf("a1").tau(1), nf("a2"));
        let x = nf("d^-2 a1^2 a2^2");
        assert_eq!(x.tau(3), x);
        assert_eq!(x.tau(2), NormalForm::new(-2, nd(3, &[2, 2])));
        assert_eq!(x.tau(2), x.conjugate_by(&NormalForm::delta_power(2)));
    }

    #[test]
    fn multiply_examples() {
        let d = NormalForm::delta_power(1);
        assert_eq!(d.multiply(&d), NormalForm::delta_power(2));
        assert!(nf("a1").multiply(&nf("a1^-1")).is_identity());
        assert_eq!(nf("a2").multiply(&nf("a1")), d);
    }

    #[test]
    fn right_complement_examples() {
        let rc = |t: &str| right_complement(&t.parse().unwrap()).unwrap();
        assert_eq!(rc("a1"), "a3".parse().unwrap());
        assert_eq!(rc("a1^3"), "a3 a1 a2".parse().unwrap());
        assert_eq!(
            rc("a1^3 a2 a3 a1^7"),
            "a3 a1 a2 a3 a1 a2 a3^4 a1 a2".parse().unwrap()
        );
        assert!(matches!(
            right_complement(&"a1 a2^-1".parse().unwrap()),
            Err(Error::NotPositive(_))
        ));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(NormalForm::delta_power(2).inverse(), NormalForm::delta_power(-2));
        assert_eq!(nf("a1").inverse(), NormalForm::new(-1, nd(2, &[1])));
        let x = NormalForm::new(-2, nd(1, &[2, 2]));
        assert_eq!(x.inverse(), NormalForm::new(-2, nd(2, &[1, 2, 1])));
        assert!(x.multiply(&x.inverse()).is_identity());
    }

    #[test]
    fn stats_examples() {
        let s = NormalForm::new(-2, nd(1, &[2, 2])).stats();
        assert_eq!((s.inf, s.sup, s.canonical_length, s.syl_length, s.ext_syl_length), (-2, 2, 4, 2, 0));
        let s = NormalForm::delta_power(5).stats();
        assert_eq!((s.inf, s.sup, s.canonical_length, s.syl_length, s.ext_syl_length), (5, 5, 0, 0, 5));
        let s = nf("a1 a2^2 a3 a1^3").stats();
        assert_eq!((s.inf, s.sup, s.canonical_length, s.syl_length, s.ext_syl_length), (0, 7, 7, 4, 4));
    }

    #[test]
    fn serialization() {
        assert_eq!(NormalForm::identity().to_string(), "d^0 |");
        assert_eq!(nf("s1^-1 s2 s1^-1 s2").to_string(), "d^-2 | a1^2 a2^2");
        assert_eq!("d^-2 | a1^2 a2^2".parse::<NormalForm>().unwrap(), nf("a1^-1 a2 a1^-1 a2"));
        assert_eq!("d^0 |".parse::<NormalForm>().unwrap(), NormalForm::identity());
        assert!("d^1 | a2 a1".parse::<NormalForm>().is_err());
        assert!("a1 a2".parse::<NormalForm>().is_err());
    }

    #[test]
    fn large_exponents_stay_syllabic() {
        let x = nf("a1^1000000000 a3^1000000000");
        assert_eq!(x, NormalForm::new(1, nd(2, &[999_999_999, 999_999_999])));
    }

    #[test]
    fn permutation_matches_word() {
        for text in ["d", "d^-4 a1^6", "a1^3 a2", "d^-2 a1 a2 a3 a1", "d^7 a2^3"] {
            let x = nf(text);
            assert_eq!(x.permutation(), x.to_word().permutation(), "{text}");
        }
    }
}
