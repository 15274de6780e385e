//! Brute-force references: exact reduced Burau matrices and breadth-first
//! searches over words of bounded length. Slow by design and independent of
//! the summit machinery except where noted.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::ops::{Add, Mul};

use crate::conjugacy::summit_set;
use crate::error::{Error, Result};
use crate::garside::NormalForm;
use crate::word::{GenIndex, Word};

pub const DEFAULT_NODE_LIMIT: usize = 4_000_000;
pub const MAX_DEPTH: usize = 8;

/// Integer Laurent polynomial in `t`, stored sparsely.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i32, i128>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn monomial(coefficient: i128, exponent: i32) -> Self {
        let mut p = LaurentPoly::zero();
        p.add_term(exponent, coefficient);
        p
    }

    pub fn constant(c: i128) -> Self {
        LaurentPoly::monomial(c, 0)
    }

    fn add_term(&mut self, exponent: i32, coefficient: i128) {
        if coefficient == 0 {
            return;
        }
        let c = self.terms.entry(exponent).or_insert(0);
        *c += coefficient;
        if *c == 0 {
            self.terms.remove(&exponent);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Some((c, k))` when the polynomial is `c t^k`.
    pub fn as_monomial(&self) -> Option<(i128, i32)> {
        match self.terms.iter().collect::<Vec<_>>().as_slice() {
            [(&k, &c)] => Some((c, k)),
            _ => None,
        }
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(&k, &c)| (k, -c)).collect(),
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&k, &c) in &other.terms {
            out.add_term(k, c);
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&a, &c) in &self.terms {
            for (&b, &d) in &other.terms {
                out.add_term(a + b, c * d);
            }
        }
        out
    }
}

/// 2x2 matrix over [`LaurentPoly`], row major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LaurentMatrix(pub [[LaurentPoly; 2]; 2]);

impl LaurentMatrix {
    pub fn identity() -> Self {
        LaurentMatrix([
            [LaurentPoly::constant(1), LaurentPoly::zero()],
            [LaurentPoly::zero(), LaurentPoly::constant(1)],
        ])
    }

    pub fn mul(&self, other: &LaurentMatrix) -> LaurentMatrix {
        let a = &self.0;
        let b = &other.0;
        let entry = |i: usize, j: usize| &(&a[i][0] * &b[0][j]) + &(&a[i][1] * &b[1][j]);
        LaurentMatrix([[entry(0, 0), entry(0, 1)], [entry(1, 0), entry(1, 1)]])
    }

    pub fn determinant(&self) -> LaurentPoly {
        let a = &self.0;
        &(&a[0][0] * &a[1][1]) + &(&a[0][1] * &a[1][0]).neg()
    }
}

fn m(e: [[(i128, i32); 2]; 2]) -> LaurentMatrix {
    LaurentMatrix(e.map(|row| row.map(|(c, k)| LaurentPoly::monomial(c, k))))
}

fn sigma(which: u8, sign: i64) -> LaurentMatrix {
    match (which, sign > 0) {
        (1, true) => m([[(-1, 1), (1, 0)], [(0, 0), (1, 0)]]),
        (1, false) => m([[(-1, -1), (1, -1)], [(0, 0), (1, 0)]]),
        (2, true) => m([[(1, 0), (0, 0)], [(1, 1), (-1, 1)]]),
        _ => m([[(1, 0), (0, 0)], [(1, 0), (-1, -1)]]),
    }
}

fn band_matrix(index: GenIndex, sign: i64) -> LaurentMatrix {
    match index.get() {
        1 => sigma(1, sign),
        2 => sigma(2, sign),
        // a3 = s2 s1 s2^-1
        _ => sigma(2, 1).mul(&sigma(1, sign)).mul(&sigma(2, -1)),
    }
}

/// Reduced Burau image of a band word.
pub fn burau(w: &Word) -> LaurentMatrix {
    w.letters()
        .fold(LaurentMatrix::identity(), |acc, (i, s)| acc.mul(&band_matrix(i, s)))
}

pub fn burau_equal(w1: &Word, w2: &Word) -> bool {
    burau(w1) == burau(w2)
}

/// All six letters `a_i^{+-1}`.
pub fn letters() -> [(GenIndex, i64); 6] {
    [
        (GenIndex::A1, 1),
        (GenIndex::A2, 1),
        (GenIndex::A3, 1),
        (GenIndex::A1, -1),
        (GenIndex::A2, -1),
        (GenIndex::A3, -1),
    ]
}

/// Every letter sequence of exactly the given length, in lexicographic
/// letter order. Sequences are stored as [`Word`]s, so `a_i a_i^-1` pairs
/// cancel and some entries are shorter than `len`.
pub fn words_of_length(len: usize) -> Vec<Word> {
    let mut out = vec![Word::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                letters().into_iter().map(move |(i, s)| {
                    let mut next = w.clone();
                    next.push(i, s);
                    next
                })
            })
            .collect();
    }
    out
}

/// Every band word of length at most `max_len`.
pub fn words_up_to(max_len: usize) -> Vec<Word> {
    (0..=max_len).flat_map(words_of_length).collect()
}

/// Group elements of word length at most `radius`, each with a geodesic word.
#[derive(Debug, Clone)]
pub struct Ball {
    pub radius: usize,
    /// Elements grouped by exact distance from the identity.
    pub layers: Vec<Vec<NormalForm>>,
    words: HashMap<NormalForm, Word>,
}

impl Ball {
    pub fn new(radius: usize) -> Result<Self> {
        Ball::with_limit(radius, DEFAULT_NODE_LIMIT)
    }

    pub fn with_limit(radius: usize, node_limit: usize) -> Result<Self> {
        let identity = NormalForm::identity();
        let mut words = HashMap::from([(identity.clone(), Word::new())]);
        let mut layers = vec![vec![identity]];
        for _ in 0..radius {
            let mut next = Vec::new();
            for x in layers.last().unwrap() {
                let base = words[x].clone();
                for (i, s) in letters() {
                    let mut y = x.clone();
                    y.mul_generator(i, s);
                    if words.contains_key(&y) {
                        continue;
                    }
                    if words.len() >= node_limit {
                        return Err(Error::BudgetExceeded(node_limit));
                    }
                    let mut w = base.clone();
                    w.push(i, s);
                    words.insert(y.clone(), w);
                    next.push(y);
                }
            }
            layers.push(next);
        }
        Ok(Ball { radius, layers, words })
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Word length of `x` if it is at most the radius.
    pub fn distance(&self, x: &NormalForm) -> Option<usize> {
        self.words.get(x).map(|w| w.word_length() as usize)
    }

    pub fn geodesic(&self, x: &NormalForm) -> Option<&Word> {
        self.words.get(x)
    }

    pub fn elements(&self) -> impl Iterator<Item = &NormalForm> {
        self.layers.iter().flatten()
    }
}

fn check_depth(depth: usize) -> Result<()> {
    if depth > MAX_DEPTH {
        return Err(Error::PreconditionFailed(format!("depth {depth} exceeds {MAX_DEPTH}")));
    }
    Ok(())
}

/// Shortest word length reaching the summit set of `x`, searching words of
/// length at most `max_len`.
pub fn brute_shortest(x: &NormalForm, max_len: usize) -> Result<Option<usize>> {
    check_depth(max_len)?;
    brute_shortest_in(&Ball::new(max_len)?, x)
}

/// [`brute_shortest`] against a precomputed ball.
pub fn brute_shortest_in(ball: &Ball, x: &NormalForm) -> Result<Option<usize>> {
    let targets: HashSet<NormalForm> = summit_set(x)?.into_iter().collect();
    Ok(ball
        .layers
        .iter()
        .position(|layer| layer.iter().any(|y| targets.contains(y))))
}

/// A conjugator word `c` of length at most `depth` with `c^-1 x c == y`.
pub fn brute_conjugate(x: &NormalForm, y: &NormalForm, depth: usize) -> Result<Option<Word>> {
    check_depth(depth)?;
    brute_conjugate_in(&Ball::new(depth)?, x, y)
}

pub fn brute_conjugate_in(ball: &Ball, x: &NormalForm, y: &NormalForm) -> Result<Option<Word>> {
    for c in ball.elements() {
        if x.conjugate_by(c) == *y {
            return Ok(ball.geodesic(c).cloned());
        }
    }
    Ok(None)
}

/// Extremes over the conjugates `c^-1 x c` with `c` in a ball.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConjugateExtremes {
    pub max_inf: i64,
    /// Minimal canonical length among conjugates with maximal `inf`.
    pub min_len_at_max_inf: u64,
    /// Minimal syllable length among conjugates with maximal `inf`.
    pub min_syl_at_max_inf: usize,
    pub conjugates_seen: usize,
}

pub fn brute_max_inf(x: &NormalForm, depth: usize) -> Result<i64> {
    Ok(brute_extremes(x, depth)?.max_inf)
}

pub fn brute_extremes(x: &NormalForm, depth: usize) -> Result<ConjugateExtremes> {
    check_depth(depth)?;
    Ok(brute_extremes_in(&Ball::new(depth)?, x))
}

pub fn brute_extremes_in(ball: &Ball, x: &NormalForm) -> ConjugateExtremes {
    let conjugates: HashSet<NormalForm> = ball.elements().map(|c| x.conjugate_by(c)).collect();
    let max_inf = conjugates.iter().map(|y| y.inf()).max().expect("ball contains the identity");
    let top = || conjugates.iter().filter(|y| y.inf() == max_inf);
    ConjugateExtremes {
        max_inf,
        min_len_at_max_inf: top().map(|y| y.len()).min().unwrap(),
        min_syl_at_max_inf: top().map(|y| y.syl()).min().unwrap(),
        conjugates_seen: conjugates.len(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::garside::normalize;

    fn w(text: &str) -> Word {
        text.parse().unwrap()
    }

    fn nf(text: &str) -> NormalForm {
        normalize(&w(text))
    }

    #[test]
    fn burau_relations() {
        assert!(burau_equal(&w("a2 a1"), &w("a3 a2")));
        assert!(burau_equal(&w("a2 a1"), &w("a1 a3")));
        assert!(!burau_equal(&w("a1"), &w("a2")));
        assert!(burau_equal(&w("a1^-1 a2 a1^-1 a2"), &w("d^-2 a1^2 a2^2")));
        assert!(burau_equal(&w("s1 s2 s1"), &w("s2 s1 s2")));
        let det = burau(&w("a1 a3^-2 a2")).determinant();
        assert_eq!(det.as_monomial().map(|(c, _)| c.abs()), Some(1));
    }

    #[test]
    fn word_enumeration() {
        assert_eq!(words_of_length(3).len(), 216);
        assert_eq!(words_up_to(2).len(), 43);
    }

    #[test]
    fn shortest() {
        assert_eq!(brute_shortest(&nf("a1^-1 a2 a1^-1 a2"), 6), Ok(Some(4)));
        assert_eq!(brute_shortest(&nf("d"), 4), Ok(Some(2)));
        assert_eq!(brute_shortest(&nf("a1^3 a2"), 6), Ok(Some(4)));
        assert_eq!(brute_shortest(&nf("d^-3"), 4), Ok(None));
    }

    #[test]
    fn conjugators() {
        let c = brute_conjugate(&nf("a1"), &nf("a2"), 2).unwrap().unwrap();
        assert_eq!(nf("a1").conjugate_by(&normalize(&c)), nf("a2"));
        assert_eq!(brute_conjugate(&nf("a1"), &nf("a1^-1"), 4), Ok(None));
        let x = nf("a1^-1 a2 a1^-1 a2");
        let c = brute_conjugate(&x, &x.inverse(), 6).unwrap().unwrap();
        assert_eq!(x.conjugate_by(&normalize(&c)), x.inverse());
    }

    #[test]
    fn max_inf() {
        assert_eq!(brute_max_inf(&nf("a1^3 a2"), 4), Ok(2));
        assert_eq!(brute_max_inf(&nf("a1^-1 a2 a1^-1 a2"), 4), Ok(-2));
        assert_eq!(brute_max_inf(&nf("d^3"), 2), Ok(3));
        assert!(brute_max_inf(&nf("a1"), 9).is_err());
    }
}
