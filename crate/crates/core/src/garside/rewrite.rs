//! The four normalization rules as a term rewriting system.
//!
//! 1. `a_i^-1  -> d^-1 a_{i+1}`
//! 2. `a_{i+1} a_i -> d`
//! 3. `d^k d^l -> d^{k+l}` (and `d^0 -> empty`)
//! 4. `a_i d^k -> d^k a_{i+k}`
//!
//! Any order of rule application terminates in `d^u P` with `P`
//! nondecreasing. [`NormalForm::from_word`] is the fast path; this module
//! exists to exercise arbitrary rule orders against it.

use crate::garside::{NondecreasingWord, NormalForm};
use crate::word::{GenIndex, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Token {
    Letter(GenIndex, i8),
    Delta(i64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rule {
    InvertLetter,
    CreateDelta,
    MergeDelta,
    PushThroughDelta,
}

/// An applicable rule at a token position.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Redex {
    pub rule: Rule,
    pub position: usize,
}

#[derive(Debug, Clone)]
pub struct RewriteState {
    tokens: Vec<Token>,
}

impl RewriteState {
    pub fn new(w: &Word) -> Self {
        RewriteState {
            tokens: w
                .letters()
                .map(|(i, s)| Token::Letter(i, s as i8))
                .collect(),
        }
    }

    pub fn redexes(&self) -> Vec<Redex> {
        let mut out = Vec::new();
        for (n, t) in self.tokens.iter().enumerate() {
            match *t {
                Token::Letter(_, -1) => out.push(Redex { rule: Rule::InvertLetter, position: n }),
                Token::Delta(0) => out.push(Redex { rule: Rule::MergeDelta, position: n }),
                _ => {}
            }
            if let Some(next) = self.tokens.get(n + 1) {
                match (*t, *next) {
                    (Token::Letter(a, 1), Token::Letter(b, 1)) if a == b.shift(1) => {
                        out.push(Redex { rule: Rule::CreateDelta, position: n })
                    }
                    (Token::Delta(_), Token::Delta(_)) => {
                        out.push(Redex { rule: Rule::MergeDelta, position: n })
                    }
                    (Token::Letter(_, 1), Token::Delta(_)) => {
                        out.push(Redex { rule: Rule::PushThroughDelta, position: n })
                    }
                    _ => {}
                }
            }
        }
        out
    }

    pub fn apply(&mut self, r: Redex) {
        let n = r.position;
        match (r.rule, self.tokens[n]) {
            (Rule::InvertLetter, Token::Letter(i, -1)) => {
                self.tokens
                    .splice(n..=n, [Token::Delta(-1), Token::Letter(i.shift(1), 1)]);
            }
            (Rule::CreateDelta, _) => {
                self.tokens.splice(n..n + 2, [Token::Delta(1)]);
            }
            (Rule::MergeDelta, Token::Delta(0)) => {
                self.tokens.remove(n);
            }
            (Rule::MergeDelta, Token::Delta(k)) => match self.tokens[n + 1] {
                Token::Delta(l) => {
                    self.tokens.splice(n..n + 2, [Token::Delta(k + l)]);
                }
                _ => panic!("not a redex: {r:?}"),
            },
            (Rule::PushThroughDelta, Token::Letter(i, 1)) => match self.tokens[n + 1] {
                Token::Delta(k) => {
                    self.tokens
                        .splice(n..n + 2, [Token::Delta(k), Token::Letter(i.shift(k), 1)]);
                }
                _ => panic!("not a redex: {r:?}"),
            },
            _ => panic!("not a redex: {r:?}"),
        }
    }

    /// Reads off `d^u P` once no rule applies.
    pub fn terminal_form(&self) -> Option<NormalForm> {
        let mut rest = &self.tokens[..];
        let mut delta = 0;
        if let Some(Token::Delta(k)) = rest.first() {
            delta = *k;
            rest = &rest[1..];
        }
        let mut p = Word::new();
        for t in rest {
            match *t {
                Token::Letter(i, 1) => p.push(i, 1),
                _ => return None,
            }
        }
        let p = NondecreasingWord::from_word(&p).ok()?;
        Some(NormalForm::new(delta, p))
    }
}

/// Rewrites to termination, letting `choose` pick among the current redexes.
/// Returns the normal form and the number of rewriting steps.
pub fn normalize_with<F>(w: &Word, mut choose: F) -> (NormalForm, usize)
where
    F: FnMut(&[Redex]) -> usize,
{
    let mut state = RewriteState::new(w);
    let mut steps = 0;
    loop {
        let redexes = state.redexes();
        if redexes.is_empty() {
            let nf = state
                .terminal_form()
                .expect("irreducible token string is d^u P");
            return (nf, steps);
        }
        let pick = choose(&redexes);
        state.apply(redexes[pick]);
        steps += 1;
    }
}

/// Leftmost-redex strategy.
pub fn normalize_leftmost(w: &Word) -> NormalForm {
    normalize_with(w, |_| 0).0
}
