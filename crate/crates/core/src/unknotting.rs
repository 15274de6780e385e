//! Unknotting certificates for 3-braid knots.
//!
//! * [`waa_form`]: every nontrivial 3-braid knot has a class-minimal word
//!   `W a1^{+-2}`. Deleting the square is one crossing change and leaves a knot
//!   of smaller genus, so iterating ([`unknotting_sequence`]) unknots in at
//!   most `g` crossing changes.
//! * [`lemma_b_witness`]: a class-minimal word `a1 a2^{+-2k} a1^-1 W` proves
//!   `u < g`, because deleting `a2^{+-2k}` (k crossing changes) leaves `W`.
//! * [`classify`]: walks the case analysis that either produces such a
//!   witness or lands on one of the exceptional families (strongly
//!   quasipositive, figure-eight, 2-braid knots, connected sums of two 2-braid
//!   knots).

use std::collections::BTreeSet;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::conjugacy::{are_conjugate, is_summit0, summit_set_from, to_summit0};
use crate::error::{Error, Result};
use crate::garside::{right_complement, NormalForm};
use crate::knot::{self, class_shortest_length, genus, is_unknot, shortest_word, SqpStatus};
use crate::word::{GenIndex, Word};

fn require_knot(x: &NormalForm) -> Result<()> {
    match knot::components(x) {
        1 => Ok(()),
        n => Err(Error::NotAKnot(n)),
    }
}

fn letters_of(x: &NormalForm) -> Vec<GenIndex> {
    x.positive().letters().collect()
}

fn word_of_letters(letters: &[GenIndex]) -> Word {
    let mut w = Word::new();
    for &i in letters {
        w.push(i, 1);
    }
    w
}

fn nf(w: &Word) -> NormalForm {
    NormalForm::from_word(w)
}

/// A summit-set element of the class ending in `a1^{k}`, `k >= 2` even.
#[derive(Debug, Clone)]
pub struct A1Form {
    pub form: NormalForm,
    /// `conjugator^-1 * input * conjugator == form`.
    pub conjugator: NormalForm,
}

/// Conjugates a knot braid to `d^u P a1^2` with `P a1^2` nondecreasing and
/// `u = inf_s`.
pub fn corollary_a1_form(x: &NormalForm) -> Result<A1Form> {
    require_knot(x)?;
    let data = to_summit0(x);
    let rep = data.representative;
    let r = rep.syl();
    if r == 0 {
        return Err(Error::SylZero);
    }
    let exps = rep.positive().exponents();
    let j = exps
        .iter()
        .rposition(|k| k % 2 == 0)
        .ok_or_else(|| Error::Internal(format!("no even syllable in {rep}")))?;
    let mut conjugator = data.conjugator;
    let mut form = rep.clone();
    if j + 1 < r {
        // d^u P1 P2 -> d^u P2 tau^-u(P1), conjugating by tau^-u(P1)
        let head: u64 = exps[..=j].iter().sum();
        let p1 = nf(&rep.positive().to_word().letter_slice(0, head)).tau(-rep.inf());
        form = form.conjugate_by(&p1);
        conjugator = conjugator.multiply(&p1);
    }
    let last = form.positive().last_index().expect("syl >= 1");
    let t = last.offset_to(GenIndex::A1) as i64;
    if t != 0 {
        form = form.tau(t);
        conjugator = conjugator.multiply(&NormalForm::delta_power(t));
    }
    let exps = form.positive().exponents();
    if form.syl() != r || *exps.last().unwrap() < 2 || form.positive().last_index() != Some(GenIndex::A1) {
        return Err(Error::Internal(format!("unexpected a1 form {form}")));
    }
    Ok(A1Form { form, conjugator })
}

/// A class-minimal word `W a1^{2 sign}` conjugate to the input.
#[derive(Debug, Clone, Serialize)]
pub struct WaaForm {
    pub w: Word,
    pub sign: i8,
    pub full_word: Word,
}

impl WaaForm {
    fn new(w: Word, sign: i8) -> Self {
        let full_word = w.concat(&Word::letter(GenIndex::A1, 2 * sign as i64));
        WaaForm { w, sign, full_word }
    }

    fn mirrored(self) -> Self {
        WaaForm::new(self.w.inverse(), -self.sign)
    }
}

/// Summit with `len != 0` and `sup >= 2`.
fn waa_positive_case(x: &NormalForm) -> Result<WaaForm> {
    let a1 = corollary_a1_form(x)?;
    let u = a1.form.inf();
    let pw = a1.form.positive().to_word();
    let plen = pw.word_length();
    let p = pw.letter_slice(0, plen - 2);
    let w = if u >= 0 {
        Word::delta_power(u).concat(&p)
    } else {
        let split = (-u) as u64;
        let p1 = p.letter_slice(0, split);
        let p2 = p.letter_slice(split, plen - 2);
        right_complement(&p1)?.inverse().concat(&p2)
    };
    Ok(WaaForm::new(w, 1))
}

pub fn waa_form(x: &NormalForm) -> Result<WaaForm> {
    require_knot(x)?;
    if is_unknot(x) {
        return Err(Error::IsUnknot);
    }
    let rep = to_summit0(x).representative;
    let u = rep.inf();
    if rep.len() == 0 {
        return match u {
            u if u >= 2 => {
                let w = Word::delta_power(u - 2).concat(&Word::from_pairs([(1, 1), (2, 1)]));
                Ok(WaaForm::new(w, 1))
            }
            u if u <= -2 => Ok(waa_form(&rep.inverse())?.mirrored()),
            _ => Err(Error::IsUnknot),
        };
    }
    if rep.sup() >= 2 {
        waa_positive_case(&rep)
    } else if u <= -2 {
        Ok(waa_positive_case(&rep.inverse())?.mirrored())
    } else {
        // len = 2, sup = 1, inf = -1: conjugate to d^-1 a1^2, the unknot
        Err(Error::IsUnknot)
    }
}

/// Deleting the factor `a1^{+-2}` at letter offset `position` of `before`
/// gives `after`.
#[derive(Debug, Clone, Serialize)]
pub struct CrossingChange {
    pub before: Word,
    pub position: u64,
    pub after: Word,
}

#[derive(Debug, Clone, Serialize)]
pub struct UnknottingSequence {
    pub steps: Vec<CrossingChange>,
    pub final_word: Word,
}

impl UnknottingSequence {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

pub fn unknotting_sequence(x: &NormalForm) -> Result<UnknottingSequence> {
    require_knot(x)?;
    let mut steps = Vec::new();
    let mut current = x.clone();
    let mut final_word = shortest_word(x).word;
    while !is_unknot(&current) {
        let waa = waa_form(&current)?;
        current = nf(&waa.w);
        final_word = waa.w.clone();
        steps.push(CrossingChange {
            position: waa.w.word_length(),
            before: waa.full_word,
            after: waa.w,
        });
    }
    Ok(UnknottingSequence { steps, final_word })
}

/// A class-minimal word `a1 a2^{2k sign} a1^-1 W` for the input class.
#[derive(Debug, Clone, Serialize)]
pub struct Witness {
    pub k: u64,
    pub sign: i8,
    pub tail: Word,
    pub full_word: Word,
    /// Upper bound on the unknotting number: `k` crossing changes reach the
    /// closure of `tail`, plus an unknotting sequence for that knot.
    pub u_bound: u64,
    /// The summit element whose normal form exhibits the pattern.
    pub pattern_host: NormalForm,
}

impl Witness {
    fn new(k: u64, sign: i8, tail: Word, pattern_host: NormalForm) -> Result<Self> {
        let full_word = Word::from_pairs([(1, 1), (2, 2 * k as i64 * sign as i64), (1, -1)]).concat(&tail);
        let tail_steps = unknotting_sequence(&nf(&tail))?.len() as u64;
        Ok(Witness {
            k,
            sign,
            tail,
            full_word,
            u_bound: k + tail_steps,
            pattern_host,
        })
    }

    /// Checks conjugacy to `x`, class-minimal length and `u_bound < genus`.
    pub fn verify(&self, x: &NormalForm) -> Result<()> {
        let target = nf(&self.full_word);
        if are_conjugate(x, &target)?.is_none() {
            return Err(Error::Internal(format!("witness {} is not conjugate to {x}", self.full_word)));
        }
        let shortest = class_shortest_length(x);
        if self.full_word.word_length() != shortest {
            return Err(Error::Internal(format!(
                "witness length {} differs from class minimum {shortest}",
                self.full_word.word_length()
            )));
        }
        let g = genus(x)?;
        if self.u_bound >= g {
            return Err(Error::Internal(format!("u bound {} not below genus {g}", self.u_bound)));
        }
        Ok(())
    }
}

/// Pattern `a1 a2^{2k} a3` starting at letter `m - 1` of a summit element
/// `d^-m P`, with `m <= |P| - (2k + 1)`. Returns `(k, P1, P2)`.
fn find_direct_pattern(y: &NormalForm) -> Option<(u64, Vec<GenIndex>, Vec<GenIndex>)> {
    let m = -y.inf();
    let letters = letters_of(y);
    let n = letters.len() as i64;
    if m < 1 || m > n - 1 {
        return None;
    }
    let at = (m - 1) as usize;
    if letters.get(at) != Some(&GenIndex::A1) {
        return None;
    }
    let run = letters[at + 1..]
        .iter()
        .take_while(|&&i| i == GenIndex::A2)
        .count();
    if run == 0 || run % 2 != 0 || letters.get(at + 1 + run) != Some(&GenIndex::A3) {
        return None;
    }
    let k = (run / 2) as u64;
    if m > n - (2 * k as i64 + 1) {
        return None;
    }
    Some((k, letters[..at].to_vec(), letters[at + run + 2..].to_vec()))
}

/// Every direct witness found in the summit set of `x`.
fn direct_witnesses(x: &NormalForm) -> Result<Vec<Witness>> {
    let rep = to_summit0(x).representative;
    let set = summit_set_from(&rep)?;
    let mut out = Vec::new();
    for y in &set.elements {
        let Some((k, p1, p2)) = find_direct_pattern(y) else {
            continue;
        };
        // a1 a2^2k a3 P2 d^-m P1 = a1 a2^2k a1^-1 tau^-1(P2) (P1*)^-1
        let p1_star = right_complement(&word_of_letters(&p1))?;
        let tail = word_of_letters(&p2).tau(-1).concat(&p1_star.inverse());
        out.push(Witness::new(k, 1, tail, y.clone())?);
    }
    Ok(out)
}

/// Searches the summit sets of `x` and of `x^-1` for a strictness witness
/// and returns the one with the smallest unknotting bound.
pub fn lemma_b_witness(x: &NormalForm) -> Result<Witness> {
    require_knot(x)?;
    if knot::sqp_status(x) != SqpStatus::Neither {
        return Err(Error::PreconditionFailed(
            "the knot or its mirror is strongly quasipositive".into(),
        ));
    }
    let rep = to_summit0(x).representative;
    let m = -rep.inf();
    if m < 1 || m > rep.len() as i64 - 1 {
        return Err(Error::PreconditionFailed(format!("summit form {rep} has m outside 1..|P|-1")));
    }
    let mut candidates = direct_witnesses(x)?;
    for w in direct_witnesses(&x.inverse())? {
        // x^-1 ~ a1 a2^2k a1^-1 W  =>  x ~ a1 a2^-2k a1^-1 W^-1
        candidates.push(Witness::new(w.k, -1, w.tail.inverse(), w.pattern_host)?);
    }
    candidates
        .into_iter()
        .enumerate()
        .min_by_key(|(n, w)| (w.u_bound, w.k, -w.sign, *n))
        .map(|(_, w)| w)
        .ok_or(Error::NoPattern)
}

/// `d^u a1^{2k} Q1 a_{i+1} ... a_{i+2p-2} Q2`, a summit element of minimal
/// syllable length conjugate to the input.
#[derive(Debug, Clone, Serialize)]
pub struct GeneralForm {
    pub u: i64,
    pub k: u64,
    pub i: u8,
    pub p: u64,
    pub q1: Word,
    pub q2: Word,
    /// `conjugator^-1 * input * conjugator == reassemble()`.
    pub conjugator: NormalForm,
}

impl GeneralForm {
    pub fn index(&self) -> GenIndex {
        GenIndex::new(self.i as i64)
    }

    /// `a_{i+1} a_{i+2} ... a_{i+2p-2}`.
    pub fn middle(&self) -> Word {
        let i = self.index();
        let mut w = Word::new();
        for j in 1..=(2 * self.p - 2) {
            w.push(i.shift(j as i64), 1);
        }
        w
    }

    pub fn positive_word(&self) -> Word {
        let mut w = Word::letter(GenIndex::A1, 2 * self.k as i64);
        w.extend(&self.q1);
        w.extend(&self.middle());
        w.extend(&self.q2);
        w
    }

    pub fn reassemble(&self) -> NormalForm {
        nf(&Word::delta_power(self.u).concat(&self.positive_word()))
    }

    /// `|Q| = |Q1| + (2p - 2) + |Q2|`.
    pub fn q_len(&self) -> u64 {
        self.q1.word_length() + 2 * self.p - 2 + self.q2.word_length()
    }

    /// Side conditions (i)-(iv) of the decomposition.
    pub fn check_conditions(&self) -> Result<()> {
        let fail = |what: &str| Err(Error::Internal(format!("general form {what}: {self:?}")));
        let beta = self.reassemble();
        if beta.inf() != self.u || beta.positive().to_word() != self.positive_word() {
            return fail("is not in normal form");
        }
        if is_summit0(&beta) != Ok(true) {
            return fail("is not a minimal-syllable summit element");
        }
        if self.k == 0 || self.p == 0 {
            return fail("has k or p zero");
        }
        for q in [&self.q1, &self.q2] {
            if !q.is_empty() && crate::garside::NondecreasingWord::from_word(q).is_err() {
                return fail("has a non-monotone Q");
            }
        }
        let i = self.index();
        if let (Some(first), Some(last)) = (self.q1.syllables().first(), self.q1.syllables().last()) {
            if first.index != GenIndex::A2 || last.index != i || last.exponent < 2 {
                return fail("violates the Q1 shape");
            }
        } else if i != GenIndex::A1 {
            return fail("has empty Q1 but i != 1");
        }
        if let (Some(first), Some(last)) = (self.q2.syllables().first(), self.q2.syllables().last()) {
            let expected_first = i.shift(2 * self.p as i64 - 1);
            if first.index != expected_first || first.exponent < 2 || last.index != GenIndex::new(3 - self.u) {
                return fail("violates the Q2 shape");
            }
        }
        Ok(())
    }
}

fn positions_of_first_even(exps: &[u64]) -> Option<usize> {
    exps.iter().position(|k| k % 2 == 0)
}

/// Builds the decomposition for a knot whose mirror class has minimal
/// syllable length at least 3.
pub fn general_decomposition(x: &NormalForm) -> Result<GeneralForm> {
    require_knot(x)?;
    let internal = |what: String| Error::Internal(format!("general decomposition of {x}: {what}"));

    // x^-1 into minimal syllable form d^v Q
    let data = to_summit0(&x.inverse());
    let mut gamma = data.representative;
    let mut conj = data.conjugator;
    let r = gamma.syl();
    if r < 3 {
        return Err(Error::PreconditionFailed(format!(
            "mirror class has syllable length {r} < 3"
        )));
    }

    // rotate an even syllable into position 1 so that a_{j-1} a_j^{2p} a_{j+1} < Q
    let j = positions_of_first_even(gamma.positive().exponents())
        .ok_or_else(|| internal("no even syllable".into()))?;
    let shift = (j + r - 1) % r;
    if shift > 0 {
        let head: u64 = gamma.positive().exponents()[..shift].iter().sum();
        let p1 = nf(&gamma.positive().to_word().letter_slice(0, head)).tau(-gamma.inf());
        gamma = gamma.conjugate_by(&p1);
        conj = conj.multiply(&p1);
    }
    let exps = gamma.positive().exponents().to_vec();
    if exps.len() != r || !exps[1].is_multiple_of(2) {
        return Err(internal(format!("rotation gave {gamma}")));
    }
    let k0 = exps[0];
    let p = exps[1] / 2;
    let n = gamma.len();

    // x' = gamma^-1 = d^u tau^u(Q*); the pattern image sits at letters a..a+2p+2
    let alpha = gamma.inverse();
    let u = alpha.inf();
    let letters = letters_of(&alpha);
    let a = (n - k0 - 2 * p - 1) as usize;
    let window = &letters[a..a + 2 * p as usize + 2];
    let i0 = window[0];
    let expected: Vec<GenIndex> = std::iter::once(i0)
        .chain((0..2 * p as i64).map(|t| i0.shift(t)))
        .chain(std::iter::once(i0.shift(2 * p as i64 - 1)))
        .collect();
    if window != expected.as_slice() {
        return Err(internal(format!("complement window mismatch in {alpha}")));
    }

    // move a_{i+2p-1}^2 P2 to the front: beta = T x' T^-1
    let cut = a + 2 * p as usize;
    let tail = word_of_letters(&letters[cut..]);
    let t_inv = nf(&tail.inverse());
    let beta = alpha.conjugate_by(&t_inv);
    conj = conj.multiply(&t_inv);
    let s_part = tail.tau(u).concat(&word_of_letters(&letters[..a + 2]));
    let m_part = word_of_letters(&letters[a + 2..cut]);
    if beta.inf() != u || beta.positive().to_word() != s_part.concat(&m_part) {
        return Err(internal(format!("positive conjugate {beta} has the wrong shape")));
    }

    // rotate an even syllable of the S part to the front, then tau it to a1
    let s_syl = s_part.syllables().to_vec();
    let q = s_syl
        .iter()
        .position(|s| s.exponent % 2 == 0)
        .ok_or_else(|| internal(format!("no even syllable in {s_part}")))?;
    let before = Word::from_syllables(s_syl[..q].iter().copied());
    let mut form = beta;
    if q > 0 {
        let c = nf(&before).tau(-u);
        form = form.conjugate_by(&c);
        conj = conj.multiply(&c);
    }
    let t = s_syl[q].index.offset_to(GenIndex::A1) as i64;
    if t != 0 {
        form = form.tau(t);
        conj = conj.multiply(&NormalForm::delta_power(t));
    }

    let q1 = Word::from_syllables(s_syl[q + 1..].iter().copied()).tau(t);
    let q2 = before.tau(t - u);
    let i = q1.syllables().last().map_or(GenIndex::A1, |s| s.index);
    let gf = GeneralForm {
        u,
        k: s_syl[q].exponent as u64 / 2,
        i: i.get(),
        p,
        q1,
        q2,
        conjugator: conj,
    };
    if gf.reassemble() != form || x.conjugate_by(&gf.conjugator) != form {
        return Err(internal(format!("reassembly mismatch: {form}")));
    }
    gf.check_conditions()?;
    Ok(gf)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Label {
    #[serde(rename = "SQP")]
    Sqp,
    #[serde(rename = "MirrorSQP")]
    MirrorSqp,
    FigureEight,
    TwoBraid,
    ConnectedSumTwoBraids,
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Label::Sqp => "SQP",
            Label::MirrorSqp => "MirrorSQP",
            Label::FigureEight => "FigureEight",
            Label::TwoBraid => "TwoBraid",
            Label::ConnectedSumTwoBraids => "ConnectedSumTwoBraids",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Relation {
    /// `u(K) = g(K)` is known.
    #[serde(rename = "EQUAL")]
    Equal,
    /// `u(K) < g(K)`, certified by a witness.
    #[serde(rename = "STRICT")]
    Strict,
    /// Connected sum `s1^p s2^q` with `p, q` of opposite signs: undecided.
    #[serde(rename = "OPEN")]
    Open,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Equal => "EQUAL",
            Relation::Strict => "STRICT",
            Relation::Open => "OPEN",
        })
    }
}

/// The branch of the case analysis that decided the classification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ProofCase {
    PositiveSummit,
    NegativeSummit,
    OneSyllableTwoBraid,
    OneSyllableStrict,
    TwoSyllableFigureEight,
    TwoSyllableStrict,
    SmallInfimumStrict,
    LongQStrict,
    ShortQStrict,
    LongQjStrict,
    EmptyQjStrict,
    ConnectedSum,
}

impl ProofCase {
    pub fn is_strict(self) -> bool {
        matches!(
            self,
            ProofCase::OneSyllableStrict
                | ProofCase::TwoSyllableStrict
                | ProofCase::SmallInfimumStrict
                | ProofCase::LongQStrict
                | ProofCase::ShortQStrict
                | ProofCase::LongQjStrict
                | ProofCase::EmptyQjStrict
        )
    }
}

#[derive(Debug, Clone)]
pub struct Classification {
    pub labels: BTreeSet<Label>,
    pub relation: Relation,
    pub witness: Option<Witness>,
    pub canonical_rep: Word,
    pub genus: u64,
    pub case: ProofCase,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassificationRecord {
    pub labels: String,
    pub relation: Relation,
    pub genus: u64,
    pub u_bound: Option<u64>,
    pub witness: Option<Word>,
    pub canonical_rep: Word,
    pub case: ProofCase,
}

impl Classification {
    pub fn labels_string(&self) -> String {
        self.labels
            .iter()
            .map(|l| l.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn record(&self) -> ClassificationRecord {
        ClassificationRecord {
            labels: self.labels_string(),
            relation: self.relation,
            genus: self.genus,
            u_bound: self.witness.as_ref().map(|w| w.u_bound),
            witness: self.witness.as_ref().map(|w| w.full_word.clone()),
            canonical_rep: self.canonical_rep.clone(),
            case: self.case,
        }
    }
}

impl Serialize for Classification {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.record().serialize(serializer)
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "labels={} relation={} rep=`{}` genus={}",
            self.labels_string(),
            self.relation,
            self.canonical_rep,
            self.genus
        )?;
        if let Some(w) = &self.witness {
            write!(f, " witness=`{}` u<={}", w.full_word, w.u_bound)?;
        }
        Ok(())
    }
}

/// Cases decided by the minimal-syllable summit form alone: `syl <= 2` or
/// `inf in {-1, -2}`. `None` means the general case.
fn small_cases(rep: &NormalForm) -> Option<ProofCase> {
    let u = rep.inf();
    let exps = rep.positive().exponents();
    if u >= 0 {
        return Some(ProofCase::PositiveSummit);
    }
    match exps.len() {
        0 => Some(ProofCase::NegativeSummit),
        1 => {
            let m = -u;
            if m == 1 {
                Some(ProofCase::OneSyllableTwoBraid)
            } else if m as u64 >= exps[0] {
                Some(ProofCase::NegativeSummit)
            } else {
                Some(ProofCase::OneSyllableStrict)
            }
        }
        2 => {
            if u == -2 && exps == [2, 2] {
                Some(ProofCase::TwoSyllableFigureEight)
            } else {
                Some(ProofCase::TwoSyllableStrict)
            }
        }
        _ if u >= -2 => Some(ProofCase::SmallInfimumStrict),
        _ => None,
    }
}

fn general_case(x: &NormalForm) -> Result<(ProofCase, Option<Word>)> {
    let gf = general_decomposition(x)?;
    let m = -gf.u;
    let q = gf.q_len() as i64;
    let (q1, q2) = (gf.q1.word_length(), gf.q2.word_length());
    let case = if m < q {
        ProofCase::LongQStrict
    } else if q1 == 2 || q2 == 2 {
        ProofCase::ShortQStrict
    } else if q1 >= 3 || q2 >= 3 {
        ProofCase::LongQjStrict
    } else if m >= q + 3 {
        ProofCase::EmptyQjStrict
    } else {
        // d^-m a1^2k a2 ... a_{2p-1} with m = 2p - 1 ~ a1^{2k-1} a2^{-(2p-1)}
        if m != 2 * gf.p as i64 - 1 || q1 != 0 || q2 != 0 {
            return Err(Error::Internal(format!("connected-sum branch reached with {gf:?}")));
        }
        let rep = Word::from_pairs([(1, 2 * gf.k as i64 - 1), (2, -(2 * gf.p as i64 - 1))]);
        return Ok((ProofCase::ConnectedSum, Some(rep)));
    };
    Ok((case, None))
}

fn proof_case(x: &NormalForm) -> Result<(ProofCase, Option<Word>)> {
    match knot::sqp_status(x) {
        SqpStatus::Positive | SqpStatus::TrivialBoth => return Ok((ProofCase::PositiveSummit, None)),
        SqpStatus::Negative => return Ok((ProofCase::NegativeSummit, None)),
        SqpStatus::Neither => {}
    }
    if let Some(case) = small_cases(&to_summit0(x).representative) {
        return Ok((case, None));
    }
    // the mirror has the same unknotting number and genus
    if let Some(case) = small_cases(&to_summit0(&x.inverse()).representative) {
        return Ok((case, None));
    }
    general_case(x)
}

/// Exceptional families detected by conjugacy to their standard braids.
/// Returns each label with the representative word that certified it.
fn detect_families(x: &NormalForm, g: u64) -> Result<Vec<(Label, Word)>> {
    let mut out = Vec::new();
    match knot::sqp_status(x) {
        SqpStatus::Positive | SqpStatus::TrivialBoth => {
            out.push((Label::Sqp, shortest_word(x).word));
        }
        SqpStatus::Negative => {
            out.push((Label::MirrorSqp, shortest_word(&x.inverse()).word.inverse()));
        }
        SqpStatus::Neither => {}
    }
    let e = x.exponent_sum();
    let g = g as i64;
    for eps in [1i64, -1] {
        let p = e - eps;
        if p.abs() == 2 * g + 1 {
            let w = Word::from_pairs([(1, p), (2, eps)]);
            if are_conjugate(x, &nf(&w))?.is_some() {
                out.push((Label::TwoBraid, w));
            }
        }
    }
    if g == 1 {
        let w = Word::from_pairs([(1, -1), (2, 1), (1, -1), (2, 1)]);
        if are_conjugate(x, &nf(&w))?.is_some() {
            out.push((Label::FigureEight, w));
        }
    }
    // s1^p s2^q, p and q odd with |p|, |q| >= 3: genus (|p| + |q|)/2 - 1
    let total = 2 * g + 2;
    for p in (-total..=total).filter(|p| p.rem_euclid(2) == 1 && p.abs() >= 3) {
        let q = e - p;
        if q.rem_euclid(2) == 1 && q.abs() >= 3 && p.abs() + q.abs() == total {
            let w = Word::from_pairs([(1, p), (2, q)]);
            if are_conjugate(x, &nf(&w))?.is_some() {
                out.push((Label::ConnectedSumTwoBraids, w));
                break;
            }
        }
    }
    Ok(out)
}

pub fn classify(x: &NormalForm) -> Result<Classification> {
    require_knot(x)?;
    let g = genus(x)?;
    let (case, leaf_rep) = proof_case(x)?;
    let families = detect_families(x, g)?;
    let labels: BTreeSet<Label> = families.iter().map(|(l, _)| *l).collect();
    let inconsistent = |what: &str| {
        Err(Error::Internal(format!("{x}: case {case:?} {what}, families {labels:?}")))
    };

    if case.is_strict() {
        if !labels.is_empty() {
            return inconsistent("predicts u < g for an exceptional family");
        }
        let witness = match lemma_b_witness(x) {
            Ok(w) => w,
            Err(Error::NoPattern) => return inconsistent("found no witness"),
            Err(e) => return Err(e),
        };
        witness.verify(x)?;
        return Ok(Classification {
            labels,
            relation: Relation::Strict,
            canonical_rep: witness.full_word.clone(),
            witness: Some(witness),
            genus: g,
            case,
        });
    }

    let required = match case {
        ProofCase::PositiveSummit => Label::Sqp,
        ProofCase::NegativeSummit => Label::MirrorSqp,
        ProofCase::OneSyllableTwoBraid => Label::TwoBraid,
        ProofCase::TwoSyllableFigureEight => Label::FigureEight,
        _ => Label::ConnectedSumTwoBraids,
    };
    if !labels.contains(&required) {
        return inconsistent("is not confirmed by conjugacy");
    }
    let relation = if labels.contains(&Label::Sqp) || labels.contains(&Label::MirrorSqp) {
        Relation::Equal
    } else if case == ProofCase::ConnectedSum {
        Relation::Open
    } else {
        Relation::Equal
    };
    let priority = [
        Label::TwoBraid,
        Label::ConnectedSumTwoBraids,
        Label::FigureEight,
        Label::Sqp,
        Label::MirrorSqp,
    ];
    let canonical_rep = leaf_rep.unwrap_or_else(|| {
        priority
            .iter()
            .find_map(|l| families.iter().find(|(m, _)| m == l).map(|(_, w)| w.clone()))
            .expect("labels nonempty")
    });
    Ok(Classification {
        labels,
        relation,
        witness: None,
        canonical_rep,
        genus: g,
        case,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::garside::normalize;

    fn nf(text: &str) -> NormalForm {
        normalize(&text.parse().unwrap())
    }

    fn w(text: &str) -> Word {
        text.parse().unwrap()
    }

    fn fig8() -> NormalForm {
        nf("a1^-1 a2 a1^-1 a2")
    }

    fn alpha(k: i64) -> NormalForm {
        normalize(&Word::from_pairs([(k + 1, -(k - 1)), (k, 2), (k + 1, k), (k + 2, 1)]))
    }

    #[test]
    fn a1_forms() {
        let f = corollary_a1_form(&fig8()).unwrap();
        assert_eq!(f.form, nf("d^-2 a3^2 a1^2"));
        assert_eq!(fig8().conjugate_by(&f.conjugator), f.form);
        let f = corollary_a1_form(&alpha(1)).unwrap();
        assert_eq!(f.form, nf("a2 a3 a1^2"));
        let x = nf("d^-4 a1^6");
        assert_eq!(corollary_a1_form(&x).unwrap().form, x);
        assert!(matches!(corollary_a1_form(&nf("d^2")), Err(Error::SylZero)));
        assert!(matches!(corollary_a1_form(&nf("a1^2")), Err(Error::NotAKnot(3))));
    }

    #[test]
    fn waa_forms() {
        let f = waa_form(&nf("d^2")).unwrap();
        assert_eq!((f.w.clone(), f.full_word.clone()), (w("a1 a2"), w("a1 a2 a1^2")));
        let f = waa_form(&fig8()).unwrap();
        assert_eq!(f.full_word, w("a3^-1 a2^-1 a1^2"));
        let f = waa_form(&alpha(1)).unwrap();
        assert_eq!(f.full_word, w("a2 a3 a1^2"));
        let f = waa_form(&nf("d^-2")).unwrap();
        assert_eq!(f.sign, -1);
        assert!(are_conjugate(&nf("d^-2"), &normalize(&f.full_word)).unwrap().is_some());
        assert!(matches!(waa_form(&nf("a3^-1 a1")), Err(Error::IsUnknot)));
    }

    #[test]
    fn unknotting_sequences() {
        let s = unknotting_sequence(&fig8()).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s.steps[0].before, w("a3^-1 a2^-1 a1^2"));
        assert_eq!(s.final_word, w("a3^-1 a2^-1"));
        let s = unknotting_sequence(&nf("d^2")).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s.final_word, w("a1 a2"));
        for k in 1..=6 {
            assert!(unknotting_sequence(&alpha(k)).unwrap().len() as i64 <= k);
        }
    }

    #[test]
    fn general_decompositions() {
        let x = nf("d^-4 a1^6");
        let gf = general_decomposition(&x).unwrap();
        assert_eq!(gf.u, -4);
        gf.check_conditions().unwrap();
        assert!(matches!(general_decomposition(&fig8()), Err(Error::PreconditionFailed(_))));
        assert!(matches!(general_decomposition(&nf("d^2")), Err(Error::PreconditionFailed(_))));
    }

    #[test]
    fn witnesses() {
        let wit = lemma_b_witness(&alpha(2)).unwrap();
        assert_eq!((wit.k, wit.sign, wit.u_bound), (1, 1, 1));
        assert_eq!(wit.full_word, w("a1 a2^2 a1^-1 a2 a3"));
        wit.verify(&alpha(2)).unwrap();

        let x = nf("d^-4 a1^6");
        let wit = lemma_b_witness(&x).unwrap();
        assert!(wit.u_bound <= 1);
        wit.verify(&x).unwrap();

        assert!(matches!(lemma_b_witness(&fig8()), Err(Error::NoPattern)));
    }

    #[test]
    fn classifications() {
        let c = classify(&fig8()).unwrap();
        assert_eq!(c.labels, BTreeSet::from([Label::FigureEight]));
        assert_eq!(c.relation, Relation::Equal);

        let c = classify(&nf("a1^3 a2^-3")).unwrap();
        assert_eq!(c.labels, BTreeSet::from([Label::ConnectedSumTwoBraids]));
        assert_eq!(c.relation, Relation::Open);
        assert_eq!(c.canonical_rep, w("a1^3 a2^-3"));

        let c = classify(&nf("a1^5 a2")).unwrap();
        assert_eq!(c.labels, BTreeSet::from([Label::Sqp, Label::TwoBraid]));
        assert_eq!(c.relation, Relation::Equal);

        let c = classify(&nf("d^-4 a1^6")).unwrap();
        assert!(c.labels.is_empty());
        assert_eq!(c.relation, Relation::Strict);
        assert_eq!(c.genus, 2);
        assert_eq!(c.witness.unwrap().u_bound, 1);
    }
}
