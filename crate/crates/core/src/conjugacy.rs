//! Summit sets and conjugacy.
//!
//! For `x = d^u P` with `P = a_1^{k_1} ... a_r^{k_r}` (up to `tau`):
//!
//! * `x` is a summit element (maximal `inf` in its class) iff `len(x) <= 1` or
//!   `esyl(x) != 2 (mod 3)`;
//! * a summit `x` has minimal syllable length iff `syl(x) <= 1` or
//!   `esyl(x) == 0 (mod 3)`.
//!
//! [`inf_raise_move`] and [`syl_reduce_move`] are the positive conjugations
//! that repair each condition; [`to_summit0`] iterates them. The full summit
//! set is the closure of one summit element under conjugation by the simple
//! elements `a1, a2, a3, d`.

use std::collections::{HashMap, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::garside::{NondecreasingWord, NormalForm};
use crate::word::GenIndex;

/// Upper bound on the size of a computed summit set.
pub const SUMMIT_SET_CAP: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum StepKind {
    InfRaise,
    SylReduce,
    PositiveCycle,
    TauShift,
    SimpleElement,
}

/// One conjugation `x -> c^-1 x c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugationStep {
    pub by: NormalForm,
    pub kind: StepKind,
}

impl ConjugationStep {
    pub fn apply(&self, x: &NormalForm) -> NormalForm {
        x.conjugate_by(&self.by)
    }
}

/// A summit representative together with the conjugator reaching it:
/// `conjugator^-1 * original * conjugator == representative`.
#[derive(Debug, Clone)]
pub struct SummitData {
    pub representative: NormalForm,
    pub conjugator: NormalForm,
    pub trail: Vec<ConjugationStep>,
    pub summit_set: Option<Vec<NormalForm>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SummitRecord {
    pub representative: NormalForm,
    pub conjugator: NormalForm,
    pub trail_length: usize,
    pub summit_set_size: Option<usize>,
}

impl SummitData {
    pub fn record(&self) -> SummitRecord {
        SummitRecord {
            representative: self.representative.clone(),
            conjugator: self.conjugator.clone(),
            trail_length: self.trail.len(),
            summit_set_size: self.summit_set.as_ref().map(Vec::len),
        }
    }
}

pub fn is_summit(x: &NormalForm) -> bool {
    x.len() <= 1 || x.esyl().rem_euclid(3) != 2
}

/// Whether a summit element also has minimal syllable length in its class.
pub fn is_summit0(x: &NormalForm) -> Result<bool> {
    if !is_summit(x) {
        return Err(Error::NotSummit);
    }
    Ok(x.syl() <= 1 || x.esyl().rem_euclid(3) == 0)
}

/// Conjugates by the last letter of `P` when `len >= 2` and
/// `esyl == 2 (mod 3)`; the infimum goes up by exactly one.
pub fn inf_raise_move(x: &NormalForm) -> Result<(NormalForm, ConjugationStep)> {
    if x.len() < 2 || x.esyl().rem_euclid(3) != 2 {
        return Err(Error::MoveNotApplicable("inf raise needs len >= 2 and esyl = 2 mod 3"));
    }
    let p = x.positive();
    let last = p.last_index().expect("len >= 2");
    let u = x.inf();
    // d^u tau^u(a_last) P'
    let mut y = NormalForm::delta_power(u);
    y.mul_generator(last.shift(u), 1);
    let mut front = p.exponents().to_vec();
    *front.last_mut().unwrap() -= 1;
    for (j, &k) in front.iter().enumerate() {
        y.mul_generator(p.index_of(j), k as i64);
    }
    debug_assert_eq!(y.inf(), u + 1);
    let by = NormalForm::generator(last, -1);
    Ok((y, ConjugationStep { by, kind: StepKind::InfRaise }))
}

/// Folds the last syllable onto the front when `syl >= 2` and
/// `esyl == 1 (mod 3)`; the syllable length drops by exactly one.
pub fn syl_reduce_move(x: &NormalForm) -> Result<(NormalForm, ConjugationStep)> {
    if x.syl() < 2 || x.esyl().rem_euclid(3) != 1 {
        return Err(Error::MoveNotApplicable("syllable reduction needs syl >= 2 and esyl = 1 mod 3"));
    }
    let p = x.positive();
    let r = p.syl();
    let last_index = p.index_of(r - 1);
    let last_exp = p.exponents()[r - 1];
    let u = x.inf();
    let folded = last_index.shift(u);
    debug_assert_eq!(folded, p.start());
    let mut exps = p.exponents()[..r - 1].to_vec();
    exps[0] += last_exp;
    let y = NormalForm::new(u, NondecreasingWord::new(p.start(), exps)?);
    let by = NormalForm::generator(last_index, -(last_exp as i64));
    Ok((y, ConjugationStep { by, kind: StepKind::SylReduce }))
}

/// Reduces to an element of minimal syllable length in the summit set.
pub fn to_summit0(x: &NormalForm) -> SummitData {
    let mut rep = x.clone();
    let mut conjugator = NormalForm::identity();
    let mut trail = Vec::new();
    while let Ok((y, step)) = inf_raise_move(&rep) {
        conjugator = conjugator.multiply(&step.by);
        trail.push(step);
        rep = y;
    }
    while let Ok((y, step)) = syl_reduce_move(&rep) {
        conjugator = conjugator.multiply(&step.by);
        trail.push(step);
        rep = y;
    }
    debug_assert_eq!(is_summit0(&rep), Ok(true));
    SummitData {
        representative: rep,
        conjugator,
        trail,
        summit_set: None,
    }
}

/// The summit set as a list with, for each element `y`, a conjugator `d` such
/// that `d^-1 start d == y`, where `start` is the first element.
#[derive(Debug, Clone)]
pub struct SummitSet {
    pub elements: Vec<NormalForm>,
    pub conjugators: Vec<NormalForm>,
    index: HashMap<NormalForm, usize>,
}

impl SummitSet {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: &NormalForm) -> bool {
        self.index.contains_key(x)
    }

    /// Conjugator from the start element to `x`, if `x` is in the set.
    pub fn conjugator_to(&self, x: &NormalForm) -> Option<&NormalForm> {
        self.index.get(x).map(|&n| &self.conjugators[n])
    }
}

fn simple_elements() -> [NormalForm; 4] {
    [
        NormalForm::generator(GenIndex::A1, 1),
        NormalForm::generator(GenIndex::A2, 1),
        NormalForm::generator(GenIndex::A3, 1),
        NormalForm::delta_power(1),
    ]
}

/// Breadth-first closure of a summit element under conjugation by simple
/// elements, keeping only conjugates with the same `inf` and `len`.
pub fn summit_set_from(start: &NormalForm) -> Result<SummitSet> {
    if !is_summit(start) {
        return Err(Error::NotSummit);
    }
    let simples = simple_elements();
    let simple_inverses = simples.clone().map(|s| s.inverse());
    let inf = start.inf();
    let len = start.len();
    let mut set = SummitSet {
        elements: vec![start.clone()],
        conjugators: vec![NormalForm::identity()],
        index: HashMap::from([(start.clone(), 0)]),
    };
    let mut queue = VecDeque::from([0usize]);
    while let Some(n) = queue.pop_front() {
        for (s, s_inv) in simples.iter().zip(&simple_inverses) {
            let y = s_inv.multiply(&set.elements[n]).multiply(s);
            if y.inf() != inf || y.len() != len || set.index.contains_key(&y) {
                continue;
            }
            if set.elements.len() >= SUMMIT_SET_CAP {
                return Err(Error::SummitSetTooLarge(SUMMIT_SET_CAP));
            }
            let c = set.conjugators[n].multiply(s);
            set.index.insert(y.clone(), set.elements.len());
            set.elements.push(y);
            set.conjugators.push(c);
            queue.push_back(set.elements.len() - 1);
        }
    }
    Ok(set)
}

/// The summit set of the conjugacy class of `x`.
pub fn summit_set(x: &NormalForm) -> Result<Vec<NormalForm>> {
    let data = to_summit0(x);
    Ok(summit_set_from(&data.representative)?.elements)
}

/// [`to_summit0`] with the summit set filled in.
pub fn summit_data(x: &NormalForm) -> Result<SummitData> {
    let mut data = to_summit0(x);
    data.summit_set = Some(summit_set_from(&data.representative)?.elements);
    Ok(data)
}

/// `inf_s`: the maximal infimum in the conjugacy class.
pub fn summit_inf(x: &NormalForm) -> i64 {
    to_summit0(x).representative.inf()
}

/// `sup_s`: the minimal supremum in the conjugacy class.
pub fn summit_sup(x: &NormalForm) -> i64 {
    to_summit0(x).representative.sup()
}

/// Decides conjugacy; on success returns `c` with `c^-1 x c == y`.
pub fn are_conjugate(x: &NormalForm, y: &NormalForm) -> Result<Option<NormalForm>> {
    if x.exponent_sum() != y.exponent_sum()
        || x.permutation().cycle_count() != y.permutation().cycle_count()
    {
        return Ok(None);
    }
    let sx = to_summit0(x);
    let sy = to_summit0(y);
    let (rx, ry) = (&sx.representative, &sy.representative);
    if rx.inf() != ry.inf() || rx.len() != ry.len() || rx.syl() != ry.syl() {
        return Ok(None);
    }
    let set = summit_set_from(rx)?;
    let Some(d) = set.conjugator_to(ry) else {
        return Ok(None);
    };
    // rx = cx^-1 x cx, ry = d^-1 rx d, ry = cy^-1 y cy
    let c = sx.conjugator.multiply(d).multiply(&sy.conjugator.inverse());
    if x.conjugate_by(&c) != *y {
        return Err(Error::Internal(format!("conjugator {c} does not conjugate {x} to {y}")));
    }
    Ok(Some(c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::garside::normalize;

    fn nf(text: &str) -> NormalForm {
        normalize(&text.parse().unwrap())
    }

    fn fig8() -> NormalForm {
        nf("a1^-1 a2 a1^-1 a2")
    }

    #[test]
    fn summit_predicates() {
        for u in -4..5 {
            assert!(is_summit(&NormalForm::delta_power(u)));
        }
        assert!(!is_summit(&nf("a1^3 a2")));
        assert!(is_summit(&fig8()));
        assert_eq!(is_summit0(&nf("d a2")), Ok(true));
        assert_eq!(is_summit0(&fig8()), Ok(true));
        let x = nf("d^-2 a1 a2 a3 a1 a2 a3");
        assert!(is_summit(&x));
        assert_eq!(is_summit0(&x), Ok(false));
        assert_eq!(is_summit0(&nf("a1^3 a2")), Err(Error::NotSummit));
    }

    #[test]
    fn inf_raise_examples() {
        let (y, step) = inf_raise_move(&nf("a1^3 a2")).unwrap();
        assert_eq!(y, nf("d a1^2"));
        assert_eq!(step.apply(&nf("a1^3 a2")), y);
        let (z, _) = inf_raise_move(&y).unwrap();
        assert_eq!(z, NormalForm::delta_power(2));
        assert!(inf_raise_move(&fig8()).is_err());
    }

    #[test]
    fn syl_reduce_examples() {
        let x = nf("d^-2 a1 a2 a3 a1 a2 a3");
        let (y, step) = syl_reduce_move(&x).unwrap();
        assert_eq!(y, nf("d^-2 a1^2 a2 a3 a1 a2"));
        assert_eq!(step.apply(&x), y);
        let x = nf("d^-1 a1 a2");
        let (y, step) = syl_reduce_move(&x).unwrap();
        assert_eq!(y, nf("d^-1 a1^2"));
        assert_eq!(step.apply(&x), y);
        assert!(syl_reduce_move(&fig8()).is_err());
    }

    #[test]
    fn to_summit0_examples() {
        let x = nf("a1^3 a2");
        let data = to_summit0(&x);
        assert_eq!(data.representative, NormalForm::delta_power(2));
        assert_eq!(data.trail.len(), 2);
        assert_eq!(x.conjugate_by(&data.conjugator), data.representative);
        assert_eq!(data.conjugator, nf("a2^-1 a1^-1"));

        let data = to_summit0(&fig8());
        assert_eq!(data.representative, fig8());
        assert!(data.trail.is_empty());

        assert_eq!(to_summit0(&nf("a1 a2 a1")).representative, nf("d a2"));
    }

    #[test]
    fn summit_set_examples() {
        assert_eq!(summit_set(&NormalForm::delta_power(2)).unwrap(), vec![NormalForm::delta_power(2)]);
        let set = summit_set(&fig8()).unwrap();
        for x in [fig8(), fig8().tau(1), fig8().tau(2)] {
            assert!(set.contains(&x));
        }
        let mut set = summit_set(&nf("a1")).unwrap();
        set.sort();
        assert_eq!(set, vec![nf("a1"), nf("a2"), nf("a3")]);
    }

    #[test]
    fn conjugacy_examples() {
        let c = are_conjugate(&nf("a1"), &nf("a2")).unwrap().unwrap();
        assert_eq!(nf("a1").conjugate_by(&c), nf("a2"));
        assert_eq!(are_conjugate(&nf("a1"), &nf("a1^-1")).unwrap(), None);
        let c = are_conjugate(&fig8(), &fig8().inverse()).unwrap().unwrap();
        assert_eq!(fig8().conjugate_by(&c), fig8().inverse());
        assert!(are_conjugate(&nf("a1^3 a2"), &nf("a1 a2^3")).unwrap().is_some());
        assert_eq!(are_conjugate(&nf("a1^3 a2^-1"), &nf("a1 a2^1")).unwrap(), None);
    }
}
