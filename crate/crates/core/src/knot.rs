//! Knot invariants of closed 3-braids.
//!
//! A word in band generators spans a banded surface (three disks, one
//! half-twisted band per letter) with Euler characteristic `3 - |W|`. For a
//! word of minimal length in its conjugacy class whose closure is a knot this
//! surface has minimal genus, so `g = |W|/2 - 1`. Summit elements realize the
//! minimal word length, which makes the genus computable from the normal form.

use serde::Serialize;

use crate::conjugacy::{to_summit0, SummitData};
use crate::error::{Error, Result};
use crate::garside::{right_complement, NormalForm};
use crate::word::Word;

pub fn components(x: &NormalForm) -> u8 {
    x.permutation().cycle_count()
}

pub fn is_knot(x: &NormalForm) -> bool {
    components(x) == 1
}

fn require_knot(x: &NormalForm) -> Result<()> {
    match components(x) {
        1 => Ok(()),
        n => Err(Error::NotAKnot(n)),
    }
}

/// Shortest word length of `d^u P`, valid when `d^u P` is a summit element.
fn summit_word_length(x: &NormalForm) -> u64 {
    let u = x.inf();
    let p = x.len() as i64;
    (p + 2 * u.max(0) + 2 * (-u - p).max(0)) as u64
}

/// Minimal word length over the conjugacy class.
pub fn class_shortest_length(x: &NormalForm) -> u64 {
    summit_word_length(&to_summit0(x).representative)
}

/// A word of minimal length in the conjugacy class. It represents the summit
/// representative, which is conjugate to (not equal to) the input in general.
#[derive(Debug, Clone, Serialize)]
pub struct ShortestWord {
    pub word: Word,
    pub representative: NormalForm,
    /// `conjugator^-1 * input * conjugator == representative`.
    pub conjugator: NormalForm,
    pub class_minimal: bool,
}

/// Shortest word for a given normal form `d^u P`. This is the minimal length
/// word for the element itself; it is class-minimal when `x` is a summit
/// element.
pub fn shortest_word_for(x: &NormalForm) -> Word {
    let u = x.inf();
    let p = x.positive().to_word();
    let plen = x.len() as i64;
    if u >= 0 {
        Word::delta_power(u).concat(&p)
    } else if u > -plen {
        let split = (-u) as u64;
        let p1 = p.letter_slice(0, split);
        let p2 = p.letter_slice(split, plen as u64);
        let p1_star = right_complement(&p1).expect("prefix of a positive word");
        p1_star.inverse().concat(&p2)
    } else {
        let ell = -u - plen;
        let p_star = right_complement(&p).expect("positive word");
        Word::delta_power(-ell).concat(&p_star.inverse())
    }
}

pub fn shortest_word(x: &NormalForm) -> ShortestWord {
    let SummitData {
        representative,
        conjugator,
        ..
    } = to_summit0(x);
    ShortestWord {
        word: shortest_word_for(&representative),
        representative,
        conjugator,
        class_minimal: true,
    }
}

pub fn genus(x: &NormalForm) -> Result<u64> {
    require_knot(x)?;
    Ok(class_shortest_length(x) / 2 - 1)
}

pub fn is_unknot(x: &NormalForm) -> bool {
    is_knot(x) && class_shortest_length(x) == 2
}

/// Strong quasipositivity of the closure, read off the summit infimum of the
/// braid and of its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SqpStatus {
    Positive,
    Negative,
    Neither,
    TrivialBoth,
}

pub fn sqp_status(x: &NormalForm) -> SqpStatus {
    let inf_s = to_summit0(x).representative.inf();
    let sup_s = -to_summit0(&x.inverse()).representative.inf();
    match (inf_s >= 0, sup_s <= 0) {
        (true, true) => SqpStatus::TrivialBoth,
        (true, false) => SqpStatus::Positive,
        (false, true) => SqpStatus::Negative,
        (false, false) => SqpStatus::Neither,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BandedSurfaceStats {
    pub euler_characteristic: i64,
    pub genus_if_knot: Option<u64>,
}

pub fn banded_surface(w: &Word) -> BandedSurfaceStats {
    let len = w.word_length();
    BandedSurfaceStats {
        euler_characteristic: 3 - len as i64,
        genus_if_knot: (w.closure_components() == 1).then(|| len / 2 - 1),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct InvariantReport {
    pub components: u8,
    pub is_knot: bool,
    pub inf_s: i64,
    pub sup_s: i64,
    pub len_min: u64,
    pub shortest_length: u64,
    pub genus: Option<u64>,
    pub sqp_status: SqpStatus,
}

pub fn invariants(x: &NormalForm) -> InvariantReport {
    let rep = to_summit0(x).representative;
    let shortest = summit_word_length(&rep);
    let knot = is_knot(x);
    InvariantReport {
        components: components(x),
        is_knot: knot,
        inf_s: rep.inf(),
        sup_s: rep.sup(),
        len_min: rep.len(),
        shortest_length: shortest,
        genus: knot.then(|| shortest / 2 - 1),
        sqp_status: sqp_status(x),
    }
}
