//! Bundled example knots with their expected classification.

use serde::Serialize;

use crate::error::Result;
use crate::garside::normalize;
use crate::unknotting::{classify, ClassificationRecord, Relation};
use crate::word::{parse, Word};

#[derive(Debug, Clone, Copy)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub word: &'static str,
    pub genus: u64,
    /// Comma-separated labels in sorted order.
    pub labels: &'static str,
    pub relation: Relation,
    /// Expected witness bound for strict entries.
    pub u_bound: Option<u64>,
}

const fn entry(
    name: &'static str,
    word: &'static str,
    genus: u64,
    labels: &'static str,
    relation: Relation,
    u_bound: Option<u64>,
) -> CorpusEntry {
    CorpusEntry { name, word, genus, labels, relation, u_bound }
}

use Relation::{Equal, Open, Strict};

pub const CORPUS: &[CorpusEntry] = &[
    entry("figure-eight", "s1^-1 s2 s1^-1 s2", 1, "FigureEight", Equal, None),
    entry("trefoil", "a1^3 a2", 1, "SQP,TwoBraid", Equal, None),
    entry("mirror-trefoil", "a1^-3 a2^-1", 1, "MirrorSQP,TwoBraid", Equal, None),
    entry("cinquefoil", "a1^5 a2", 2, "SQP,TwoBraid", Equal, None),
    entry("torus-2-7", "a1^7 a2", 3, "SQP,TwoBraid", Equal, None),
    entry("granny", "a1^3 a2^3", 2, "SQP,ConnectedSumTwoBraids", Equal, None),
    entry("square", "a1^3 a2^-3", 2, "ConnectedSumTwoBraids", Open, None),
    entry("s1^5 s2^-3", "a1^5 a2^-3", 3, "ConnectedSumTwoBraids", Open, None),
    entry("s1^3 s2^-5", "a1^3 a2^-5", 3, "ConnectedSumTwoBraids", Open, None),
    entry("alpha-1", "a2^0 a1^2 a2 a3", 1, "SQP", Equal, None),
    entry("alpha-2", "a3^-1 a2^2 a3^2 a1", 2, "", Strict, Some(1)),
    entry("alpha-3", "a1^-2 a3^2 a1^3 a2", 3, "", Strict, Some(1)),
    entry("alpha-4", "a2^-3 a1^2 a2^4 a3", 4, "", Strict, Some(1)),
    entry("alpha-5", "a3^-4 a2^2 a3^5 a1", 5, "", Strict, Some(1)),
    entry("alpha-6", "a1^-5 a3^2 a1^6 a2", 6, "", Strict, Some(1)),
    entry("d^-4 a1^6", "d^-4 a1^6", 2, "", Strict, Some(1)),
];

/// The outcome of classifying one corpus entry.
#[derive(Debug, Clone, Serialize)]
pub struct CorpusResult {
    pub name: &'static str,
    pub word: Word,
    pub record: ClassificationRecord,
    pub matches: bool,
}

impl CorpusEntry {
    pub fn parsed(&self) -> Word {
        parse(self.word).expect("corpus words parse")
    }

    pub fn evaluate(&self) -> Result<CorpusResult> {
        let word = self.parsed();
        let record = classify(&normalize(&word))?.record();
        let matches = record.genus == self.genus
            && record.labels == self.labels
            && record.relation == self.relation
            && record.u_bound == self.u_bound;
        Ok(CorpusResult {
            name: self.name,
            word,
            record,
            matches,
        })
    }
}

pub fn find(name: &str) -> Option<&'static CorpusEntry> {
    CORPUS.iter().find(|e| e.name == name)
}
