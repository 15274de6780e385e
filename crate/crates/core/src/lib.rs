//! Exact calculus for the 3-strand braid group `B_3` in the band-generator
//! (dual) presentation
//!
//! ```text
//! B_3 = < a1, a2, a3 | a2 a1 = a3 a2 = a1 a3 >,   a1 = s1, a2 = s2, a3 = s2 s1 s2^-1
//! ```
//!
//! with generator indices taken modulo 3. On top of the Garside normal form
//! `d^u P` (`d = a2 a1`, `P` a nondecreasing positive word) the crate builds
//! summit sets and a conjugacy test, class-minimal words and the genus of
//! 3-braid knots, constructive unknotting sequences certifying `u(K) <= g(K)`,
//! strict-inequality witnesses and the classification of 3-braid knots whose
//! unknotting number can equal their genus.
//!
//! ```
//! use braid3::{NormalForm, Word};
//!
//! let w: Word = "s1^-1 s2 s1^-1 s2".parse().unwrap();
//! let nf = NormalForm::from_word(&w);
//! assert_eq!(nf.to_string(), "d^-2 | a1^2 a2^2");
//! assert_eq!(braid3::knot::genus(&nf).unwrap(), 1);
//! ```

pub mod cli;
pub mod conjugacy;
pub mod corpus;
pub mod error;
pub mod garside;
pub mod knot;
pub mod oracle;
pub mod unknotting;
pub mod word;

pub use conjugacy::{are_conjugate, summit_set, to_summit0, ConjugationStep, StepKind, SummitData};
pub use error::{Error, Result};
pub use garside::{GarsideStats, NondecreasingWord, NormalForm};
pub use knot::{genus, is_knot, is_unknot, SqpStatus};
pub use unknotting::{classify, Classification, Label, Relation, Witness};
pub use word::{GenIndex, Permutation, Syllable, Word};
