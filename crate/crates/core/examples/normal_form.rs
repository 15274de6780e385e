// Parse braid words, compute Garside normal forms and their invariants.

use braid3::garside::rewrite::normalize_with;
use braid3::{NormalForm, Word};

fn main() {
    for text in ["s1^-1 s2 s1^-1 s2", "a1^3 a2", "a3^-1 a1", "d^-4 a1^6", "a1^1000000000 a3^1000000000"] {
        let w: Word = text.parse().expect("valid word");
        let nf = NormalForm::from_word(&w);
        let s = nf.stats();
        println!("{text:>30}  ->  {nf}");
        println!(
            "{:>30}      inf={} sup={} len={} syl={} esyl={}",
            "", s.inf, s.sup, s.canonical_length, s.syl_length, s.ext_syl_length
        );
    }

    let x: NormalForm = "d^-2 | a1^2 a2^2".parse().unwrap();
    println!("inverse of {x} is {}", x.inverse());
    assert!(x.multiply(&x.inverse()).is_identity());

    // the rewriting rules reach the same form in any order
    let w: Word = "a2^-2 a1 a3^-1 a2 a1^2".parse().unwrap();
    let (rightmost, steps) = normalize_with(&w, |r| r.len() - 1);
    assert_eq!(rightmost, NormalForm::from_word(&w));
    println!("{w} rewrites to {rightmost} in {steps} steps");
}
