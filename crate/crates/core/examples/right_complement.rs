// Right complements: `P P* = d^|P|` for positive words.

use braid3::garside::right_complement;
use braid3::{NormalForm, Word};

fn main() {
    for text in ["a1", "a1^3", "a1^3 a2 a3 a1^7", "a2 a3^2 a1"] {
        let p: Word = text.parse().unwrap();
        let star = right_complement(&p).unwrap();
        let product = NormalForm::from_word(&p.concat(&star));
        println!("({p})* = {star}    P P* = {product}");
        assert_eq!(product, NormalForm::delta_power(p.word_length() as i64));
    }

    let negative: Word = "a1 a2^-1".parse().unwrap();
    println!("{negative}: {}", right_complement(&negative).unwrap_err());
}
