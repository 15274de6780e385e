// Unknotting sequences: repeated deletion of a trailing `a1^{+-2}`.

use braid3::garside::normalize;
use braid3::genus;
use braid3::unknotting::{unknotting_sequence, waa_form};

fn main() {
    for text in ["a1^-1 a2 a1^-1 a2", "d^2", "a1^7 a2", "a1^3 a2^-3", "d^-4 a1^6", "a1^3 a2^-1 a3^2 a1^-2"] {
        let x = normalize(&text.parse().unwrap());
        let g = genus(&x).unwrap();
        let waa = waa_form(&x).unwrap();
        let seq = unknotting_sequence(&x).unwrap();
        println!("{text}: genus {g}, W a1^(2*{}) = {}", waa.sign, waa.full_word);
        for step in &seq.steps {
            println!("    {}  ->  {}", step.before, step.after);
        }
        assert!(seq.len() as u64 <= g);
    }
}
