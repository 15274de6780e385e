// Deciding conjugacy with an explicit conjugator.

use braid3::garside::normalize;
use braid3::{are_conjugate, NormalForm};

fn nf(text: &str) -> NormalForm {
    normalize(&text.parse().unwrap())
}

fn main() {
    let pairs = [
        ("a1", "a2"),
        ("a1", "a1^-1"),
        ("a1^-1 a2 a1^-1 a2", "a2^-1 a1 a2^-1 a1"),
        ("a1^3 a2", "d^2"),
        ("a1^3 a2^-3", "a1^-3 a2^3"),
        ("a1^2 a2 a3", "a1^3 a2"),
    ];
    for (x, y) in pairs {
        let (x, y) = (nf(x), nf(y));
        match are_conjugate(&x, &y).unwrap() {
            Some(c) => {
                assert_eq!(x.conjugate_by(&c), y);
                println!("{x}  ~  {y}    c = {c}");
            }
            None => println!("{x}  !~  {y}"),
        }
    }
}
