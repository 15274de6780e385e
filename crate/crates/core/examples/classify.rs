// Classification of 3-braid knots by whether unknotting number equals genus.

use braid3::garside::normalize;
use braid3::classify;

fn main() {
    for text in [
        "a1^-1 a2 a1^-1 a2",
        "a1^5 a2",
        "a1^-5 a2^-1",
        "a1^3 a2^-3",
        "a1^3 a2^3",
        "d^-4 a1^6",
        "a3^-1 a2^2 a3^2 a1",
        "a1^3 a2^-1 a3^2 a1^-2",
    ] {
        let x = normalize(&text.parse().unwrap());
        let c = classify(&x).unwrap();
        println!("{text:>24}  {c}");
    }
}
