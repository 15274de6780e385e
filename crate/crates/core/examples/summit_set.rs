// Summit moves, minimal-syllable representatives and whole summit sets.

use braid3::conjugacy::{is_summit, summit_set_from};
use braid3::garside::normalize;
use braid3::to_summit0;

fn main() {
    for text in ["a1^3 a2", "a1 a2 a3 a1 a2 a3 d^-2", "a1^-1 a2 a1^-1 a2", "a2 a1^-1 a3^2 a2^-1"] {
        let x = normalize(&text.parse().unwrap());
        let data = to_summit0(&x);
        println!("{x}  (summit: {})", is_summit(&x));
        for step in &data.trail {
            println!("    {:?} by {}", step.kind, step.by);
        }
        println!("    representative {}  conjugator {}", data.representative, data.conjugator);
        assert_eq!(x.conjugate_by(&data.conjugator), data.representative);

        let set = summit_set_from(&data.representative).unwrap();
        println!("    summit set has {} elements", set.len());
        for y in set.elements.iter().take(6) {
            println!("        {y}");
        }
    }
}
