// Class-minimal words and the genus of 3-braid knots.

use braid3::garside::normalize;
use braid3::knot::{class_shortest_length, invariants, shortest_word};
use braid3::{genus, Word};

fn main() {
    let mut knots: Vec<(String, Word)> = vec![
        ("figure-eight".into(), "a1^-1 a2 a1^-1 a2".parse().unwrap()),
        ("trefoil".into(), "a1^3 a2".parse().unwrap()),
        ("unknot".into(), "d^-1 a1^2".parse().unwrap()),
        ("square knot".into(), "a1^3 a2^-3".parse().unwrap()),
    ];
    for k in 1..=6 {
        let w = Word::from_pairs([(k + 1, -(k - 1)), (k, 2), (k + 1, k), (k + 2, 1)]);
        knots.push((format!("alpha_{k}"), w));
    }
    for (name, w) in &knots {
        let x = normalize(w);
        let s = shortest_word(&x);
        println!(
            "{name:>12}: genus {}  shortest {} (length {})",
            genus(&x).unwrap(),
            s.word,
            class_shortest_length(&x)
        );
    }

    let report = invariants(&normalize(&"a1^5 a2^-3".parse().unwrap()));
    println!("{report:?}");

    let link = normalize(&"a1^2".parse().unwrap());
    println!("a1^2: {}", genus(&link).unwrap_err());
}
