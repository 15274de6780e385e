// Brute-force references: Burau matrices and bounded breadth-first searches.

use braid3::garside::normalize;
use braid3::oracle::{brute_conjugate, brute_max_inf, brute_shortest, burau, burau_equal, Ball};
use braid3::Word;

fn main() {
    let w: Word = "a2 a1".parse().unwrap();
    println!("burau(a2 a1) = {:?}", burau(&w).0);
    println!("a2 a1 == a3 a2: {}", burau_equal(&w, &"a3 a2".parse().unwrap()));

    for r in [2, 4, 6] {
        println!("ball of radius {r}: {} elements", Ball::new(r).unwrap().len());
    }

    let fig8 = normalize(&"a1^-1 a2 a1^-1 a2".parse().unwrap());
    println!("figure-eight shortest: {:?}", brute_shortest(&fig8, 6).unwrap());
    println!("figure-eight max inf: {}", brute_max_inf(&fig8, 6).unwrap());
    let c = brute_conjugate(&fig8, &fig8.inverse(), 6).unwrap().unwrap();
    println!("figure-eight is conjugate to its inverse by {c}");
}
