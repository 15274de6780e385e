// Strict inequality certificates and the general decomposition behind them.

use braid3::garside::normalize;
use braid3::unknotting::{general_decomposition, lemma_b_witness};
use braid3::{genus, Word};

fn main() {
    let mut braids: Vec<Word> = (2..=6)
        .map(|k| Word::from_pairs([(k + 1, -(k - 1)), (k, 2), (k + 1, k), (k + 2, 1)]))
        .collect();
    braids.push("d^-4 a1^6".parse().unwrap());
    braids.push("a1^-1 a2 a1^-1 a2".parse().unwrap());

    for w in &braids {
        let x = normalize(w);
        match lemma_b_witness(&x) {
            Ok(wit) => {
                wit.verify(&x).unwrap();
                println!(
                    "{w}: genus {} but u <= {} via {}",
                    genus(&x).unwrap(),
                    wit.u_bound,
                    wit.full_word
                );
            }
            Err(e) => println!("{w}: {e}"),
        }
    }

    let x = normalize(&"d^-4 a1^6".parse().unwrap());
    let gf = general_decomposition(&x).unwrap();
    println!(
        "d^-4 a1^6 ~ d^{} a1^{} [{}] [{}] [{}]",
        gf.u,
        2 * gf.k,
        gf.q1,
        gf.middle(),
        gf.q2
    );
}
