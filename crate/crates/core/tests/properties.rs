use braid3::conjugacy::{is_summit, summit_set_from};
use braid3::garside::{normalize, right_complement};
use braid3::knot::{class_shortest_length, shortest_word};
use braid3::oracle::burau_equal;
use braid3::unknotting::unknotting_sequence;
use braid3::{are_conjugate, genus, is_knot, to_summit0, GenIndex, NormalForm, Word};
use proptest::prelude::*;

fn word(max_syllables: usize, max_exp: i64) -> impl Strategy<Value = Word> {
    prop::collection::vec((1i64..=3, -max_exp..=max_exp), 0..=max_syllables)
        .prop_map(Word::from_pairs)
}

fn positive_word(max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(1i64..=3, 0..=max_len).prop_map(|v| Word::from_pairs(v.into_iter().map(|i| (i, 1))))
}

fn knot_word() -> impl Strategy<Value = Word> {
    word(6, 4).prop_filter("closure is a knot", |w| w.closure_components() == 1)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn multiplication_matches_concatenation(a in word(6, 4), b in word(6, 4)) {
        prop_assert_eq!(normalize(&a).multiply(&normalize(&b)), normalize(&a.concat(&b)));
    }

    #[test]
    fn inverse_is_two_sided(a in word(8, 5)) {
        let x = normalize(&a);
        prop_assert!(x.multiply(&x.inverse()).is_identity());
        prop_assert!(x.inverse().multiply(&x).is_identity());
        prop_assert_eq!(x.inverse(), normalize(&a.inverse()));
    }

    #[test]
    fn normal_form_round_trips_through_text(a in word(8, 5)) {
        let x = normalize(&a);
        let back: NormalForm = x.to_string().parse().unwrap();
        prop_assert_eq!(&back, &x);
        let w: Word = a.to_string().parse().unwrap();
        prop_assert_eq!(w, a.clone());
        let artin: Word = a.to_artin().parse().unwrap();
        prop_assert_eq!(normalize(&artin), x);
    }

    #[test]
    fn complement_law(p in positive_word(12)) {
        let star = right_complement(&p).unwrap();
        prop_assert_eq!(star.word_length(), p.word_length());
        prop_assert_eq!(normalize(&p.concat(&star)), NormalForm::delta_power(p.word_length() as i64));
    }

    #[test]
    fn complement_of_product(p1 in positive_word(6), p2 in positive_word(6)) {
        // (P1 P2)* = P2* tau^|P2|(P1*)
        let lhs = right_complement(&p1.concat(&p2)).unwrap();
        let rhs = right_complement(&p2).unwrap().concat(&right_complement(&p1).unwrap().tau(p2.word_length() as i64));
        prop_assert_eq!(normalize(&lhs), normalize(&rhs));
    }

    #[test]
    fn tau_preserves_statistics(a in word(6, 4), t in -3i64..=3) {
        let x = normalize(&a);
        prop_assert_eq!(x.tau(t).stats(), x.stats());
        prop_assert_eq!(x.tau(t), x.conjugate_by(&NormalForm::delta_power(t)));
        prop_assert_eq!(x.tau(3), x);
    }

    #[test]
    fn burau_agrees_with_normal_form(a in word(4, 3), b in word(4, 3)) {
        prop_assert_eq!(burau_equal(&a, &b), normalize(&a) == normalize(&b));
        prop_assert!(burau_equal(&a, &normalize(&a).to_word()));
    }

    #[test]
    fn summit_representative_is_conjugate(a in word(6, 4)) {
        let x = normalize(&a);
        let data = to_summit0(&x);
        prop_assert!(is_summit(&data.representative));
        prop_assert_eq!(x.conjugate_by(&data.conjugator), data.representative.clone());
        let trail = data.trail.iter().fold(x.clone(), |y, step| step.apply(&y));
        prop_assert_eq!(trail, data.representative);
    }

    #[test]
    fn conjugacy_is_an_equivalence(a in word(5, 3), c in word(4, 3), d in word(4, 3)) {
        let x = normalize(&a);
        let y = x.conjugate_by(&normalize(&c));
        let z = y.conjugate_by(&normalize(&d));
        prop_assert!(are_conjugate(&x, &x).unwrap().is_some());
        let k = are_conjugate(&x, &y).unwrap().expect("conjugate by construction");
        prop_assert_eq!(x.conjugate_by(&k), y.clone());
        let back = are_conjugate(&y, &x).unwrap().expect("symmetric");
        prop_assert_eq!(y.conjugate_by(&back), x.clone());
        prop_assert!(are_conjugate(&x, &z).unwrap().is_some());
    }

    #[test]
    fn summit_sets_are_class_invariants(a in word(5, 3), c in word(4, 3)) {
        let x = normalize(&a);
        let y = x.conjugate_by(&normalize(&c));
        let sx = summit_set_from(&to_summit0(&x).representative).unwrap();
        let ry = to_summit0(&y).representative;
        prop_assert!(sx.contains(&ry));
        prop_assert_eq!(class_shortest_length(&x), class_shortest_length(&y));
        prop_assert!(class_shortest_length(&x) <= a.word_length());
    }

    #[test]
    fn shortest_word_is_in_the_class(a in word(6, 4)) {
        let x = normalize(&a);
        let s = shortest_word(&x);
        prop_assert_eq!(s.word.word_length(), class_shortest_length(&x));
        prop_assert!(are_conjugate(&x, &normalize(&s.word)).unwrap().is_some());
    }

    #[test]
    fn genus_bounds_unknotting_sequence(a in knot_word()) {
        let x = normalize(&a);
        prop_assert!(is_knot(&x));
        let g = genus(&x).unwrap();
        prop_assert!(2 * g + 2 <= a.word_length().max(2));
        prop_assert!(unknotting_sequence(&x).unwrap().len() as u64 <= g);
    }

    #[test]
    fn genus_is_invariant_under_mirror_and_tau(a in knot_word(), t in 0i64..3) {
        let x = normalize(&a);
        prop_assert_eq!(genus(&x), genus(&x.inverse()));
        prop_assert_eq!(genus(&x), genus(&x.tau(t)));
    }

    #[test]
    fn generator_multiplication(a in word(6, 4), i in 1i64..=3, e in -5i64..=5) {
        let mut x = normalize(&a);
        x.mul_generator(GenIndex::new(i), e);
        prop_assert_eq!(x, normalize(&a.concat(&Word::from_pairs([(i, e)]))));
    }
}
