mod common;

use std::time::Instant;

use common::*;
use gdu_core::expr::parse;
use gdu_core::freealg::{complete, is_groebner, normal_words, CompletionStatus, FreePoly, RelationSet, Strategy as Reduction, WeightedOrder, Word};
use gdu_core::gdu::{preset, Preset, WeightScheme};
use gdu_core::Scalar;
use proptest::prelude::*;

fn sl2() -> gdu_core::gdu::GduAlgebra {
    preset(&Preset::Sl2, WeightScheme::AllOnes).unwrap()
}

#[test]
fn x3x1x2_matches_exhaustive_rewriting() {
    let alg = sl2();
    let p = parse("X3*X1*X2", alg.order()).unwrap();
    let reachable = all_rewrites(alg.order(), &alg.relations().polys(), &p);
    assert_eq!(reachable.len(), 1, "rewriting is not confluent");
    let nf = alg.normal_form(&p).unwrap();
    let expected: Vec<(Word, Scalar)> = nf.terms().map(|(w, c)| (w.clone(), c.clone())).collect();
    assert_eq!(reachable.into_iter().next().unwrap(), expected);
}

#[test]
fn sl2_relations_pass_linear_oracle() {
    let alg = sl2();
    let t = Instant::now();
    assert!(groebner_up_to(alg.order(), &alg.relations().polys(), 6));
    eprintln!("oracle D=6: {:?}", t.elapsed());
    assert!(is_groebner(alg.relations()).unwrap().holds);
}

#[test]
fn non_groebner_detected_by_both() {
    let order = WeightedOrder::new(&["X1", "X2"], &[1, 1], &[1, 0]).unwrap();
    let gens = vec![parse("X2*X1*X1 - X1", &order).unwrap(), parse("X1*X1*X2 - X2", &order).unwrap()];
    let rels = RelationSet::new(&gens, &order).unwrap();
    let cert = is_groebner(&rels).unwrap();
    assert!(!cert.holds);
    assert!(!groebner_up_to(&order, &gens, 5));
    let done = complete(&rels, 8).unwrap();
    assert_eq!(done.status, CompletionStatus::Complete);
    assert!(groebner_up_to(&order, &done.relations.polys(), 6));
}

#[test]
fn normal_words_match_enumeration() {
    let alg = sl2();
    let lms = alg.relations().leading_words();
    let words = normal_words(alg.relations(), 5);
    let brute: Vec<Word> = words_up_to(alg.order(), 5).into_iter().filter(|w| !contains_any(w, &lms)).collect();
    assert_eq!(words.len(), brute.len());
    for w in &words {
        assert!(!contains_any(w, &lms));
    }
}

fn order_strategy() -> impl Strategy<Value = Word> {
    proptest::collection::vec(0usize..3, 0..6).prop_map(|v| Word::from_letters(&v))
}

fn poly_strategy() -> impl Strategy<Value = FreePoly> {
    proptest::collection::vec((order_strategy(), -4i64..=4, 1i64..=3), 0..5)
        .prop_map(|terms| FreePoly::from_terms(terms.into_iter().map(|(w, n, d)| (w, Scalar::new(n, d)))))
}

fn weighted_order() -> WeightedOrder {
    WeightedOrder::new(&["X1", "X2", "X3"], &[1, 2, 2], &[1, 0, 2]).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 100, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn order_is_total_and_multiplicative(u in order_strategy(), v in order_strategy(), a in order_strategy(), b in order_strategy()) {
        for order in [sl2().order().clone(), weighted_order()] {
            let c = order.compare_words(&u, &v).unwrap();
            prop_assert_eq!(c == std::cmp::Ordering::Equal, u == v);
            prop_assert_eq!(order.compare_words(&v, &u).unwrap(), c.reverse());
            let (au, av) = (u.sandwich(&a, &b), v.sandwich(&a, &b));
            prop_assert_eq!(order.compare_words(&au, &av).unwrap(), c);
            // agrees with the oracle key
            prop_assert_eq!(key(&order, &u).cmp(&key(&order, &v)), c);
        }
    }

    #[test]
    fn normal_form_idempotent_and_linear(p in poly_strategy(), q in poly_strategy(), n in -3i64..=3) {
        let alg = sl2();
        let np = alg.normal_form(&p).unwrap();
        prop_assert_eq!(alg.normal_form(&np).unwrap(), np.clone());
        let nq = alg.normal_form(&q).unwrap();
        let s = Scalar::from_int(n);
        let combo = &p + &q.scale(&s);
        prop_assert_eq!(alg.normal_form(&combo).unwrap(), &np + &nq.scale(&s));
        for (w, _) in np.terms() {
            prop_assert!(alg.relations().is_normal_word(w));
        }
    }

    #[test]
    fn strategy_independent(p in poly_strategy()) {
        let alg = preset(&Preset::conformal(Scalar::new(3, 2)), WeightScheme::AllOnes).unwrap();
        let a = alg.relations().normal_form_with(&p, Reduction::LargestLeftmost).unwrap();
        let b = alg.relations().normal_form_with(&p, Reduction::Leftmost).unwrap();
        let c = alg.relations().normal_form_with(&p, Reduction::Rightmost).unwrap();
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(&a, &c);
    }
}
