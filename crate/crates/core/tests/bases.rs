mod common;

use std::collections::BTreeSet;

use common::{b4_literal, words, Reading, B2, B3};
use superq::centralizer::{enumerate_basis, enumerate_basis_with, span_rank, Centralizer, Exclusion};

#[test]
fn both_readings_of_b4_agree() {
    let a = b4_literal(Reading::Deglex);
    assert_eq!(a, b4_literal(Reading::ListPosition));
    assert_eq!(a.len(), 175);
}

#[test]
fn b2_and_b3_word_for_word() {
    let cz = Centralizer::new(5, 1, 2).unwrap();
    assert_eq!(enumerate_basis(&cz).unwrap().words, words(&B2));
    let cz = Centralizer::new(5, 1, 3).unwrap();
    assert_eq!(enumerate_basis(&cz).unwrap().words, words(&B3));
}

#[test]
fn b4_matches_the_literal_set() {
    let cz = Centralizer::new(5, 1, 4).unwrap();
    let b = cz.basis().unwrap();
    let ours: BTreeSet<Vec<u8>> = b.words.iter().map(|w| w.0.clone()).collect();
    assert_eq!(ours, b4_literal(Reading::Deglex));
}

#[test]
fn literal_b4_is_independent_at_d7() {
    let cz = Centralizer::new(7, 2, 4).unwrap();
    let lit: Vec<_> = b4_literal(Reading::Deglex).into_iter().map(superq::centralizer::BraidWord).collect();
    assert_eq!(span_rank(&cz, &lit).unwrap().rank, 175);
}

#[test]
fn listed_subword_rule_spans_the_same_space() {
    let cz = Centralizer::new(5, 1, 4).unwrap();
    let listed = enumerate_basis_with(&cz, Exclusion::ListedSubwords).unwrap();
    assert_eq!(listed.len(), 175);
    let mut union = listed.words.clone();
    union.extend(cz.basis().unwrap().words.iter().cloned());
    assert_eq!(span_rank(&cz, &union).unwrap().rank, 175);
}
