#[path = "support/printed_formulas.rs"]
mod printed_formulas;

use clifftwist_core::forms::ProductKind;
use printed_formulas::{check, check_cl22_gram, printed_cases};

fn run(p: u32, q: u32) {
    let cases: Vec<_> = printed_cases().into_iter().filter(|c| (c.0, c.1) == (p, q)).collect();
    assert_eq!(cases.len(), 3);
    for (p, q, kind, poly) in cases {
        check(p, q, kind, &poly).unwrap();
    }
}

#[test]
fn cl22_products() {
    run(2, 2);
}

#[test]
fn cl22_gram_matrices() {
    check_cl22_gram().unwrap();
}

#[test]
fn cl12_products() {
    run(1, 2);
}

#[test]
fn cl13_products() {
    run(1, 3);
}

#[test]
fn every_product_is_covered() {
    let kinds: Vec<ProductKind> = printed_cases().iter().map(|c| c.2).collect();
    assert_eq!(kinds.len(), 9);
}
