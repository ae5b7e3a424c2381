#![allow(dead_code)]

use clifftwist_core::algebra::scalar;
use clifftwist_core::{Monomial, Multivector, Signature};
use proptest::prelude::*;

pub fn sig(p: u32, q: u32) -> Signature {
    Signature::new(p, q).unwrap()
}

pub fn signatures(max_n: u32) -> Vec<Signature> {
    (0..=max_n).flat_map(|n| (0..=n).map(move |p| sig(p, n - p))).collect()
}

pub fn arb_signature(max_n: u32) -> impl Strategy<Value = Signature> {
    (0..=max_n).prop_flat_map(|n| (0..=n).prop_map(move |p| sig(p, n - p)))
}

/// Sparse multivector with up to `terms` terms and small rational coefficients.
pub fn arb_multivector(s: Signature, terms: usize) -> impl Strategy<Value = Multivector> {
    let dim = s.dimension() as u32;
    prop::collection::vec((0..dim, -6i64..=6, 1i64..=4), 0..=terms).prop_map(move |ts| {
        ts.into_iter().fold(Multivector::zero(s), |acc, (m, a, b)| {
            &acc + &Multivector::term(s, Monomial::from_mask(m), scalar::ratio(a, b))
        })
    })
}
