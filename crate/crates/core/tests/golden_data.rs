mod common;

use clifftwist_core::groups::GroupLattice;
use clifftwist_core::idempotents::default_idempotent;
use clifftwist_core::spinors::{clidata, KClass, SpinorSpace};
use clifftwist_core::algebra::scalar;
use clifftwist_core::{Monomial, Multivector};
use common::sig;

fn data(p: u32, q: u32) -> String {
    clidata(sig(p, q)).unwrap().to_string()
}

fn names(ms: &[Monomial], n: u32) -> Vec<String> {
    ms.iter().map(|m| m.render(n)).collect()
}

#[test]
fn printed_records() {
    assert_eq!(data(3, 0), "[complex, 2, simple, 1/2 + 1/2*e1, [1, e2, e3, e23], [1, e23], [1, e2]]");
    assert_eq!(data(1, 1), "[real, 2, simple, 1/2 + 1/2*e12, [1, e1], [1], [1, e1]]");
    assert_eq!(data(1, 2), "[complex, 2, simple, 1/2 + 1/2*e13, [1, e1, e2, e12], [1, e2], [1, e1]]");
    assert_eq!(
        data(1, 3),
        "[quaternionic, 2, simple, 1/2 + 1/2*e14, [1, e1, e2, e3, e12, e13, e23, e123], [1, e2, e3, e23], [1, e1]]"
    );
    assert_eq!(data(0, 0), "[real, 1, simple, 1, [1], [1], [1]]");
}

#[test]
fn printed_idempotent_factorizations() {
    let gens = |p, q| names(&default_idempotent(sig(p, q)).unwrap().gens, p + q);
    assert_eq!(gens(2, 2), ["e13", "e24"]);
    assert_eq!(gens(2, 1), ["e1", "e23"]);
    assert_eq!(gens(1, 4), ["e234", "e15"]);
    assert_eq!(gens(1, 3), ["e14"]);
    assert_eq!(gens(3, 0), ["e1"]);
}

#[test]
fn semisimple_records() {
    let cd = clidata(sig(2, 1)).unwrap();
    assert_eq!(cd.to_string(), "[real, 2, semisimple, 1/4 + 1/4*e1 + 1/4*e23 + 1/4*e123, [1, e2], [1], [1, e2]]");

    let cd = clidata(sig(1, 4)).unwrap();
    assert_eq!(cd.field_name(), "quaternionic");
    assert_eq!(cd.n, 2);
    assert!(cd.semisimple);
    assert_eq!(cd.class, KClass::H2);
    assert_eq!(names(&cd.data6, 5), ["1", "e2", "e3", "e23"]);
    assert_eq!(names(&cd.data7, 5), ["1", "e1"]);
    assert_eq!(cd.data5.len(), cd.data6.len() * cd.data7.len());
    // f = ¼(1 + e234)(1 + e15) and f̂ = ¼(1 − e234)(1 + e15).
    let s = sig(1, 4);
    let one = Multivector::one(s);
    let e234 = Multivector::basis(s, Monomial::from_indices(&[2, 3, 4]));
    let e15 = Multivector::basis(s, Monomial::from_indices(&[1, 5]));
    let quarter = scalar::ratio(1, 4);
    let f = (&(&one + &e234) * &(&one + &e15)).scale(&quarter);
    let fh = (&(&one - &e234) * &(&one + &e15)).scale(&quarter);
    assert_eq!(cd.idempotent.value(), &f);
    assert_eq!(cd.idempotent.grade_involute(), fh);
}

#[test]
fn printed_group_lists() {
    let lat = |p, q| GroupLattice::new(&default_idempotent(sig(p, q)).unwrap()).unwrap();
    let l = lat(1, 1);
    assert_eq!(l.vee.render(), "{±1, ±e1, ±e2, ±e12}");
    assert_eq!(l.stabilizer.render(), "{±1, ±e12}");
    assert_eq!(l.idempotent_group.render(), "{±1, ±e12}");
    assert_eq!(l.field_group.render(), "{±1}");

    let l = lat(1, 2);
    assert_eq!(l.stabilizer.render(), "{±1, ±e2, ±e13, ±e123}");
    assert_eq!(l.idempotent_group.render(), "{±1, ±e13}");
    assert_eq!(l.field_group.render(), "{±1, ±e2}");

    let l = lat(1, 3);
    assert_eq!(l.stabilizer.render(), "{±1, ±e2, ±e3, ±e14, ±e23, ±e124, ±e134, ±e1234}");
    assert_eq!(l.idempotent_group.render(), "{±1, ±e14}");
    assert_eq!(l.field_group.render(), "{±1, ±e2, ±e3, ±e23}");

    let l = lat(0, 0);
    for g in [&l.vee, &l.stabilizer, &l.idempotent_group, &l.field_group] {
        assert_eq!(g.render(), "{±1}");
    }
}

#[test]
fn semisimple_projector_matrix() {
    let space = SpinorSpace::new(clidata(sig(2, 1)).unwrap()).unwrap();
    let f = space.clidata().idempotent.value().clone();
    let m = space.rep_matrix(&f).unwrap();
    let cells: Vec<Vec<String>> = (0..2).map(|i| (0..2).map(|j| m.get(i, j).render()).collect()).collect();
    assert_eq!(cells, [["(1, 0)", "(0, 0)"], ["(0, 0)", "(0, 0)"]]);
}
