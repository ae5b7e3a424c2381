mod common;

use clifftwist_core::linalg::rank;
use clifftwist_core::sampling;
use clifftwist_core::spinors::{clidata, dagger_check, SpinorSpace};
use clifftwist_core::{Monomial, Multivector};
use common::*;
use proptest::prelude::*;

#[test]
fn k_images_commute_with_f_and_close_under_products() {
    for s in signatures(9) {
        let cd = clidata(s).unwrap();
        let f = cd.idempotent.value();
        let images: Vec<Multivector> = cd.data6.iter().map(|&m| f.left_mul_monomial(1, m)).collect();
        for x in &images {
            assert_eq!(&(x * f), &(f * x), "{s}");
        }
        let span = rank(images.iter().map(|x| x.as_map()));
        assert_eq!(span, images.len(), "{s}");
        for x in &images {
            for y in &images {
                let xy = x * y;
                let with = rank(images.iter().chain(std::iter::once(&xy)).map(|v| v.as_map()));
                assert_eq!(with, span, "{s}: K not closed");
            }
        }
    }
}

#[test]
fn real_spinor_dimension() {
    for s in signatures(9) {
        let cd = clidata(s).unwrap();
        let k = cd.class.component_dim();
        assert_eq!(cd.data5.len(), cd.n * k, "{s}");
        assert_eq!(cd.data5.len(), cd.data6.len() * cd.data7.len(), "{s}");
    }
}

#[test]
fn representation_is_faithful_on_monomials() {
    for s in signatures(5) {
        let space = SpinorSpace::new(clidata(s).unwrap()).unwrap();
        let rows: Vec<_> = s
            .monomials()
            .map(|m| {
                let mat = space.rep_matrix(&Multivector::basis(s, m)).unwrap();
                let mut v = std::collections::BTreeMap::new();
                let mut idx = 0u32;
                for row in &mat.entries {
                    for x in row {
                        for c in x.coords() {
                            if c != clifftwist_core::algebra::scalar::zero() {
                                v.insert(idx, c);
                            }
                            idx += 1;
                        }
                    }
                }
                v
            })
            .collect();
        assert_eq!(rank(&rows), s.dimension() as usize, "{s}");
    }
}

#[test]
fn dagger_law_on_generators() {
    for s in signatures(9) {
        let space = SpinorSpace::new(clidata(s).unwrap()).unwrap();
        for i in 1..=s.n() {
            let e = Multivector::basis(s, Monomial::generator(i));
            assert!(dagger_check(&e, &space).unwrap(), "{s} e{i}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn dagger_law_on_random_elements(s in arb_signature(7), seed in any::<u64>()) {
        let space = SpinorSpace::new(clidata(s).unwrap()).unwrap();
        let mut rng = sampling::rng(seed);
        let u = sampling::multivector(&mut rng, s, 8);
        prop_assert!(dagger_check(&u, &space).unwrap());
    }

    #[test]
    fn representation_is_multiplicative(s in arb_signature(6), seed in any::<u64>()) {
        let space = SpinorSpace::new(clidata(s).unwrap()).unwrap();
        let mut rng = sampling::rng(seed);
        let u = sampling::multivector(&mut rng, s, 6);
        let v = sampling::multivector(&mut rng, s, 6);
        let lhs = space.rep_matrix(&(&u * &v)).unwrap();
        let rhs = space.rep_matrix(&u).unwrap().mul(&space.rep_matrix(&v).unwrap());
        prop_assert_eq!(lhs, rhs);
    }
}
