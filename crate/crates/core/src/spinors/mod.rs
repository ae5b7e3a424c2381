//! Spinor ideals `S = Cl f`, the division ring `K = fCl f`, the
//! seven-element data record, and matrix representations over `K`.

mod clidata;
mod division;
mod space;

pub use clidata::{clidata, clidata_with_signs, CliData};
pub use division::{k_conjugate, KClass, KElement, Quaternion};
pub use space::{dagger_check, Spinor, SpinorMatrix, SpinorSpace};

use crate::algebra::{Monomial, Multivector};
use crate::idempotents::{division_ring_dim, PrimitiveIdempotent};
use crate::linalg::{CoordinateSolver, Echelon};

/// Monomials spanning `K` modulo `f`, listed in monomial order.
///
/// Scans in mask order and accepts `m` when `m f = f m f ≠ 0` and `m f` is
/// independent of the images accepted so far.
pub fn k_basis(f: &PrimitiveIdempotent) -> Vec<Monomial> {
    let sig = f.sig;
    let value = f.value();
    let dim = division_ring_dim(sig);
    let mut span = Echelon::new();
    let mut out = Vec::new();
    for m in sig.monomials() {
        if out.len() == dim {
            break;
        }
        let mf = value.left_mul_monomial(1, m);
        if mf.is_zero() || mf != value * &mf {
            continue;
        }
        if span.insert(mf.as_map()) {
            out.push(m);
        }
    }
    out.sort();
    out
}

fn solver_for<'a, I: IntoIterator<Item = &'a Multivector>>(vs: I) -> Option<CoordinateSolver> {
    CoordinateSolver::new(vs.into_iter().map(|v| v.as_map().clone()).collect())
}

/// `{m f : m ∈ data6}` is a real basis of `fCl f`: independent, inside `K`,
/// and every `f x f` lies in its span.
pub fn spans_k_over_r(f: &PrimitiveIdempotent, data6: &[Monomial]) -> bool {
    let value = f.value();
    let images: Vec<Multivector> = data6.iter().map(|&m| value.left_mul_monomial(1, m)).collect();
    if images.iter().any(|v| v != &(value * v)) {
        return false;
    }
    let Some(solver) = solver_for(&images) else {
        return false;
    };
    f.sig.monomials().all(|x| {
        let fxf = value * &value.left_mul_monomial(1, x);
        solver.solve(fxf.as_map()).is_some()
    })
}

/// `{m_j β f : m_j ∈ data7, β ∈ data6}` is a real basis of `S`, i.e. data7
/// spans `S` over `K`.
pub fn spans_s_over_k(f: &PrimitiveIdempotent, data6: &[Monomial], data7: &[Monomial]) -> bool {
    let sig = f.sig;
    let value = f.value();
    let images: Vec<Multivector> = data7
        .iter()
        .flat_map(|&m| {
            data6
                .iter()
                .map(move |&b| value.left_mul_monomial(1, b).left_mul_monomial(1, m))
        })
        .collect();
    spans_ideal(f, &images, sig.monomials())
}

/// `{m f : m ∈ data5}` is a real basis of `S`.
pub fn spans_s_over_r(f: &PrimitiveIdempotent, data5: &[Monomial]) -> bool {
    let value = f.value();
    let images: Vec<Multivector> = data5.iter().map(|&m| value.left_mul_monomial(1, m)).collect();
    spans_ideal(f, &images, f.sig.monomials())
}

fn spans_ideal<I: Iterator<Item = Monomial>>(
    f: &PrimitiveIdempotent,
    images: &[Multivector],
    all: I,
) -> bool {
    let Some(solver) = solver_for(images) else {
        return false;
    };
    let value = f.value();
    let mut all = all;
    all.all(|x| solver.solve(value.left_mul_monomial(1, x).as_map()).is_some())
}
