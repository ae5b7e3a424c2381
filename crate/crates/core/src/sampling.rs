//! Seeded random elements for property checks and the CLI's `--seed`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{scalar, Multivector, Scalar, Signature};
use crate::spinors::{KElement, Quaternion, Spinor, SpinorSpace};

pub type SampleRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Small nonzero-biased rational: numerator in `-5..=5`, denominator `1..=3`.
pub fn small_scalar<R: Rng>(rng: &mut R) -> Scalar {
    scalar::ratio(rng.gen_range(-5..=5), rng.gen_range(1..=3))
}

/// Up to `max_terms` random terms.
pub fn multivector<R: Rng>(rng: &mut R, sig: Signature, max_terms: usize) -> Multivector {
    let dim = sig.dimension() as u32;
    let terms = rng.gen_range(1..=max_terms.max(1));
    let mut out = Multivector::zero(sig);
    for _ in 0..terms {
        let mask = if dim > 1 { rng.gen_range(0..dim) } else { 0 };
        out = &out + &Multivector::term(sig, crate::Monomial::from_mask(mask), small_scalar(rng));
    }
    out
}

pub fn quaternion<R: Rng>(rng: &mut R, dim: usize) -> Quaternion {
    let c: Vec<Scalar> = (0..dim).map(|_| small_scalar(rng)).collect();
    Quaternion::from_coords(&c)
}

pub fn k_element<R: Rng>(rng: &mut R, space: &SpinorSpace) -> KElement {
    let class = space.class();
    let parts = (0..class.components())
        .map(|_| quaternion(rng, class.component_dim()))
        .collect();
    KElement::from_parts(class, parts)
}

/// A random spinor through random `K` coordinates.
pub fn spinor<R: Rng>(rng: &mut R, space: &SpinorSpace) -> Spinor {
    let coords: Vec<KElement> = (0..space.n()).map(|_| k_element(rng, space)).collect();
    space.spinor(&coords)
}
