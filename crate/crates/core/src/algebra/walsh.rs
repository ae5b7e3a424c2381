//! The twisted-group-ring product on `(Z_2)^n`.
//!
//! `e_a e_b = (-1)^{Σ_{i≤p} a_i b_i} w_a(h(b)) e_{a⊕b}`, where `w_a` is the
//! Walsh character and `h` is the inverse Gray code (prefix parity).

use super::{Monomial, Signature};

/// Inverse Gray code: bit `i` of the result is the parity of bits `0..=i`
/// of `b`, truncated to `n` bits.
pub fn gray_inverse(b: u32, n: u32) -> u32 {
    let mut h = b;
    h ^= h << 1;
    h ^= h << 2;
    h ^= h << 4;
    h ^= h << 8;
    h ^= h << 16;
    if n >= 32 {
        h
    } else {
        h & ((1u32 << n) - 1)
    }
}

/// Walsh function `w_a(c) = (-1)^{Σ a_i c_i}`.
pub fn walsh(a: u32, c: u32) -> i8 {
    if (a & c).count_ones() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// The 2-cocycle `γ(a, b)` of the twisted group ring.
pub fn cocycle(a: Monomial, b: Monomial, sig: Signature) -> i8 {
    let metric = (a.mask() & b.mask() & sig.positive_mask()).count_ones();
    let prefactor = if metric % 2 == 0 { 1 } else { -1 };
    prefactor * walsh(a.mask(), gray_inverse(b.mask(), sig.n()))
}

/// Product of two basis monomials: `(sign, a ⊕ b)`.
pub fn monomial_product(a: Monomial, b: Monomial, sig: Signature) -> (i8, Monomial) {
    (cocycle(a, b, sig), a.xor(b))
}

/// `s` with `m·m = s·1`.
pub fn monomial_square_sign(m: Monomial, sig: Signature) -> i8 {
    cocycle(m, m, sig)
}

/// `m^{-1} = s·m`, returned as `(s, m)`.
pub fn monomial_inverse(m: Monomial, sig: Signature) -> (i8, Monomial) {
    (monomial_square_sign(m, sig), m)
}
