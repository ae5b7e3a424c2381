use std::fmt;

use serde::Serialize;

use super::Monomial;
use crate::error::{Error, Result};

/// Signature `(p, q)` of a non-degenerate diagonal quadratic form.
///
/// Generators `e_1..e_p` square to `+1`, `e_{p+1}..e_n` square to `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Signature {
    p: u32,
    q: u32,
}

impl Signature {
    /// Hard limit on the number of generators (masks are `u32`).
    pub const MAX_GENERATORS: u32 = 32;

    pub fn new(p: u32, q: u32) -> Result<Self> {
        if p.checked_add(q).is_none_or(|n| n > Self::MAX_GENERATORS) {
            return Err(Error::SignatureTooLarge {
                p,
                q,
                limit: Self::MAX_GENERATORS,
            });
        }
        Ok(Signature { p, q })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn n(&self) -> u32 {
        self.p + self.q
    }

    /// Square of generator `e_i`, `i` in `1..=n`.
    pub fn eps(&self, i: u32) -> i8 {
        debug_assert!(i >= 1 && i <= self.n());
        if i <= self.p {
            1
        } else {
            -1
        }
    }

    pub fn eps_vec(&self) -> Vec<i8> {
        (1..=self.n()).map(|i| self.eps(i)).collect()
    }

    /// Mask of the positive-square generators.
    pub fn positive_mask(&self) -> u32 {
        low_bits(self.p)
    }

    /// Mask of the negative-square generators.
    pub fn negative_mask(&self) -> u32 {
        low_bits(self.n()) & !self.positive_mask()
    }

    /// Mask with all `n` generator bits set.
    pub fn full_mask(&self) -> u32 {
        low_bits(self.n())
    }

    /// `2^n`, the real dimension of the algebra.
    pub fn dimension(&self) -> u64 {
        1u64 << self.n()
    }

    /// All basis monomials in inverse-lexicographic (mask) order.
    pub fn monomials(&self) -> impl Iterator<Item = Monomial> {
        (0..self.dimension()).map(|m| Monomial::from_mask(m as u32))
    }

    /// All basis monomials in grade-then-lex display order.
    pub fn monomials_graded(&self) -> Vec<Monomial> {
        let mut all: Vec<Monomial> = self.monomials().collect();
        all.sort();
        all
    }

    /// `(p - q) mod 8` in `0..8`.
    pub fn residue8(&self) -> u32 {
        (self.p as i64 - self.q as i64).rem_euclid(8) as u32
    }

    /// `p - q = 1 mod 4`: the algebra splits into two simple ideals.
    pub fn is_semisimple(&self) -> bool {
        (self.p as i64 - self.q as i64).rem_euclid(4) == 1
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cl({},{})", self.p, self.q)
    }
}

fn low_bits(count: u32) -> u32 {
    if count >= 32 {
        u32::MAX
    } else {
        (1u32 << count) - 1
    }
}
