use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::scalar::{self, Scalar};
use super::walsh::{cocycle, monomial_inverse};
use super::{Monomial, Signature};
use crate::error::{Error, Result};

/// Sparse exact element of `Cl(p,q)`.
///
/// No stored coefficient is zero, so structural equality is algebraic
/// equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multivector {
    sig: Signature,
    terms: BTreeMap<u32, Scalar>,
}

impl Multivector {
    pub fn zero(sig: Signature) -> Self {
        Multivector {
            sig,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(sig: Signature) -> Self {
        Self::scalar(sig, scalar::one())
    }

    pub fn scalar(sig: Signature, c: Scalar) -> Self {
        Self::term(sig, Monomial::ONE, c)
    }

    pub fn basis(sig: Signature, m: Monomial) -> Self {
        Self::term(sig, m, scalar::one())
    }

    /// `s·m` for a sign `s = ±1`.
    pub fn signed_basis(sig: Signature, s: i8, m: Monomial) -> Self {
        Self::term(sig, m, scalar::int(s as i64))
    }

    pub fn term(sig: Signature, m: Monomial, c: Scalar) -> Self {
        debug_assert!(m.mask() & !sig.full_mask() == 0);
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m.mask(), c);
        }
        Multivector { sig, terms }
    }

    /// Sum of `(monomial, coefficient)` pairs; repeated monomials accumulate.
    pub fn from_terms<I>(sig: Signature, iter: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Scalar)>,
    {
        let mut out = Self::zero(sig);
        for (m, c) in iter {
            out.accumulate(m.mask(), c);
        }
        out
    }

    pub fn sig(&self) -> Signature {
        self.sig
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: Monomial) -> Scalar {
        self.terms.get(&m.mask()).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Terms in mask order.
    pub fn terms(&self) -> impl Iterator<Item = (Monomial, &Scalar)> {
        self.terms.iter().map(|(&k, v)| (Monomial::from_mask(k), v))
    }

    /// Terms in grade-then-lex order.
    pub fn sorted_terms(&self) -> Vec<(Monomial, &Scalar)> {
        let mut v: Vec<_> = self.terms().collect();
        v.sort_by_key(|t| t.0);
        v
    }

    /// The underlying `mask -> coefficient` map.
    pub fn as_map(&self) -> &BTreeMap<u32, Scalar> {
        &self.terms
    }

    pub fn support(&self) -> impl Iterator<Item = Monomial> + '_ {
        self.terms.keys().map(|&k| Monomial::from_mask(k))
    }

    fn accumulate(&mut self, mask: u32, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mask) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_sig(&self, other: &Multivector) -> Result<()> {
        if self.sig != other.sig {
            return Err(Error::SignatureMismatch {
                left: self.sig,
                right: other.sig,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Multivector) -> Result<Multivector> {
        self.check_sig(other)?;
        let mut out = self.clone();
        for (&k, v) in &other.terms {
            out.accumulate(k, v.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Multivector) -> Result<Multivector> {
        self.check_sig(other)?;
        let mut out = self.clone();
        for (&k, v) in &other.terms {
            out.accumulate(k, -v.clone());
        }
        Ok(out)
    }

    /// Clifford product, bilinear extension of the Walsh/Gray monomial rule.
    pub fn try_mul(&self, other: &Multivector) -> Result<Multivector> {
        self.check_sig(other)?;
        let sig = self.sig;
        let mut out = Self::zero(sig);
        for (&a, ca) in &self.terms {
            for (&b, cb) in &other.terms {
                let s = cocycle(Monomial::from_mask(a), Monomial::from_mask(b), sig);
                let c = ca * cb;
                out.accumulate(a ^ b, if s < 0 { -c } else { c });
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> Multivector {
        if c.is_zero() {
            return Self::zero(self.sig);
        }
        Multivector {
            sig: self.sig,
            terms: self.terms.iter().map(|(&k, v)| (k, v * c)).collect(),
        }
    }

    /// Left multiplication by a signed monomial, without the general product.
    pub fn left_mul_monomial(&self, s: i8, m: Monomial) -> Multivector {
        let sig = self.sig;
        Multivector {
            sig,
            terms: self
                .terms
                .iter()
                .map(|(&b, c)| {
                    let t = s * cocycle(m, Monomial::from_mask(b), sig);
                    (m.mask() ^ b, scalar::signed(t, c))
                })
                .collect(),
        }
    }

    /// Right multiplication by a signed monomial.
    pub fn right_mul_monomial(&self, s: i8, m: Monomial) -> Multivector {
        let sig = self.sig;
        Multivector {
            sig,
            terms: self
                .terms
                .iter()
                .map(|(&a, c)| {
                    let t = s * cocycle(Monomial::from_mask(a), m, sig);
                    (a ^ m.mask(), scalar::signed(t, c))
                })
                .collect(),
        }
    }

    /// Apply a per-monomial sign.
    pub fn map_signs<F: Fn(Monomial) -> i8>(&self, sign: F) -> Multivector {
        Multivector {
            sig: self.sig,
            terms: self
                .terms
                .iter()
                .map(|(&k, v)| (k, scalar::signed(sign(Monomial::from_mask(k)), v)))
                .collect(),
        }
    }

    /// `(-1)^g` on grade `g`.
    pub fn grade_involution(&self) -> Multivector {
        self.map_signs(grade_involution_sign)
    }

    /// `(-1)^{g(g-1)/2}` on grade `g`.
    pub fn reversion(&self) -> Multivector {
        self.map_signs(reversion_sign)
    }

    /// `(-1)^{g(g+1)/2}` on grade `g`.
    pub fn conjugation(&self) -> Multivector {
        self.map_signs(conjugation_sign)
    }

    /// The transposition anti-involution `Tε`: `m ↦ m^{-1}` on monomials.
    ///
    /// Computed as reversion followed by `e_i ↦ eps_i e_i` on generators.
    pub fn transposition(&self) -> Multivector {
        let neg = self.sig.negative_mask();
        self.map_signs(|m| {
            let metric = if (m.mask() & neg).count_ones() % 2 == 0 { 1 } else { -1 };
            reversion_sign(m) * metric
        })
    }

    /// The twisted-group-ring star map `Σ a_x x̄ ↦ Σ a_x x̄^{-1}`.
    ///
    /// Independent of [`Multivector::transposition`]: the inverse of each
    /// basis element comes from the cocycle `γ(x, x)`.
    pub fn star(&self) -> Multivector {
        let sig = self.sig;
        let mut out = Self::zero(sig);
        for (&x, c) in &self.terms {
            let (s, inv) = monomial_inverse(Monomial::from_mask(x), sig);
            out.accumulate(inv.mask(), scalar::signed(s, c));
        }
        out
    }

    /// Keep only terms of grade `g`.
    pub fn grade_part(&self, g: u32) -> Multivector {
        Multivector {
            sig: self.sig,
            terms: self
                .terms
                .iter()
                .filter(|(&k, _)| k.count_ones() == g)
                .map(|(&k, v)| (k, v.clone()))
                .collect(),
        }
    }
}

pub fn grade_involution_sign(m: Monomial) -> i8 {
    if m.grade() % 2 == 0 {
        1
    } else {
        -1
    }
}

pub fn reversion_sign(m: Monomial) -> i8 {
    let g = m.grade() as u64;
    if (g * g.saturating_sub(1) / 2) % 2 == 0 {
        1
    } else {
        -1
    }
}

pub fn conjugation_sign(m: Monomial) -> i8 {
    let g = m.grade() as u64;
    if (g * (g + 1) / 2) % 2 == 0 {
        1
    } else {
        -1
    }
}

impl Add for &Multivector {
    type Output = Multivector;
    fn add(self, rhs: &Multivector) -> Multivector {
        self.try_add(rhs).expect("signature mismatch in +")
    }
}

impl Sub for &Multivector {
    type Output = Multivector;
    fn sub(self, rhs: &Multivector) -> Multivector {
        self.try_sub(rhs).expect("signature mismatch in -")
    }
}

impl Mul for &Multivector {
    type Output = Multivector;
    fn mul(self, rhs: &Multivector) -> Multivector {
        self.try_mul(rhs).expect("signature mismatch in *")
    }
}

impl Neg for &Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        Multivector {
            sig: self.sig,
            terms: self.terms.iter().map(|(&k, v)| (k, -v.clone())).collect(),
        }
    }
}

impl fmt::Display for Multivector {
    /// `1/2 + 1/2*e1`, `-e23`, `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let n = self.sig.n();
        for (i, (m, c)) in self.sorted_terms().into_iter().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            if m.is_one() {
                f.write_str(&scalar::render(&abs))?;
            } else if abs.is_one() {
                f.write_str(&m.render(n))?;
            } else {
                write!(f, "{}*{}", scalar::render(&abs), m.render(n))?;
            }
        }
        Ok(())
    }
}
