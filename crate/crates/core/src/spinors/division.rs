//! The division ring `K = fCl f` (or its double) in coordinates.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::algebra::scalar::{self, Scalar};
use crate::algebra::Signature;

/// Isomorphism class of `K` (or `Ǩ` for semisimple algebras).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum KClass {
    R,
    C,
    H,
    R2,
    H2,
}

impl KClass {
    /// By `(p - q) mod 8`.
    pub fn of(sig: Signature) -> KClass {
        match sig.residue8() {
            0 | 2 => KClass::R,
            1 => KClass::R2,
            3 | 7 => KClass::C,
            4 | 6 => KClass::H,
            _ => KClass::H2,
        }
    }

    /// Real dimension of one component.
    pub fn component_dim(self) -> usize {
        match self {
            KClass::R | KClass::R2 => 1,
            KClass::C => 2,
            KClass::H | KClass::H2 => 4,
        }
    }

    pub fn components(self) -> usize {
        if self.is_double() {
            2
        } else {
            1
        }
    }

    pub fn is_double(self) -> bool {
        matches!(self, KClass::R2 | KClass::H2)
    }

    /// The undoubled class of each component.
    pub fn base(self) -> KClass {
        match self {
            KClass::R2 => KClass::R,
            KClass::H2 => KClass::H,
            k => k,
        }
    }

    /// First entry of the seven-element data list.
    pub fn field_name(self) -> &'static str {
        match self.base() {
            KClass::R => "real",
            KClass::C => "complex",
            _ => "quaternionic",
        }
    }

    /// `ℝ`, `ℂ`, `ℍ`, `²ℝ`, `²ℍ`.
    pub fn symbol(self) -> &'static str {
        match self {
            KClass::R => "ℝ",
            KClass::C => "ℂ",
            KClass::H => "ℍ",
            KClass::R2 => "²ℝ",
            KClass::H2 => "²ℍ",
        }
    }

    /// ASCII label: `R`, `C`, `H`, `2R`, `2H`.
    pub fn label(self) -> &'static str {
        match self {
            KClass::R => "R",
            KClass::C => "C",
            KClass::H => "H",
            KClass::R2 => "2R",
            KClass::H2 => "2H",
        }
    }
}

impl fmt::Display for KClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// `re + i·i + j·j + k·k` with Hamilton's rules. Real and complex values
/// live in the `re` and `(re, i)` slots.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Quaternion {
    pub re: Scalar,
    pub i: Scalar,
    pub j: Scalar,
    pub k: Scalar,
}

impl Quaternion {
    pub fn new(re: Scalar, i: Scalar, j: Scalar, k: Scalar) -> Self {
        Quaternion { re, i, j, k }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::real(scalar::one())
    }

    pub fn real(re: Scalar) -> Self {
        Quaternion {
            re,
            ..Self::default()
        }
    }

    /// The `t`-th unit: 1, i, j, k.
    pub fn unit(t: usize) -> Self {
        let mut c = [scalar::zero(), scalar::zero(), scalar::zero(), scalar::zero()];
        c[t] = scalar::one();
        Self::from_coords(&c)
    }

    pub fn from_coords(c: &[Scalar]) -> Self {
        let get = |t: usize| c.get(t).cloned().unwrap_or_else(Scalar::zero);
        Quaternion::new(get(0), get(1), get(2), get(3))
    }

    pub fn coords(&self) -> [&Scalar; 4] {
        [&self.re, &self.i, &self.j, &self.k]
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.i.is_zero() && self.j.is_zero() && self.k.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.i.is_zero() && self.j.is_zero() && self.k.is_zero()
    }

    pub fn conj(&self) -> Self {
        Quaternion::new(self.re.clone(), -self.i.clone(), -self.j.clone(), -self.k.clone())
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Quaternion::new(&self.re * c, &self.i * c, &self.j * c, &self.k * c)
    }

    /// `|q|² = q q̄`.
    pub fn norm2(&self) -> Scalar {
        &self.re * &self.re + &self.i * &self.i + &self.j * &self.j + &self.k * &self.k
    }

    /// `q^{-1} = q̄ / |q|²`; `None` for zero.
    pub fn inverse(&self) -> Option<Self> {
        let n = self.norm2();
        if n.is_zero() {
            return None;
        }
        Some(self.conj().scale(&n.recip()))
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for (c, unit) in [(&self.re, ""), (&self.i, "i"), (&self.j, "j"), (&self.k, "k")] {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            let body = match (unit, abs == scalar::one()) {
                ("", _) => scalar::render(&abs),
                (u, true) => u.to_string(),
                (u, false) => format!("{}{}", scalar::render(&abs), u),
            };
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            out.push_str(&body);
        }
        if out.is_empty() {
            "0".into()
        } else {
            out
        }
    }
}

impl Add for &Quaternion {
    type Output = Quaternion;
    fn add(self, o: &Quaternion) -> Quaternion {
        Quaternion::new(&self.re + &o.re, &self.i + &o.i, &self.j + &o.j, &self.k + &o.k)
    }
}

impl Sub for &Quaternion {
    type Output = Quaternion;
    fn sub(self, o: &Quaternion) -> Quaternion {
        Quaternion::new(&self.re - &o.re, &self.i - &o.i, &self.j - &o.j, &self.k - &o.k)
    }
}

impl Neg for &Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion::new(-self.re.clone(), -self.i.clone(), -self.j.clone(), -self.k.clone())
    }
}

impl Mul for &Quaternion {
    type Output = Quaternion;
    fn mul(self, o: &Quaternion) -> Quaternion {
        let (a1, b1, c1, d1) = (&self.re, &self.i, &self.j, &self.k);
        let (a2, b2, c2, d2) = (&o.re, &o.i, &o.j, &o.k);
        Quaternion::new(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )
    }
}

/// An element of `K`, or a pair `(λ, λ_g)` of `K ⊕ K̂` for doubled classes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct KElement {
    pub class: KClass,
    pub parts: Vec<Quaternion>,
}

impl KElement {
    pub fn zero(class: KClass) -> Self {
        KElement {
            class,
            parts: vec![Quaternion::zero(); class.components()],
        }
    }

    pub fn one(class: KClass) -> Self {
        KElement {
            class,
            parts: vec![Quaternion::one(); class.components()],
        }
    }

    pub fn from_parts(class: KClass, parts: Vec<Quaternion>) -> Self {
        debug_assert_eq!(parts.len(), class.components());
        KElement { class, parts }
    }

    /// The same value in every component.
    pub fn splat(class: KClass, q: Quaternion) -> Self {
        KElement {
            class,
            parts: vec![q; class.components()],
        }
    }

    /// Real coordinates in the basis of `data6` (componentwise for
    /// doubled classes).
    pub fn coords(&self) -> Vec<Scalar> {
        let d = self.class.component_dim();
        self.parts
            .iter()
            .flat_map(|q| q.coords().into_iter().take(d).cloned())
            .collect()
    }

    pub fn from_coords(class: KClass, c: &[Scalar]) -> Self {
        let d = class.component_dim();
        KElement {
            class,
            parts: c.chunks(d).map(Quaternion::from_coords).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.parts.iter().all(Quaternion::is_zero)
    }

    /// Conjugation of `K` induced by the transposition anti-involution.
    pub fn k_conjugate(&self) -> Self {
        KElement {
            class: self.class,
            parts: self.parts.iter().map(Quaternion::conj).collect(),
        }
    }

    fn zip(&self, o: &KElement, op: impl Fn(&Quaternion, &Quaternion) -> Quaternion) -> KElement {
        assert_eq!(self.class, o.class, "K class mismatch");
        KElement {
            class: self.class,
            parts: self.parts.iter().zip(&o.parts).map(|(a, b)| op(a, b)).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        KElement {
            class: self.class,
            parts: self.parts.iter().map(|q| q.scale(c)).collect(),
        }
    }

    pub fn render(&self) -> String {
        if self.parts.len() == 1 {
            self.parts[0].render()
        } else {
            let items: Vec<String> = self.parts.iter().map(Quaternion::render).collect();
            format!("({})", items.join(", "))
        }
    }
}

/// Free-standing form of [`KElement::k_conjugate`].
pub fn k_conjugate(lambda: &KElement) -> KElement {
    lambda.k_conjugate()
}

impl Add for &KElement {
    type Output = KElement;
    fn add(self, o: &KElement) -> KElement {
        self.zip(o, |a, b| a + b)
    }
}

impl Sub for &KElement {
    type Output = KElement;
    fn sub(self, o: &KElement) -> KElement {
        self.zip(o, |a, b| a - b)
    }
}

impl Mul for &KElement {
    type Output = KElement;
    fn mul(self, o: &KElement) -> KElement {
        self.zip(o, |a, b| a * b)
    }
}

impl Neg for &KElement {
    type Output = KElement;
    fn neg(self) -> KElement {
        KElement {
            class: self.class,
            parts: self.parts.iter().map(|q| -q).collect(),
        }
    }
}

impl fmt::Display for KElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::int;

    #[test]
    fn classes_by_residue() {
        let c = |p, q| KClass::of(Signature::new(p, q).unwrap());
        assert_eq!(c(2, 2), KClass::R);
        assert_eq!(c(0, 5), KClass::C);
        assert_eq!(c(1, 3), KClass::H);
        assert_eq!(c(2, 1), KClass::R2);
        assert_eq!(c(1, 4), KClass::H2);
        assert_eq!(c(0, 0), KClass::R);
    }

    #[test]
    fn hamilton_rules() {
        let (i, j, k) = (Quaternion::unit(1), Quaternion::unit(2), Quaternion::unit(3));
        let m1 = -&Quaternion::one();
        assert_eq!(&i * &i, m1);
        assert_eq!(&j * &j, m1);
        assert_eq!(&k * &k, m1);
        assert_eq!(&i * &j, k);
        assert_eq!(&j * &i, -&k);
    }

    #[test]
    fn conjugation_is_anti_involution() {
        let a = Quaternion::new(int(1), int(2), int(-3), int(4));
        let b = Quaternion::new(int(-2), int(0), int(5), int(1));
        assert_eq!((&a * &b).conj(), &b.conj() * &a.conj());
        assert_eq!(a.conj().conj(), a);
        assert_eq!(&a * &a.inverse().unwrap(), Quaternion::one());
    }

    #[test]
    fn complex_conjugate_and_render() {
        let z = KElement::from_coords(KClass::C, &[int(1), int(2)]);
        assert_eq!(z.render(), "1 + 2i");
        assert_eq!(k_conjugate(&z).render(), "1 - 2i");
        let r = KElement::from_coords(KClass::R, &[int(3)]);
        assert_eq!(k_conjugate(&r), r);
        let d = KElement::from_coords(KClass::R2, &[int(1), int(0)]);
        assert_eq!(d.render(), "(1, 0)");
    }
}
