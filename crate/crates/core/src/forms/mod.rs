//! Spinor scalar products: the transposition product `Tε(ψ)φ` and the
//! products `β₊ = s₁ψ̃φ`, `β₋ = s₂ψ̄φ`; their Gram matrices over `K` and the
//! classical groups preserving them.

mod classify;
mod gram;
mod table;

pub use classify::{classify, hermitian_signature, GroupFamily, GroupName};
pub use gram::{gram, GramForm, LeftInvolution};
pub use table::{sweep_signatures, table_row, table_sweep, Family, TableRow};

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::algebra::Multivector;
use crate::error::{Error, Result};
use crate::groups::VeeElement;
use crate::spinors::{CliData, KElement, Spinor, SpinorSpace};

/// Which scalar product.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ProductKind {
    Tp,
    BetaPlus,
    BetaMinus,
}

impl ProductKind {
    pub const ALL: [ProductKind; 3] = [ProductKind::Tp, ProductKind::BetaPlus, ProductKind::BetaMinus];

    /// `tp`, `beta+`, `beta-`.
    pub fn as_str(self) -> &'static str {
        match self {
            ProductKind::Tp => "tp",
            ProductKind::BetaPlus => "beta+",
            ProductKind::BetaMinus => "beta-",
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            ProductKind::Tp => "Tε(ψ)φ",
            ProductKind::BetaPlus => "β₊",
            ProductKind::BetaMinus => "β₋",
        }
    }
}

impl fmt::Display for ProductKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ProductKind {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "tp" => Ok(ProductKind::Tp),
            "beta+" | "beta_plus" | "bplus" => Ok(ProductKind::BetaPlus),
            "beta-" | "beta_minus" | "bminus" => Ok(ProductKind::BetaMinus),
            _ => Err(format!("unknown product `{s}` (expected tp, beta+ or beta-)")),
        }
    }
}

/// Reversion (for `β₊`) or Clifford conjugation (for `β₋`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Involution {
    Reversion,
    Conjugation,
}

impl Involution {
    pub fn apply(self, u: &Multivector) -> Multivector {
        match self {
            Involution::Reversion => u.reversion(),
            Involution::Conjugation => u.conjugation(),
        }
    }
}

/// First `s` in data7 order with `inv(f) = s f s^{-1}`, or `None`.
pub fn find_s(cd: &CliData, kind: Involution) -> Option<VeeElement> {
    let sig = cd.sig;
    let f = cd.idempotent.value();
    let target = kind.apply(f);
    cd.data7.iter().map(|&m| VeeElement::positive(m)).find(|s| {
        let inv = s.inverse(sig);
        f.left_mul_monomial(s.sign, s.mono).right_mul_monomial(inv.sign, inv.mono) == target
    })
}

/// A scalar product on a fixed spinor space, with its `s` monomial resolved.
#[derive(Debug, Clone)]
pub struct ScalarProduct<'a> {
    space: &'a SpinorSpace,
    kind: ProductKind,
    s: Option<VeeElement>,
}

impl<'a> ScalarProduct<'a> {
    pub fn new(space: &'a SpinorSpace, kind: ProductKind) -> Self {
        let s = match kind {
            ProductKind::Tp => Some(VeeElement::ONE),
            ProductKind::BetaPlus => find_s(space.clidata(), Involution::Reversion),
            ProductKind::BetaMinus => find_s(space.clidata(), Involution::Conjugation),
        };
        ScalarProduct { space, kind, s }
    }

    pub fn kind(&self) -> ProductKind {
        self.kind
    }

    pub fn space(&self) -> &SpinorSpace {
        self.space
    }

    /// The monomial `s` (`1` for the transposition product); `None` when
    /// the product vanishes identically.
    pub fn s(&self) -> Option<VeeElement> {
        self.s
    }

    fn left(&self, psi: &Multivector) -> Multivector {
        match self.kind {
            ProductKind::Tp => psi.transposition(),
            ProductKind::BetaPlus => psi.reversion(),
            ProductKind::BetaMinus => psi.conjugation(),
        }
    }

    /// The value in `Ǩ`. Without an `s`, the raw product is checked to be
    /// zero and zero is returned.
    pub fn eval(&self, psi: &Spinor, phi: &Spinor) -> Result<KElement> {
        let parts = psi
            .parts
            .iter()
            .zip(&phi.parts)
            .map(|(a, b)| {
                let raw = &self.left(a) * b;
                match self.s {
                    Some(s) => Ok(raw.left_mul_monomial(s.sign, s.mono)),
                    None if raw.is_zero() => Ok(raw),
                    None => Err(Error::NotInDivisionRing),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        self.space.k_element(&parts)
    }
}

/// `Tε(ψ)φ = λ f`, returned as `λ`.
pub fn tp_product(space: &SpinorSpace, psi: &Spinor, phi: &Spinor) -> Result<KElement> {
    ScalarProduct::new(space, ProductKind::Tp).eval(psi, phi)
}

/// `β₊` (`plus = true`) or `β₋`.
pub fn beta_product(space: &SpinorSpace, psi: &Spinor, phi: &Spinor, plus: bool) -> Result<KElement> {
    let kind = if plus {
        ProductKind::BetaPlus
    } else {
        ProductKind::BetaMinus
    };
    ScalarProduct::new(space, kind).eval(psi, phi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Signature;
    use crate::spinors::clidata;

    fn cd(p: u32, q: u32) -> CliData {
        clidata(Signature::new(p, q).unwrap()).unwrap()
    }

    fn render(s: Option<VeeElement>) -> Option<String> {
        s.map(|e| e.render(9))
    }

    #[test]
    fn s_monomials() {
        assert_eq!(render(find_s(&cd(2, 2), Involution::Reversion)).as_deref(), Some("e12"));
        assert_eq!(render(find_s(&cd(2, 2), Involution::Conjugation)).as_deref(), Some("e12"));
        assert_eq!(render(find_s(&cd(1, 2), Involution::Reversion)).as_deref(), Some("e1"));
        assert_eq!(render(find_s(&cd(1, 2), Involution::Conjugation)).as_deref(), Some("e1"));
        assert_eq!(render(find_s(&cd(1, 3), Involution::Reversion)).as_deref(), Some("e1"));
        assert_eq!(render(find_s(&cd(1, 3), Involution::Conjugation)).as_deref(), Some("e1"));
        assert_eq!(find_s(&cd(2, 1), Involution::Reversion), None);
    }

    #[test]
    fn tp_of_f_with_itself() {
        let space = SpinorSpace::new(cd(2, 2)).unwrap();
        let f = space.basis_spinor(0);
        let v = tp_product(&space, &f, &f).unwrap();
        assert_eq!(v, KElement::one(space.class()));
    }

    #[test]
    fn product_names_parse() {
        for k in ProductKind::ALL {
            assert_eq!(k.as_str().parse::<ProductKind>().unwrap(), k);
        }
        assert!("beta".parse::<ProductKind>().is_err());
    }
}
