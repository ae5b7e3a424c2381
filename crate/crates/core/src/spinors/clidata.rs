use std::fmt;

use super::{k_basis, KClass};
use crate::algebra::{Monomial, Signature};
use crate::error::Result;
use crate::groups::GroupLattice;
use crate::idempotents::{default_idempotent, primitive_idempotent, spinor_dim, PrimitiveIdempotent};

/// The seven-element data record of `Cl(p,q)`:
/// `[field, N, simple|semisimple, f, data5, data6, data7]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliData {
    pub sig: Signature,
    pub class: KClass,
    pub n: usize,
    pub semisimple: bool,
    pub idempotent: PrimitiveIdempotent,
    /// Transversal of `T(f)` in `G`: a real basis of `S` modulo `f`.
    pub data5: Vec<Monomial>,
    /// Transversal of `T(f)` in `G(f)`: a real basis of `K` modulo `f`.
    pub data6: Vec<Monomial>,
    /// Transversal of `G(f)` in `G`: a `K`-basis of `S` modulo `f`.
    pub data7: Vec<Monomial>,
}

impl CliData {
    pub fn new(f: PrimitiveIdempotent) -> Result<Self> {
        let sig = f.sig;
        let lat = GroupLattice::new(&f)?;
        let data5 = lat.real_spinor_transversal().monomials();
        let data6 = lat.field_transversal().monomials();
        let data7 = lat.spinor_transversal().monomials();
        debug_assert_eq!(data6, k_basis(&f));
        Ok(CliData {
            sig,
            class: KClass::of(sig),
            n: spinor_dim(sig),
            semisimple: sig.is_semisimple(),
            idempotent: f,
            data5,
            data6,
            data7,
        })
    }

    pub fn field_name(&self) -> &'static str {
        self.class.field_name()
    }

    pub fn type_name(&self) -> &'static str {
        if self.semisimple {
            "semisimple"
        } else {
            "simple"
        }
    }

    pub fn render_list(&self, list: &[Monomial]) -> Vec<String> {
        list.iter().map(|m| m.render(self.sig.n())).collect()
    }
}

impl fmt::Display for CliData {
    /// `[complex, 2, simple, 1/2 + 1/2*e1, [1, e2, e3, e23], [1, e23], [1, e2]]`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |l: &[Monomial]| format!("[{}]", self.render_list(l).join(", "));
        write!(
            f,
            "[{}, {}, {}, {}, {}, {}, {}]",
            self.field_name(),
            self.n,
            self.type_name(),
            self.idempotent.value(),
            list(&self.data5),
            list(&self.data6),
            list(&self.data7)
        )
    }
}

/// Data for the default (all-plus) idempotent.
pub fn clidata(sig: Signature) -> Result<CliData> {
    CliData::new(default_idempotent(sig)?)
}

/// Data for the idempotent with the given factor signs.
pub fn clidata_with_signs(sig: Signature, signs: &[i8]) -> Result<CliData> {
    CliData::new(primitive_idempotent(sig, signs)?)
}
