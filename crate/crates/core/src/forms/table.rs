use rayon::prelude::*;

use super::{classify, gram, GroupName, ProductKind};
use crate::algebra::Signature;
use crate::error::Result;
use crate::spinors::{clidata, KClass, SpinorSpace};

/// The five table families, keyed by the class of `K`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Real,
    Complex,
    Quaternionic,
    DoubleReal,
    DoubleQuaternionic,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::Real,
        Family::Complex,
        Family::Quaternionic,
        Family::DoubleReal,
        Family::DoubleQuaternionic,
    ];

    pub fn of(class: KClass) -> Family {
        match class {
            KClass::R => Family::Real,
            KClass::C => Family::Complex,
            KClass::H => Family::Quaternionic,
            KClass::R2 => Family::DoubleReal,
            KClass::H2 => Family::DoubleQuaternionic,
        }
    }

    pub fn title(self) -> &'static str {
        match self {
            Family::Real => "Simple, K = ℝ (p - q = 0, 2 mod 8)",
            Family::Complex => "Simple, K = ℂ (p - q = 3, 7 mod 8)",
            Family::Quaternionic => "Simple, K = ℍ (p - q = 4, 6 mod 8)",
            Family::DoubleReal => "Semisimple, K = ℝ ⊕ ℝ (p - q = 1 mod 8)",
            Family::DoubleQuaternionic => "Semisimple, K = ℍ ⊕ ℍ (p - q = 5 mod 8)",
        }
    }
}

/// One signature of a sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub p: u32,
    pub q: u32,
    pub k: usize,
    pub n: usize,
    pub class: KClass,
    pub product: ProductKind,
    pub group: GroupName,
    /// The other products that agree with `product` on all spinor pairs.
    pub coincides_with: Vec<ProductKind>,
}

impl TableRow {
    pub fn family(&self) -> Family {
        Family::of(self.class)
    }

    pub fn coincides_label(&self) -> String {
        self.coincides_with
            .iter()
            .map(|k| k.as_str())
            .collect::<Vec<_>>()
            .join(";")
    }
}

/// Signatures with `p + q <= max_n`, ordered by `(p + q, p)`.
pub fn sweep_signatures(max_n: u32) -> Result<Vec<Signature>> {
    let mut out = Vec::new();
    for n in 0..=max_n {
        for p in 0..=n {
            out.push(Signature::new(p, n - p)?);
        }
    }
    Ok(out)
}

/// The row of one signature.
pub fn table_row(sig: Signature, product: ProductKind) -> Result<TableRow> {
    let cd = clidata(sig)?;
    let k = cd.idempotent.k();
    let space = SpinorSpace::new(cd)?;
    let forms = ProductKind::ALL
        .iter()
        .map(|&kind| gram(&space, kind))
        .collect::<Result<Vec<_>>>()?;
    let main = forms.iter().find(|g| g.product == product).expect("all products built");
    let group = classify(main)?;
    let coincides_with = forms
        .iter()
        .filter(|g| g.product != product && g.same_form(main))
        .map(|g| g.product)
        .collect();
    Ok(TableRow {
        p: sig.p(),
        q: sig.q(),
        k,
        n: space.n(),
        class: space.class(),
        product,
        group,
        coincides_with,
    })
}

/// Every signature with `p + q <= max_n`, computed in parallel and returned
/// in `(p + q, p)` order.
pub fn table_sweep(max_n: u32, product: ProductKind) -> Result<Vec<TableRow>> {
    sweep_signatures(max_n)?
        .into_par_iter()
        .map(|sig| table_row(sig, product))
        .collect()
}
