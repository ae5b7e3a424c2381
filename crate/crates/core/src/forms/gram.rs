use serde::Serialize;

use super::{ProductKind, ScalarProduct};
use crate::algebra::Signature;
use crate::error::{Error, Result};
use crate::groups::VeeElement;
use crate::spinors::{KClass, KElement, Quaternion, SpinorSpace};

/// The map `τ` on `K` with `B(ψλ, φ) = τ(λ) B(ψ, φ)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum LeftInvolution {
    /// `B` is bilinear over `K` (only possible for ℝ and ℂ).
    Identity,
    /// The conjugation of `K` (complex or quaternionic).
    Conjugation,
    /// A quaternionic anti-involution fixing `1` and two imaginary units and
    /// negating the remaining one (`unit` = 1, 2, 3 for i, j, k); equals
    /// `x ↦ u^{-1} x̄ u` for that unit `u`.
    Star { unit: usize },
}

impl LeftInvolution {
    pub fn is_standard(self) -> bool {
        !matches!(self, LeftInvolution::Star { .. })
    }

    pub fn apply(self, q: &Quaternion) -> Quaternion {
        match self {
            LeftInvolution::Identity => q.clone(),
            LeftInvolution::Conjugation => q.conj(),
            LeftInvolution::Star { unit } => {
                let mut c: Vec<_> = q.coords().into_iter().cloned().collect();
                c[unit] = -c[unit].clone();
                Quaternion::from_coords(&c)
            }
        }
    }

    pub fn describe(self) -> String {
        match self {
            LeftInvolution::Identity => "none".into(),
            LeftInvolution::Conjugation => "k-conjugation".into(),
            LeftInvolution::Star { unit } => {
                format!("star (negates {})", ["1", "i", "j", "k"][unit])
            }
        }
    }
}

/// `G_ij = B(m_i f, m_j f)` over the data7 basis, with the left-slot
/// involution of each component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GramForm {
    pub sig: Signature,
    pub class: KClass,
    pub product: ProductKind,
    pub s: Option<VeeElement>,
    /// One entry per component; `None` where the form vanishes.
    pub involutions: Vec<Option<LeftInvolution>>,
    pub gram: Vec<Vec<KElement>>,
}

impl GramForm {
    pub fn n(&self) -> usize {
        self.gram.len()
    }

    /// Component `c` as a plain quaternion matrix.
    pub fn component(&self, c: usize) -> Vec<Vec<Quaternion>> {
        self.gram
            .iter()
            .map(|row| row.iter().map(|x| x.parts[c].clone()).collect())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.gram.iter().flatten().all(KElement::is_zero)
    }

    /// Same Gram data and same left involution: the two forms agree on all
    /// spinor pairs.
    pub fn same_form(&self, other: &GramForm) -> bool {
        self.gram == other.gram && self.involutions == other.involutions
    }

    pub fn is_identity(&self) -> bool {
        let n = self.n();
        (0..n).all(|i| {
            (0..n).all(|j| {
                let want = if i == j {
                    KElement::one(self.class)
                } else {
                    KElement::zero(self.class)
                };
                self.gram[i][j] == want
            })
        })
    }
}

fn involution_from_signs(class: KClass, signs: &[i8]) -> Result<LeftInvolution> {
    match class.component_dim() {
        1 => Ok(LeftInvolution::Identity),
        2 => Ok(if signs[0] > 0 {
            LeftInvolution::Identity
        } else {
            LeftInvolution::Conjugation
        }),
        _ => {
            let negated: Vec<usize> = (0..3).filter(|&t| signs[t] < 0).collect();
            match negated.as_slice() {
                [_, _, _] => Ok(LeftInvolution::Conjugation),
                [u] => Ok(LeftInvolution::Star { unit: u + 1 }),
                _ => Err(Error::Unclassifiable(format!(
                    "left-slot map with unit signs {signs:?} is not an anti-involution of ℍ"
                ))),
            }
        }
    }
}

/// Assemble the Gram matrix of `kind` and determine `τ` per component.
///
/// `τ(β_t)` is read off one nonzero entry as `B(m_i f β_t, m_j f) G_ij^{-1}`
/// and then checked against every entry.
pub fn gram(space: &SpinorSpace, kind: ProductKind) -> Result<GramForm> {
    let product = ScalarProduct::new(space, kind);
    let n = space.n();
    let class = space.class();
    let basis: Vec<_> = (0..n).map(|j| space.basis_spinor(j)).collect();
    let g: Vec<Vec<KElement>> = basis
        .iter()
        .map(|a| basis.iter().map(|b| product.eval(a, b)).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;

    let d = class.component_dim();
    // shifted[t][i][j] = B(m_i f β_t, m_j f)
    let shifted: Vec<Vec<Vec<KElement>>> = (1..d)
        .map(|t| {
            let unit = KElement::splat(class, Quaternion::unit(t));
            basis
                .iter()
                .map(|a| {
                    let at = space.right_mul_k(a, &unit);
                    basis.iter().map(|b| product.eval(&at, b)).collect::<Result<Vec<_>>>()
                })
                .collect::<Result<_>>()
        })
        .collect::<Result<_>>()?;

    let mut involutions = Vec::new();
    for c in 0..class.components() {
        let pivot = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .find(|&(i, j)| !g[i][j].parts[c].is_zero());
        let Some((pi, pj)) = pivot else {
            involutions.push(None);
            continue;
        };
        let inv = g[pi][pj].parts[c].inverse().expect("nonzero");
        let mut signs = Vec::new();
        for t in 1..d {
            let tau = &shifted[t - 1][pi][pj].parts[c] * &inv;
            let unit = Quaternion::unit(t);
            let sign = if tau == unit {
                1
            } else if tau == -&unit {
                -1
            } else {
                return Err(Error::Unclassifiable(format!(
                    "{kind} on {}: τ(unit {t}) = {} is not ±unit",
                    space.sig(),
                    tau.render()
                )));
            };
            for i in 0..n {
                for j in 0..n {
                    let lhs = &shifted[t - 1][i][j].parts[c];
                    let rhs = (&unit * &g[i][j].parts[c]).scale(&crate::algebra::scalar::int(sign as i64));
                    if *lhs != rhs {
                        return Err(Error::Unclassifiable(format!(
                            "{kind} on {}: left slot is not τ-semilinear",
                            space.sig()
                        )));
                    }
                }
            }
            signs.push(sign);
        }
        involutions.push(Some(involution_from_signs(class, &signs)?));
    }

    Ok(GramForm {
        sig: space.sig(),
        class,
        product: kind,
        s: product.s(),
        involutions,
        gram: g,
    })
}
