use std::fmt;

use super::{CliData, KClass, KElement, Quaternion};
use crate::algebra::{Multivector, Signature};
use crate::error::{Error, Result};
use crate::groups::VeeElement;
use crate::linalg::CoordinateSolver;

/// A spinor: one ideal element per component (`ψ ∈ S`, or `(ψ, ψ_g)` in
/// `S ⊕ Ŝ` for semisimple algebras).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spinor {
    pub parts: Vec<Multivector>,
}

impl Spinor {
    pub fn sig(&self) -> Signature {
        self.parts[0].sig()
    }
}

#[derive(Debug, Clone)]
struct Component {
    idempotent: Multivector,
    k_solver: CoordinateSolver,
    s_solver: CoordinateSolver,
}

/// `S = Cl f` (or `Š = S ⊕ Ŝ`) as a right `K`-module with basis
/// `{m_j f : m_j ∈ data7}`.
///
/// Inside each component, `K` has real basis `β_t f` with
/// `β = [1, b₁, b₂, b₁b₂]` truncated to `dim K`, where `b₁, b₂` are the
/// first non-unit entries of data6. `b₁ ↦ i`, `b₂ ↦ j`, `b₁b₂ ↦ k`.
#[derive(Debug, Clone)]
pub struct SpinorSpace {
    cd: CliData,
    k_units: Vec<VeeElement>,
    basis: Vec<VeeElement>,
    components: Vec<Component>,
}

impl SpinorSpace {
    pub fn new(cd: CliData) -> Result<Self> {
        let sig = cd.sig;
        let class = cd.class;
        let d = class.component_dim();
        let mut k_units = vec![VeeElement::ONE];
        if d >= 2 {
            k_units.push(VeeElement::positive(cd.data6[1]));
        }
        if d == 4 {
            let b1 = VeeElement::positive(cd.data6[1]);
            let b2 = VeeElement::positive(cd.data6[2]);
            debug_assert!(!b1.commutes_with(b2));
            k_units.push(b2);
            k_units.push(b1.mul(b2, sig));
        }
        let basis: Vec<VeeElement> = cd.data7.iter().map(|&m| VeeElement::positive(m)).collect();

        let f = cd.idempotent.value().clone();
        let idempotents = if cd.semisimple {
            vec![f.clone(), f.grade_involution()]
        } else {
            vec![f]
        };
        let components = idempotents
            .into_iter()
            .map(|e| {
                let unit_times = |g: VeeElement| e.left_mul_monomial(g.sign, g.mono);
                let k_basis = k_units.iter().map(|&b| unit_times(b).as_map().clone()).collect();
                let s_basis = basis
                    .iter()
                    .flat_map(|&m| k_units.iter().map(move |&b| m.mul(b, sig)))
                    .map(|g| unit_times(g).as_map().clone())
                    .collect();
                Ok(Component {
                    k_solver: CoordinateSolver::new(k_basis).ok_or(Error::NotInDivisionRing)?,
                    s_solver: CoordinateSolver::new(s_basis).ok_or(Error::NotInIdeal)?,
                    idempotent: e,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SpinorSpace {
            cd,
            k_units,
            basis,
            components,
        })
    }

    pub fn clidata(&self) -> &CliData {
        &self.cd
    }

    pub fn sig(&self) -> Signature {
        self.cd.sig
    }

    pub fn class(&self) -> KClass {
        self.cd.class
    }

    /// `N`, the number of `K`-coordinates.
    pub fn n(&self) -> usize {
        self.cd.n
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    /// `f` or `f̂` for component `c`.
    pub fn idempotent(&self, c: usize) -> &Multivector {
        &self.components[c].idempotent
    }

    /// The signed monomials `β_t` representing `1, i, j, k`.
    pub fn k_units(&self) -> &[VeeElement] {
        &self.k_units
    }

    /// The `K`-basis monomials `m_j` (data7).
    pub fn basis(&self) -> &[VeeElement] {
        &self.basis
    }

    /// `λ` with `x = λ f_c`, where `x` must lie in `f_c Cl f_c`.
    pub fn k_value(&self, c: usize, x: &Multivector) -> Result<Quaternion> {
        let coords = self.components[c]
            .k_solver
            .solve(x.as_map())
            .ok_or(Error::NotInDivisionRing)?;
        Ok(Quaternion::from_coords(&coords))
    }

    /// `Σ_t λ_t β_t f_c`.
    pub fn k_multivector(&self, c: usize, q: &Quaternion) -> Multivector {
        let e = &self.components[c].idempotent;
        let mut out = Multivector::zero(self.sig());
        for (&b, x) in self.k_units.iter().zip(q.coords()) {
            out = &out + &e.left_mul_monomial(b.sign, b.mono).scale(x);
        }
        out
    }

    /// Embeds `λ ∈ Ǩ` as a tuple of multivectors, one per component.
    pub fn k_element_parts(&self, lambda: &KElement) -> Vec<Multivector> {
        (0..self.components.len())
            .map(|c| self.k_multivector(c, &lambda.parts[c]))
            .collect()
    }

    /// Reads `λ` off per-component products lying in `f_c Cl f_c`.
    pub fn k_element(&self, parts: &[Multivector]) -> Result<KElement> {
        let qs = parts
            .iter()
            .enumerate()
            .map(|(c, x)| self.k_value(c, x))
            .collect::<Result<Vec<_>>>()?;
        Ok(KElement::from_parts(self.class(), qs))
    }

    /// Coordinates `λ_j` with `ψ = Σ_j (m_j f) λ_j` (right `K`-module).
    pub fn coords(&self, psi: &Spinor) -> Result<Vec<KElement>> {
        if psi.parts.len() != self.components.len() {
            return Err(Error::NotInIdeal);
        }
        let d = self.class().component_dim();
        let per_component = self
            .components
            .iter()
            .zip(&psi.parts)
            .map(|(comp, x)| comp.s_solver.solve(x.as_map()).ok_or(Error::NotInIdeal))
            .collect::<Result<Vec<_>>>()?;
        Ok((0..self.n())
            .map(|j| {
                let parts = per_component
                    .iter()
                    .map(|x| Quaternion::from_coords(&x[j * d..(j + 1) * d]))
                    .collect();
                KElement::from_parts(self.class(), parts)
            })
            .collect())
    }

    /// `Σ_j (m_j f) λ_j`.
    pub fn spinor(&self, coords: &[KElement]) -> Spinor {
        let sig = self.sig();
        let parts = (0..self.components.len())
            .map(|c| {
                let mut out = Multivector::zero(sig);
                for (m, lambda) in self.basis.iter().zip(coords) {
                    let term = self.k_multivector(c, &lambda.parts[c]).left_mul_monomial(m.sign, m.mono);
                    out = &out + &term;
                }
                out
            })
            .collect();
        Spinor { parts }
    }

    /// `m_j f` (in every component).
    pub fn basis_spinor(&self, j: usize) -> Spinor {
        let m = self.basis[j];
        Spinor {
            parts: self
                .components
                .iter()
                .map(|c| c.idempotent.left_mul_monomial(m.sign, m.mono))
                .collect(),
        }
    }

    /// `u ψ`.
    pub fn act(&self, u: &Multivector, psi: &Spinor) -> Spinor {
        Spinor {
            parts: psi.parts.iter().map(|x| u * x).collect(),
        }
    }

    /// `ψ λ`.
    pub fn right_mul_k(&self, psi: &Spinor, lambda: &KElement) -> Spinor {
        Spinor {
            parts: psi
                .parts
                .iter()
                .enumerate()
                .map(|(c, x)| x * &self.k_multivector(c, &lambda.parts[c]))
                .collect(),
        }
    }

    /// Matrix of left multiplication by `u`: column `j` holds the
    /// coordinates of `u m_j f`.
    pub fn rep_matrix(&self, u: &Multivector) -> Result<SpinorMatrix> {
        let n = self.n();
        let cols = (0..n)
            .map(|j| self.coords(&self.act(u, &self.basis_spinor(j))))
            .collect::<Result<Vec<_>>>()?;
        let entries = (0..n).map(|i| (0..n).map(|j| cols[j][i].clone()).collect()).collect();
        Ok(SpinorMatrix {
            class: self.class(),
            entries,
        })
    }
}

/// `[Tε(u)] = [u]^T`, `[u]^†` or `[u]^‡`: the conjugate transpose with the
/// conjugation of `K` (trivial over ℝ).
pub fn dagger_check(u: &Multivector, space: &SpinorSpace) -> Result<bool> {
    let lhs = space.rep_matrix(&u.transposition())?;
    let rhs = space.rep_matrix(u)?.conjugate_transpose();
    Ok(lhs == rhs)
}

/// An `N × N` matrix over `K` (or `Ǩ`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpinorMatrix {
    pub class: KClass,
    pub entries: Vec<Vec<KElement>>,
}

impl SpinorMatrix {
    pub fn identity(class: KClass, n: usize) -> Self {
        SpinorMatrix {
            class,
            entries: (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| if i == j { KElement::one(class) } else { KElement::zero(class) })
                        .collect()
                })
                .collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &KElement {
        &self.entries[i][j]
    }

    pub fn mul(&self, other: &SpinorMatrix) -> SpinorMatrix {
        let n = self.n();
        let entries = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        (0..n).fold(KElement::zero(self.class), |acc, t| {
                            &acc + &(&self.entries[i][t] * &other.entries[t][j])
                        })
                    })
                    .collect()
            })
            .collect();
        SpinorMatrix {
            class: self.class,
            entries,
        }
    }

    pub fn transpose(&self) -> SpinorMatrix {
        let n = self.n();
        SpinorMatrix {
            class: self.class,
            entries: (0..n)
                .map(|i| (0..n).map(|j| self.entries[j][i].clone()).collect())
                .collect(),
        }
    }

    /// Transpose with entrywise `K`-conjugation.
    pub fn conjugate_transpose(&self) -> SpinorMatrix {
        let n = self.n();
        SpinorMatrix {
            class: self.class,
            entries: (0..n)
                .map(|i| (0..n).map(|j| self.entries[j][i].k_conjugate()).collect())
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(KElement::is_zero)
    }
}

impl fmt::Display for SpinorMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(KElement::render).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}
