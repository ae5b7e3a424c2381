use std::fmt;

use num_traits::Signed;

use super::{GramForm, LeftInvolution};
use crate::error::{Error, Result};
use crate::spinors::{KClass, Quaternion};

/// A classical group named from Gram data. `(r, s)` is stored with
/// `r >= s`; `s = 0` is the compact (definite) case.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupFamily {
    /// `O(N)` / `O(r,s)`.
    Orthogonal { r: usize, s: usize },
    /// `U(N)` / `U(r,s)`.
    Unitary { r: usize, s: usize },
    /// `Sp(N) = U_ℍ(N)` / `U_{r,s}ℍ`.
    QuaternionicUnitary { r: usize, s: usize },
    /// `Sp(N,ℝ)`.
    RealSymplectic(usize),
    /// `O(N,ℂ)`.
    ComplexOrthogonal(usize),
    /// `Sp(N,ℂ)`.
    ComplexSymplectic(usize),
    /// `O*(2N)`, preserving a skew-Hermitian quaternionic form.
    QuaternionicSkew(usize),
    /// `GL(N,K)`: the form vanishes.
    General { n: usize, field: KClass },
}

fn ordered(r: usize, s: usize) -> (usize, usize) {
    if r >= s {
        (r, s)
    } else {
        (s, r)
    }
}

impl GroupFamily {
    pub fn render(&self) -> String {
        match *self {
            GroupFamily::Orthogonal { r, s: 0 } => format!("O({r})"),
            GroupFamily::Orthogonal { r, s } => format!("O({r},{s})"),
            GroupFamily::Unitary { r, s: 0 } => format!("U({r})"),
            GroupFamily::Unitary { r, s } => format!("U({r},{s})"),
            GroupFamily::QuaternionicUnitary { r, s: 0 } => format!("Sp({r})"),
            GroupFamily::QuaternionicUnitary { r, s } => format!("U_{{{r},{s}}}ℍ"),
            GroupFamily::RealSymplectic(n) => format!("Sp({n},ℝ)"),
            GroupFamily::ComplexOrthogonal(n) => format!("O({n},ℂ)"),
            GroupFamily::ComplexSymplectic(n) => format!("Sp({n},ℂ)"),
            GroupFamily::QuaternionicSkew(n) => format!("O*({})", 2 * n),
            GroupFamily::General { n, field } => format!("GL({n},{})", field.base().symbol()),
        }
    }
}

/// The automorphism group of a form, one family per component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupName {
    pub components: Vec<GroupFamily>,
    /// The left slot carries a star-type map rather than the conjugation
    /// of `K`; the name is that of the equivalent standard form.
    pub nonstandard: bool,
    /// Naming used in Lounesto's tables, where it differs.
    pub alias: Option<String>,
}

impl GroupName {
    /// `O(4)`, `²O(2)`, or `X × Y` when the components differ.
    pub fn render(&self) -> String {
        match self.components.as_slice() {
            [one] => one.render(),
            [a, b] if a == b => format!("²{}", a.render()),
            many => many.iter().map(GroupFamily::render).collect::<Vec<_>>().join(" × "),
        }
    }
}

impl fmt::Display for GroupName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// `(r, s, z)`: numbers of positive, negative and zero squares of a
/// Hermitian matrix over ℍ (covering ℝ and ℂ entries), by congruence
/// diagonalization.
pub fn hermitian_signature(m: &[Vec<Quaternion>]) -> (usize, usize, usize) {
    let n = m.len();
    let mut a: Vec<Vec<Quaternion>> = m.to_vec();
    let (mut pos, mut neg) = (0, 0);
    let mut k = 0;
    while k < n {
        let diag = (k..n).find(|&i| !a[i][i].is_zero());
        let i = match diag {
            Some(i) => i,
            None => {
                let Some((x, y)) = (k..n)
                    .flat_map(|x| (k..n).map(move |y| (x, y)))
                    .find(|&(x, y)| !a[x][y].is_zero())
                else {
                    break;
                };
                // e_x <- e_x + e_y c with c = conj(a_xy): new a_xx = 2|a_xy|^2.
                let c = a[x][y].conj();
                let cb = c.conj();
                for j in 0..n {
                    let t = &cb * &a[y][j];
                    a[x][j] = &a[x][j] + &t;
                }
                for r in 0..n {
                    let t = &a[r][y] * &c;
                    a[r][x] = &a[r][x] + &t;
                }
                x
            }
        };
        a.swap(i, k);
        for row in a.iter_mut() {
            row.swap(i, k);
        }
        let d = a[k][k].re.clone();
        debug_assert!(a[k][k].is_real());
        if d.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        let dinv = d.recip();
        for r in k + 1..n {
            if a[r][k].is_zero() {
                continue;
            }
            // e_r <- e_r + e_k c with c = -d^{-1} a_kr.
            let c = a[k][r].scale(&-dinv.clone());
            let cb = c.conj();
            for j in 0..n {
                let t = &cb * &a[k][j];
                a[r][j] = &a[r][j] + &t;
            }
            for row in a.iter_mut() {
                let t = &row[k] * &c;
                row[r] = &row[r] + &t;
            }
        }
        k += 1;
    }
    (pos, neg, n - pos - neg)
}

fn transpose_relation(m: &[Vec<Quaternion>], conj: bool) -> Option<i8> {
    let n = m.len();
    let map = |q: &Quaternion| if conj { q.conj() } else { q.clone() };
    let holds = |eps: i8| {
        (0..n).all(|i| {
            (0..n).all(|j| {
                let t = map(&m[i][j]);
                let t = if eps < 0 { -&t } else { t };
                m[j][i] == t
            })
        })
    };
    if holds(1) {
        Some(1)
    } else if holds(-1) {
        Some(-1)
    } else {
        None
    }
}

fn nondegenerate(sig: (usize, usize, usize), what: &str) -> Result<(usize, usize)> {
    if sig.2 != 0 {
        return Err(Error::Unclassifiable(format!("{what} is degenerate (rank deficit {})", sig.2)));
    }
    Ok(ordered(sig.0, sig.1))
}

fn classify_component(
    class: KClass,
    inv: LeftInvolution,
    m: &[Vec<Quaternion>],
) -> Result<GroupFamily> {
    let n = m.len();
    let unmatched = |what: &str| Error::Unclassifiable(format!("{} form over {class} is {what}", inv.describe()));
    match (class.base(), inv) {
        (KClass::R, _) => match transpose_relation(m, false) {
            Some(1) => {
                let (r, s) = nondegenerate(hermitian_signature(m), "symmetric form")?;
                Ok(GroupFamily::Orthogonal { r, s })
            }
            Some(_) => Ok(GroupFamily::RealSymplectic(n)),
            None => Err(unmatched("neither symmetric nor antisymmetric")),
        },
        (KClass::C, LeftInvolution::Identity) => match transpose_relation(m, false) {
            Some(1) => Ok(GroupFamily::ComplexOrthogonal(n)),
            Some(_) => Ok(GroupFamily::ComplexSymplectic(n)),
            None => Err(unmatched("neither symmetric nor antisymmetric")),
        },
        (KClass::C, LeftInvolution::Conjugation) => {
            let herm = match transpose_relation(m, true) {
                Some(1) => m.to_vec(),
                Some(_) => {
                    let i = Quaternion::unit(1);
                    m.iter().map(|row| row.iter().map(|x| &i * x).collect()).collect()
                }
                None => return Err(unmatched("neither Hermitian nor skew-Hermitian")),
            };
            let (r, s) = nondegenerate(hermitian_signature(&herm), "Hermitian form")?;
            Ok(GroupFamily::Unitary { r, s })
        }
        (KClass::H, LeftInvolution::Conjugation) => match transpose_relation(m, true) {
            Some(1) => {
                let (r, s) = nondegenerate(hermitian_signature(m), "quaternionic Hermitian form")?;
                Ok(GroupFamily::QuaternionicUnitary { r, s })
            }
            Some(_) => Ok(GroupFamily::QuaternionicSkew(n)),
            None => Err(unmatched("neither Hermitian nor skew-Hermitian")),
        },
        (KClass::H, LeftInvolution::Star { unit }) => {
            let u = Quaternion::unit(unit);
            let converted: Vec<Vec<Quaternion>> =
                m.iter().map(|row| row.iter().map(|x| &u * x).collect()).collect();
            classify_component(class, LeftInvolution::Conjugation, &converted)
        }
        _ => Err(unmatched("not covered by the decision tree")),
    }
}

/// Names the automorphism group of a Gram form.
///
/// A vanishing component gives `GL(N,K)`. A star-type quaternionic form
/// `B` is replaced by the standard form `uB`, and the result is flagged.
pub fn classify(g: &GramForm) -> Result<GroupName> {
    let mut components = Vec::new();
    let mut nonstandard = false;
    for (c, inv) in g.involutions.iter().enumerate() {
        let family = match inv {
            None => GroupFamily::General {
                n: g.n(),
                field: g.class.base(),
            },
            Some(inv) => {
                nonstandard |= !inv.is_standard();
                classify_component(g.class, *inv, &g.component(c))?
            }
        };
        components.push(family);
    }
    let alias = match components.first() {
        Some(GroupFamily::QuaternionicUnitary { r, s }) if *s > 0 => Some(format!("Sp({},{})", 2 * r, 2 * s)),
        _ => None,
    };
    Ok(GroupName {
        components,
        nonstandard,
        alias,
    })
}
