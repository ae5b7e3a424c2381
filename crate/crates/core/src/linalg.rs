//! Exact sparse linear algebra over the rationals.
//!
//! Vectors are sparse maps from a monomial mask to a nonzero coefficient,
//! which is exactly the shape of [`Multivector`](crate::Multivector) terms.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::algebra::Scalar;

pub type SparseVec = BTreeMap<u32, Scalar>;

/// `v -= c * w`, dropping cancelled entries.
fn axpy_neg(v: &mut SparseVec, c: &Scalar, w: &SparseVec) {
    for (k, x) in w {
        let entry = v.entry(*k).or_insert_with(Scalar::zero);
        *entry -= c * x;
        if entry.is_zero() {
            v.remove(k);
        }
    }
}

/// Incremental row echelon form. Each stored row is scaled so its pivot
/// coefficient is 1, and no row has a nonzero entry at another row's pivot.
#[derive(Debug, Clone, Default)]
pub struct Echelon {
    rows: Vec<SparseVec>,
    pivots: Vec<u32>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> &[u32] {
        &self.pivots
    }

    /// Residual of `v` after eliminating every stored pivot.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut r = v.clone();
        for (row, p) in self.rows.iter().zip(&self.pivots) {
            if let Some(c) = r.get(p).cloned() {
                axpy_neg(&mut r, &c, row);
            }
        }
        r
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let mut r = self.reduce(v);
        let Some((&p, lead)) = r.iter().next() else {
            return false;
        };
        let inv = lead.recip();
        for x in r.values_mut() {
            *x *= &inv;
        }
        for row in &mut self.rows {
            if let Some(c) = row.get(&p).cloned() {
                axpy_neg(row, &c, &r);
            }
        }
        self.rows.push(r);
        self.pivots.push(p);
        true
    }
}

/// Rank of a family of sparse vectors.
pub fn rank<'a, I: IntoIterator<Item = &'a SparseVec>>(vectors: I) -> usize {
    let mut e = Echelon::new();
    for v in vectors {
        e.insert(v);
    }
    e.rank()
}

/// Gauss-Jordan inverse of a dense square matrix; `None` if singular.
pub fn invert(m: &[Vec<Scalar>]) -> Option<Vec<Vec<Scalar>>> {
    let d = m.len();
    let mut a: Vec<Vec<Scalar>> = m.to_vec();
    let mut inv: Vec<Vec<Scalar>> = (0..d)
        .map(|i| (0..d).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }).collect())
        .collect();
    for col in 0..d {
        let pivot = (col..d).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let s = a[col][col].recip();
        for j in 0..d {
            a[col][j] *= &s;
            inv[col][j] *= &s;
        }
        for r in 0..d {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let c = a[r][col].clone();
            for j in 0..d {
                let t = &c * &a[col][j];
                a[r][j] -= t;
                let t = &c * &inv[col][j];
                inv[r][j] -= t;
            }
        }
    }
    Some(inv)
}

/// Coordinates with respect to a fixed linearly independent family.
///
/// A set of pivot positions `P` with `B_P` invertible is found once; each
/// query is then `x = B_P^{-1} v_P` followed by a membership check.
#[derive(Debug, Clone)]
pub struct CoordinateSolver {
    basis: Vec<SparseVec>,
    pivots: Vec<u32>,
    inverse: Vec<Vec<Scalar>>,
}

impl CoordinateSolver {
    /// `None` if the family is linearly dependent.
    pub fn new(basis: Vec<SparseVec>) -> Option<Self> {
        let mut e = Echelon::new();
        for b in &basis {
            if !e.insert(b) {
                return None;
            }
        }
        let pivots = e.pivots().to_vec();
        let a: Vec<Vec<Scalar>> = pivots
            .iter()
            .map(|p| basis.iter().map(|b| b.get(p).cloned().unwrap_or_else(Scalar::zero)).collect())
            .collect();
        let inverse = invert(&a)?;
        Some(CoordinateSolver {
            basis,
            pivots,
            inverse,
        })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[SparseVec] {
        &self.basis
    }

    /// Coordinates assuming `v` lies in the span.
    pub fn solve_unchecked(&self, v: &SparseVec) -> Vec<Scalar> {
        let rhs: Vec<Option<&Scalar>> = self.pivots.iter().map(|p| v.get(p)).collect();
        self.inverse
            .iter()
            .map(|row| {
                let mut acc = Scalar::zero();
                for (a, b) in row.iter().zip(&rhs) {
                    if let Some(b) = b {
                        if !a.is_zero() {
                            acc += a * *b;
                        }
                    }
                }
                acc
            })
            .collect()
    }

    /// Coordinates of `v`, or `None` if it is outside the span.
    pub fn solve(&self, v: &SparseVec) -> Option<Vec<Scalar>> {
        let x = self.solve_unchecked(v);
        let mut r = v.clone();
        for (c, b) in x.iter().zip(&self.basis) {
            if !c.is_zero() {
                axpy_neg(&mut r, c, b);
            }
        }
        r.is_empty().then_some(x)
    }

    /// `Σ x_i b_i`.
    pub fn combine(&self, x: &[Scalar]) -> SparseVec {
        let mut out = SparseVec::new();
        for (c, b) in x.iter().zip(&self.basis) {
            if !c.is_zero() {
                axpy_neg(&mut out, &-c.clone(), b);
            }
        }
        out
    }
}
