//! Printed coordinate expansions of `Tε(ψ)φ`, `β₊` and `β₋` for Cl(2,2),
//! Cl(1,2) and Cl(1,3), compared term by term with the engine.
//!
//! A spinor is `Σ_i m_i f ψ_i` with `ψ_i = Σ_j ψ_ij u_j` over the units
//! `u_j` of `K` (`1, e2` for Cl(1,2); `1, e2, e3, e23` for Cl(1,3)); for
//! `K = ℝ` the single index `i` is used.

#![allow(dead_code)]

use std::collections::BTreeMap;

use clifftwist_core::algebra::scalar;
use clifftwist_core::forms::{ProductKind, ScalarProduct};
use clifftwist_core::sampling;
use clifftwist_core::spinors::{clidata, KElement, SpinorSpace};
use clifftwist_core::{Scalar, Signature};

/// `coeff * ψ_a φ_b` contributing to output unit `out`.
pub type Tensor = BTreeMap<(usize, usize, usize), i64>;

pub struct Poly {
    d: usize,
    terms: Tensor,
}

impl Poly {
    fn new(d: usize) -> Self {
        Poly { d, terms: Tensor::new() }
    }

    fn pos(&self, label: &str) -> usize {
        let digits: Vec<usize> = label.chars().map(|c| c.to_digit(10).unwrap() as usize).collect();
        match digits.as_slice() {
            [i] => i - 1,
            [i, j] => (i - 1) * self.d + (j - 1),
            _ => panic!("bad label {label}"),
        }
    }

    fn add(&mut self, out: usize, c: i64, a: &str, b: &str) {
        let key = (out, self.pos(a), self.pos(b));
        *self.terms.entry(key).or_insert(0) += c;
        if self.terms[&key] == 0 {
            self.terms.remove(&key);
        }
    }

    /// `c ψ_a φ_b`
    fn t(mut self, out: usize, c: i64, a: &str, b: &str) -> Self {
        self.add(out, c, a, b);
        self
    }

    /// `c ⟨a,b⟩ = c (ψ_a φ_b − ψ_b φ_a)`
    fn anti(mut self, out: usize, c: i64, a: &str, b: &str) -> Self {
        self.add(out, c, a, b);
        self.add(out, -c, b, a);
        self
    }

    /// `c {a,b} = c (ψ_a φ_b + ψ_b φ_a)`
    fn sym(mut self, out: usize, c: i64, a: &str, b: &str) -> Self {
        self.add(out, c, a, b);
        self.add(out, c, b, a);
        self
    }

    fn eval(&self, psi: &[Scalar], phi: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![scalar::zero(); self.d];
        for (&(o, a, b), &c) in &self.terms {
            out[o] += scalar::int(c) * &psi[a] * &phi[b];
        }
        out
    }
}

fn space(p: u32, q: u32) -> SpinorSpace {
    SpinorSpace::new(clidata(Signature::new(p, q).unwrap()).unwrap()).unwrap()
}

fn spinor_from_reals(space: &SpinorSpace, x: &[Scalar]) -> clifftwist_core::spinors::Spinor {
    let d = space.class().component_dim();
    let coords: Vec<KElement> = x.chunks(d).map(|c| KElement::from_coords(space.class(), c)).collect();
    space.spinor(&coords)
}

fn engine_value(space: &SpinorSpace, kind: ProductKind, psi: &[Scalar], phi: &[Scalar]) -> Vec<Scalar> {
    let product = ScalarProduct::new(space, kind);
    let v = product
        .eval(&spinor_from_reals(space, psi), &spinor_from_reals(space, phi))
        .unwrap();
    v.coords()
}

/// Bilinear coefficient tensor of the engine's product, read off unit
/// coordinate vectors.
fn engine_tensor(space: &SpinorSpace, kind: ProductKind) -> Tensor {
    let dim = space.n() * space.class().component_dim();
    let unit = |a: usize| -> Vec<Scalar> {
        (0..dim).map(|i| if i == a { scalar::one() } else { scalar::zero() }).collect()
    };
    let mut t = Tensor::new();
    for a in 0..dim {
        for b in 0..dim {
            for (o, c) in engine_value(space, kind, &unit(a), &unit(b)).into_iter().enumerate() {
                if c != scalar::zero() {
                    assert!(c.is_integer(), "non-integral coefficient {c}");
                    t.insert((o, a, b), c.to_integer().try_into().unwrap());
                }
            }
        }
    }
    t
}

/// Compares the engine with a printed polynomial: the full coefficient
/// tensor, then values on a few generic rational vectors.
pub fn check(p: u32, q: u32, kind: ProductKind, poly: &Poly) -> Result<(), String> {
    let space = space(p, q);
    if poly.d != space.class().component_dim() {
        return Err(format!("Cl({p},{q}): K has dimension {}", space.class().component_dim()));
    }
    let engine = engine_tensor(&space, kind);
    if engine != poly.terms {
        let missing: Vec<_> = poly.terms.iter().filter(|(k, v)| engine.get(k) != Some(v)).collect();
        let extra: Vec<_> = engine.iter().filter(|(k, v)| poly.terms.get(k) != Some(v)).collect();
        return Err(format!("Cl({p},{q}) {kind}: printed-only terms {missing:?}, engine-only terms {extra:?}"));
    }
    let mut rng = sampling::rng(17 + (p * 10 + q) as u64);
    let dim = space.n() * poly.d;
    for _ in 0..5 {
        let x: Vec<Scalar> = (0..dim).map(|_| sampling::small_scalar(&mut rng)).collect();
        let y: Vec<Scalar> = (0..dim).map(|_| sampling::small_scalar(&mut rng)).collect();
        if engine_value(&space, kind, &x, &y) != poly.eval(&x, &y) {
            return Err(format!("Cl({p},{q}) {kind}: value mismatch on a rational test vector"));
        }
    }
    Ok(())
}
fn cl22() -> Vec<(u32, u32, ProductKind, Poly)> {
    let mut out = Vec::new();
    let mut tp = Poly::new(1);
    for i in ["1", "2", "3", "4"] {
        tp = tp.t(0, 1, i, i);
    }
    out.push((2, 2, ProductKind::Tp, tp));

    let bp = Poly::new(1).t(0, 1, "3", "2").t(0, -1, "2", "3").t(0, 1, "4", "1").t(0, -1, "1", "4");
    out.push((2, 2, ProductKind::BetaPlus, bp));

    let bm = Poly::new(1).t(0, 1, "4", "1").t(0, 1, "2", "3").t(0, -1, "1", "4").t(0, -1, "3", "2");
    out.push((2, 2, ProductKind::BetaMinus, bm));
    out
}

fn cl12() -> Vec<(u32, u32, ProductKind, Poly)> {
    let mut out = Vec::new();
    let tp = Poly::new(2)
        .t(0, 1, "11", "11")
        .t(0, 1, "22", "22")
        .t(0, 1, "21", "21")
        .t(0, 1, "12", "12")
        .t(1, 1, "21", "22")
        .t(1, -1, "22", "21")
        .t(1, 1, "11", "12")
        .t(1, -1, "12", "11");
    out.push((1, 2, ProductKind::Tp, tp));

    let bp = Poly::new(2)
        .t(0, 1, "11", "21")
        .t(0, 1, "22", "12")
        .t(0, 1, "21", "11")
        .t(0, 1, "12", "22")
        .t(1, 1, "21", "12")
        .t(1, -1, "22", "11")
        .t(1, 1, "11", "22")
        .t(1, -1, "12", "21");
    out.push((1, 2, ProductKind::BetaPlus, bp));

    let bm = Poly::new(2)
        .t(0, 1, "11", "21")
        .t(0, 1, "22", "12")
        .t(0, -1, "21", "11")
        .t(0, -1, "12", "22")
        .t(1, -1, "21", "12")
        .t(1, -1, "22", "11")
        .t(1, 1, "11", "22")
        .t(1, 1, "12", "21");
    out.push((1, 2, ProductKind::BetaMinus, bm));
    out
}

fn cl13() -> Vec<(u32, u32, ProductKind, Poly)> {
    let mut out = Vec::new();
    let mut tp = Poly::new(4);
    for i in 1..=2 {
        for j in 1..=4 {
            let l = format!("{i}{j}");
            tp = tp.t(0, 1, &l, &l);
        }
    }
    let tp = tp
        .anti(1, 1, "11", "12")
        .anti(1, -1, "13", "14")
        .anti(1, 1, "21", "22")
        .anti(1, -1, "23", "24")
        .anti(2, 1, "11", "13")
        .anti(2, 1, "12", "14")
        .anti(2, 1, "21", "23")
        .anti(2, 1, "22", "24")
        .anti(3, 1, "11", "14")
        .anti(3, -1, "12", "13")
        .anti(3, 1, "21", "24")
        .anti(3, -1, "22", "23");
    out.push((1, 3, ProductKind::Tp, tp));

    let bp = Poly::new(4)
        .sym(0, 1, "11", "21")
        .sym(0, 1, "12", "22")
        .sym(0, 1, "13", "23")
        .sym(0, 1, "14", "24")
        .anti(1, 1, "11", "22")
        .anti(1, -1, "12", "21")
        .anti(1, -1, "13", "24")
        .anti(1, 1, "14", "23")
        .anti(2, 1, "11", "23")
        .anti(2, 1, "12", "24")
        .anti(2, -1, "13", "21")
        .anti(2, -1, "14", "22")
        .anti(3, 1, "11", "24")
        .anti(3, -1, "12", "23")
        .anti(3, 1, "13", "22")
        .anti(3, 1, "21", "14");
    out.push((1, 3, ProductKind::BetaPlus, bp));

    let bm = Poly::new(4)
        .anti(0, 1, "11", "21")
        .anti(0, -1, "12", "22")
        .anti(0, -1, "13", "23")
        .anti(0, 1, "14", "24")
        .anti(1, 1, "11", "22")
        .anti(1, 1, "12", "21")
        .anti(1, 1, "13", "24")
        .anti(1, 1, "14", "23")
        .anti(2, 1, "11", "23")
        .anti(2, -1, "12", "24")
        .anti(2, 1, "13", "21")
        .anti(2, -1, "14", "22")
        .sym(3, 1, "11", "24")
        .sym(3, 1, "12", "23")
        .sym(3, -1, "13", "22")
        .sym(3, -1, "14", "21");
    out.push((1, 3, ProductKind::BetaMinus, bm));
    out
}

/// Every printed expansion, as `(p, q, product, polynomial)`.
pub fn printed_cases() -> Vec<(u32, u32, ProductKind, Poly)> {
    let mut out = cl22();
    out.extend(cl12());
    out.extend(cl13());
    out
}

/// The two printed 4×4 Gram matrices of Cl(2,2).
pub fn check_cl22_gram() -> Result<(), String> {
    use clifftwist_core::forms::gram;
    let space = space(2, 2);
    let as_ints = |kind| -> Vec<Vec<i64>> {
        gram(&space, kind)
            .unwrap()
            .gram
            .iter()
            .map(|row| row.iter().map(|x| x.parts[0].re.to_integer().try_into().unwrap()).collect())
            .collect()
    };
    let bp = vec![vec![0, 0, 0, -1], vec![0, 0, -1, 0], vec![0, 1, 0, 0], vec![1, 0, 0, 0]];
    let bm = vec![vec![0, 0, 0, -1], vec![0, 0, 1, 0], vec![0, -1, 0, 0], vec![1, 0, 0, 0]];
    if as_ints(ProductKind::BetaPlus) != bp || as_ints(ProductKind::BetaMinus) != bm {
        return Err("Cl(2,2) β± Gram matrices differ from the printed ones".into());
    }
    Ok(())
}
