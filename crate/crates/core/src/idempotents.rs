//! Primitive idempotents `f = ½(1 ± e_{i₁})···½(1 ± e_{i_k})`.

use crate::algebra::scalar;
use crate::algebra::{monomial_square_sign, Monomial, Multivector, Signature};
use crate::error::{Error, Result};
use crate::linalg::Echelon;

const RH_BASE: [i64; 8] = [0, 1, 2, 2, 3, 3, 3, 3];

/// Radon–Hurwitz number `r_i`, with `r_{i+8} = r_i + 4` in both directions.
pub fn radon_hurwitz(i: i64) -> i64 {
    RH_BASE[i.rem_euclid(8) as usize] + 4 * i.div_euclid(8)
}

/// `k = q - r_{q-p}`: the number of factors in a primitive idempotent.
pub fn idempotent_count(sig: Signature) -> u32 {
    let k = sig.q() as i64 - radon_hurwitz(sig.q() as i64 - sig.p() as i64);
    debug_assert!(k >= 0);
    k as u32
}

/// Real dimension of the division ring `fCl f` of one simple component.
pub fn division_ring_dim(sig: Signature) -> usize {
    match sig.residue8() {
        0 | 1 | 2 => 1,
        3 | 7 => 2,
        _ => 4,
    }
}

/// Matrix size `N`: `2^k` for simple algebras, `2^{k-1}` per component
/// for semisimple ones.
pub fn spinor_dim(sig: Signature) -> usize {
    let k = idempotent_count(sig);
    if sig.is_semisimple() {
        1 << (k - 1)
    } else {
        1 << k
    }
}

/// GF(2) independence of monomial masks, tracked as a xor basis.
#[derive(Clone, Default)]
struct XorBasis(Vec<u32>);

impl XorBasis {
    fn reduce(&self, mut x: u32) -> u32 {
        for &b in &self.0 {
            x = x.min(x ^ b);
        }
        x
    }

    fn insert(&mut self, x: u32) -> bool {
        let r = self.reduce(x);
        if r == 0 {
            return false;
        }
        self.0.push(r);
        self.0.sort_unstable_by(|a, b| b.cmp(a));
        true
    }
}

fn extend_commuting(
    sig: Signature,
    candidates: &[Monomial],
    start: usize,
    need: usize,
    chosen: &mut Vec<Monomial>,
    span: &XorBasis,
) -> bool {
    if need == 0 {
        return true;
    }
    for (idx, &m) in candidates.iter().enumerate().skip(start) {
        if !chosen.iter().all(|&c| c.commutes_with(m)) {
            continue;
        }
        let mut next = span.clone();
        if !next.insert(m.mask()) {
            continue;
        }
        chosen.push(m);
        if extend_commuting(sig, candidates, idx + 1, need - 1, chosen, &next) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// The `k` commuting, square-`+1`, independent monomials generating the
/// default primitive idempotent.
///
/// The last `min(p,q)` positive generators are paired in order with the last
/// `min(p,q)` negative ones (`e_{p-m+j} e_{n-m+j}`). Any remaining factors
/// come from a backtracking search in mask order and are listed first.
pub fn idempotent_generators(sig: Signature) -> Result<Vec<Monomial>> {
    let k = idempotent_count(sig) as usize;
    let (p, n) = (sig.p(), sig.n());
    let m = sig.p().min(sig.q());
    let pairs: Vec<Monomial> = (1..=m)
        .map(|j| Monomial::from_indices(&[p - m + j, n - m + j]))
        .collect();

    let mut span = XorBasis::default();
    for g in &pairs {
        span.insert(g.mask());
    }
    let candidates: Vec<Monomial> = sig
        .monomials()
        .filter(|&c| !c.is_one() && monomial_square_sign(c, sig) == 1)
        .filter(|&c| pairs.iter().all(|&g| g.commutes_with(c)))
        .collect();
    let mut chosen = pairs.clone();
    if !extend_commuting(sig, &candidates, 0, k - pairs.len(), &mut chosen, &span) {
        return Err(Error::NoIdempotentGenerators { sig, k });
    }
    let mut gens = chosen.split_off(pairs.len());
    gens.extend(pairs);
    Ok(gens)
}

/// A primitive idempotent in factored and expanded form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimitiveIdempotent {
    pub sig: Signature,
    pub gens: Vec<Monomial>,
    pub signs: Vec<i8>,
    value: Multivector,
}

fn expand(sig: Signature, gens: &[Monomial], signs: &[i8]) -> Multivector {
    let half = scalar::ratio(1, 2);
    let mut f = Multivector::one(sig);
    for (&g, &s) in gens.iter().zip(signs) {
        let factor = &Multivector::one(sig) + &Multivector::signed_basis(sig, s, g);
        f = &f * &factor.scale(&half);
    }
    f
}

impl PrimitiveIdempotent {
    pub fn value(&self) -> &Multivector {
        &self.value
    }

    pub fn k(&self) -> usize {
        self.gens.len()
    }

    /// `f̂`, the grade involute.
    pub fn grade_involute(&self) -> Multivector {
        self.value.grade_involution()
    }

    /// `e = f + f̂`.
    pub fn semisimple_unit(&self) -> Multivector {
        &self.value + &self.grade_involute()
    }

    /// `dim_R(f Cl f)`, computed by brute force over all monomials.
    pub fn primitivity_dimension(&self) -> usize {
        let sig = self.sig;
        let mut e = Echelon::new();
        for m in sig.monomials() {
            let v = &self.value.left_mul_monomial(1, m) * &self.value;
            let w = &self.value * &v;
            e.insert(w.as_map());
        }
        e.rank()
    }
}

/// `f` built from the default generators with the given signs.
pub fn primitive_idempotent(sig: Signature, signs: &[i8]) -> Result<PrimitiveIdempotent> {
    let gens = idempotent_generators(sig)?;
    if signs.len() != gens.len() {
        return Err(Error::WrongSignCount {
            expected: gens.len(),
            got: signs.len(),
        });
    }
    if let Some(&bad) = signs.iter().find(|&&s| s != 1 && s != -1) {
        return Err(Error::InvalidSign(bad));
    }
    let value = expand(sig, &gens, signs);
    Ok(PrimitiveIdempotent {
        sig,
        gens,
        signs: signs.to_vec(),
        value,
    })
}

/// The all-plus idempotent.
pub fn default_idempotent(sig: Signature) -> Result<PrimitiveIdempotent> {
    let k = idempotent_count(sig) as usize;
    primitive_idempotent(sig, &vec![1; k])
}

/// All `2^k` sign choices; sign patterns enumerate as binary counters with
/// the first factor varying slowest.
pub fn complete_idempotent_set(sig: Signature) -> Result<Vec<PrimitiveIdempotent>> {
    let k = idempotent_count(sig) as usize;
    (0..1u32 << k)
        .map(|bits| {
            let signs: Vec<i8> = (0..k)
                .map(|j| if bits >> (k - 1 - j) & 1 == 1 { -1 } else { 1 })
                .collect();
            primitive_idempotent(sig, &signs)
        })
        .collect()
}

/// Parses a sign pattern such as `"+-+"`.
pub fn parse_signs(s: &str) -> Result<Vec<i8>> {
    s.chars()
        .map(|c| match c {
            '+' => Ok(1),
            '-' | '−' => Ok(-1),
            _ => Err(Error::InvalidSign(0)),
        })
        .collect()
}
