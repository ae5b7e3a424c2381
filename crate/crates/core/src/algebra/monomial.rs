use std::cmp::Ordering;
use std::fmt;

/// A basis monomial `e_A` of `Cl(p,q)` stored as an index set.
///
/// Bit `i-1` of the mask is set iff generator `e_i` is present; the empty
/// mask is the identity `1`.
///
/// `Ord` is the grade-then-lex order used for every printed list. The
/// inverse-lexicographic order (plain mask comparison) drives searches and
/// coset representative choice, see [`Monomial::inv_lex_cmp`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial(u32);

impl Monomial {
    pub const ONE: Monomial = Monomial(0);

    pub const fn from_mask(mask: u32) -> Self {
        Monomial(mask)
    }

    /// `e_i` with `i` in `1..=32`.
    pub fn generator(i: u32) -> Self {
        assert!((1..=32).contains(&i), "generator index {i} out of range");
        Monomial(1 << (i - 1))
    }

    /// Build from 1-based generator indices; repeated indices cancel.
    pub fn from_indices(indices: &[u32]) -> Self {
        Monomial(
            indices
                .iter()
                .fold(0, |acc, &i| acc ^ Self::generator(i).0),
        )
    }

    pub const fn mask(self) -> u32 {
        self.0
    }

    pub const fn grade(self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_one(self) -> bool {
        self.0 == 0
    }

    /// Sorted 1-based generator indices.
    pub fn indices(self) -> Vec<u32> {
        (0..32).filter(|b| self.0 >> b & 1 == 1).map(|b| b + 1).collect()
    }

    /// Group operation of `(Z_2)^n`.
    pub fn xor(self, other: Monomial) -> Monomial {
        Monomial(self.0 ^ other.0)
    }

    /// Compare as masks (inverse-lexicographic: the highest differing index
    /// decides).
    pub fn inv_lex_cmp(&self, other: &Monomial) -> Ordering {
        self.0.cmp(&other.0)
    }

    /// `e_A e_B = (-1)^s e_B e_A` with `s = |A||B| - |A ∩ B|`.
    pub fn commutes_with(self, other: Monomial) -> bool {
        let s = self.grade() * other.grade() + (self.0 & other.0).count_ones();
        s % 2 == 0
    }

    /// Render with the index style chosen for an `n`-generator algebra:
    /// `e13` when `n <= 9`, `e{1,10}` otherwise.
    pub fn render(self, n: u32) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        let idx = self.indices();
        if n <= 9 {
            let digits: String = idx.iter().map(|i| i.to_string()).collect();
            format!("e{digits}")
        } else {
            let list: Vec<String> = idx.iter().map(|i| i.to_string()).collect();
            format!("e{{{}}}", list.join(","))
        }
    }

    /// Inverse of [`Monomial::render`].
    pub fn parse(s: &str) -> Option<Monomial> {
        let s = s.trim();
        if s == "1" {
            return Some(Monomial::ONE);
        }
        let body = s.strip_prefix('e')?;
        let indices: Vec<u32> = if let Some(inner) =
            body.strip_prefix('{').and_then(|b| b.strip_suffix('}'))
        {
            inner
                .split(',')
                .map(|t| t.trim().parse().ok())
                .collect::<Option<_>>()?
        } else {
            body.chars()
                .map(|c| c.to_digit(10))
                .collect::<Option<_>>()?
        };
        if indices.is_empty() || indices.iter().any(|&i| i == 0 || i > 32) {
            return None;
        }
        if indices.windows(2).any(|w| w[0] >= w[1]) {
            return None;
        }
        Some(Monomial::from_indices(&indices))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.grade().cmp(&other.grade()).then_with(|| {
            if self.0 == other.0 {
                return Ordering::Equal;
            }
            // Equal grade: the lowest differing index belongs to the smaller.
            let low = (self.0 ^ other.0).trailing_zeros();
            if self.0 >> low & 1 == 1 {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = 32 - self.0.leading_zeros();
        f.write_str(&self.render(n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(idx: &[u32]) -> Monomial {
        Monomial::from_indices(idx)
    }

    #[test]
    fn graded_order() {
        let mut v = vec![m(&[2, 3]), m(&[1]), m(&[]), m(&[1, 2, 3]), m(&[1, 3]), m(&[3]), m(&[1, 2])];
        v.sort();
        let names: Vec<String> = v.iter().map(|x| x.to_string()).collect();
        assert_eq!(names, ["1", "e1", "e3", "e12", "e13", "e23", "e123"]);
    }

    #[test]
    fn inv_lex_is_mask_order() {
        assert_eq!(m(&[2, 3]).inv_lex_cmp(&m(&[4])), Ordering::Less);
        assert_eq!(m(&[4]).cmp(&m(&[2, 3])), Ordering::Less);
    }

    #[test]
    fn rendering() {
        assert_eq!(m(&[1, 3]).render(3), "e13");
        assert_eq!(Monomial::ONE.render(3), "1");
        assert_eq!(m(&[1, 10]).render(10), "e{1,10}");
        assert_eq!(m(&[1, 3]).render(12), "e{1,3}");
        assert_eq!(Monomial::parse("e{1,10}"), Some(m(&[1, 10])));
        assert_eq!(Monomial::parse("e123"), Some(m(&[1, 2, 3])));
        assert_eq!(Monomial::parse("1"), Some(Monomial::ONE));
        assert_eq!(Monomial::parse("e21"), None);
        assert_eq!(Monomial::parse("x"), None);
    }

    #[test]
    fn commutation_rule() {
        assert!(!m(&[1]).commutes_with(m(&[2])));
        assert!(m(&[1, 3]).commutes_with(m(&[2, 4])));
        assert!(!m(&[1, 2]).commutes_with(m(&[1, 5])));
        assert!(m(&[2, 3, 4]).commutes_with(m(&[1, 5])));
        assert!(m(&[1]).commutes_with(m(&[1])));
    }
}
