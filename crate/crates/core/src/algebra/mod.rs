//! Exact Clifford arithmetic on `Cl(p,q)` viewed as the twisted group ring
//! `R^t[(Z_2)^n]`.

mod monomial;
mod multivector;
pub mod scalar;
mod signature;
pub mod walsh;

pub use monomial::Monomial;
pub use multivector::{conjugation_sign, grade_involution_sign, reversion_sign, Multivector};
pub use scalar::Scalar;
pub use signature::Signature;
pub use walsh::{cocycle, gray_inverse, monomial_inverse, monomial_product, monomial_square_sign};
