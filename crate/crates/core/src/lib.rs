//! Exact-arithmetic engine for real Clifford algebras `Cl(p,q)`.
//!
//! The algebra is realized as the twisted group ring `R^t[(Z_2)^n]` with the
//! Walsh/Gray product. On top of it the crate builds:
//!
//! - primitive idempotents of product form and their complete sets
//!   ([`idempotents`]),
//! - the vee group with its stabilizer, idempotent and field subgroups,
//!   canonical transversals, and a mechanical check of their structure
//!   theorem ([`groups`]),
//! - spinor ideals, the division ring `K = fCl f`, the seven-element
//!   `clidata` record and spinor matrix representations ([`spinors`]),
//! - the transposition scalar product, the `β±` products, Gram matrices and
//!   classification of their automorphism groups ([`forms`]).
//!
//! Everything is exact; there is no floating point anywhere.

pub mod algebra;
pub mod error;
pub mod forms;
pub mod groups;
pub mod idempotents;
pub mod linalg;
pub mod sampling;
pub mod spinors;

pub use algebra::{Monomial, Multivector, Scalar, Signature};
pub use error::{Error, Result};
