use thiserror::Error;

use crate::algebra::Signature;

/// Errors raised by the engine.
///
/// Verification failures are never errors; they are recorded in reports.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("signature ({p},{q}) exceeds the engine limit of {limit} generators")]
    SignatureTooLarge { p: u32, q: u32, limit: u32 },

    #[error("signature mismatch: {left} vs {right}")]
    SignatureMismatch { left: Signature, right: Signature },

    #[error("expected {expected} idempotent signs, got {got}")]
    WrongSignCount { expected: usize, got: usize },

    #[error("idempotent signs must be +1 or -1, got {0}")]
    InvalidSign(i8),

    #[error("no commuting set of {k} square-one monomials found for {sig}")]
    NoIdempotentGenerators { sig: Signature, k: usize },

    #[error("{sig} has too many generators to enumerate its vee group (limit {limit})")]
    EnumerationTooLarge { sig: Signature, limit: u32 },

    #[error("subgroup is not contained in the ambient group")]
    SubgroupNotContained,

    #[error("element is not in the spinor ideal (psi * e != psi)")]
    NotInIdeal,

    #[error("product is not of the form lambda * f with lambda in K")]
    NotInDivisionRing,

    #[error("form could not be classified: {0}")]
    Unclassifiable(String),
}

pub type Result<T> = std::result::Result<T, Error>;
