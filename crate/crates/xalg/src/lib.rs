//! Crossed modules of algebras and cat1-algebras over group algebras of
//! small finite groups, together with an exhaustive enumeration engine for
//! endomorphisms, idempotent endomorphisms and cat1-structures.
//!
//! The library is organised bottom-up:
//!
//! * [`ffield`] — arithmetic in GF(p^k) with a canonical integer encoding,
//! * [`groups`] — a catalog of the finite groups of order at most 12,
//! * [`algebra`] — structure-constant algebras, group algebras, ideals,
//!   idempotents, multiplier algebras and semidirect products,
//! * [`homs`] — algebra homomorphisms and exhaustive homomorphism
//!   enumeration out of group algebras,
//! * [`xmodalg`] / [`cat1alg`] — the two-dimensional objects and their
//!   morphisms,
//! * [`equiv`] — the equivalence between the two, with verified roundtrip
//!   isomorphisms,
//! * [`census`] — per-(field, group) counting of endomorphisms, idempotent
//!   endomorphisms and cat1-structures,
//! * [`json`] — the on-disk JSON formats used by the `xalg` binary.
//!
//! See the `examples/` directory for one runnable example per capability.

// dense index loops over structure-constant tensors read more clearly than
// iterator chains in the math kernels below
#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod cat1alg;
pub mod census;
pub mod equiv;
pub mod ffield;
pub mod groups;
pub mod homs;
pub mod json;
pub mod linalg;
pub mod xmodalg;

use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NonPrime(u64),
    #[error("extension degree must be at least 1")]
    InvalidDegree,
    #[error("supplied modulus is reducible over GF({p})")]
    ReducibleModulus { p: u64 },
    #[error("field order {order} exceeds the configured maximum {max}")]
    FieldTooLarge { order: u64, max: u64 },
    #[error("inversion of zero")]
    ZeroInverse,
    #[error("unknown group id {0:?}")]
    UnknownGroupId(String),
    #[error("generator images are inconsistent with the group relations: {0}")]
    InconsistentImages(String),
    #[error("generators do not generate the source algebra")]
    NotGenerating,
    #[error("element does not lie in the target algebra / subspace")]
    OutsideTarget,
    #[error("subspace is not an ideal")]
    NotAnIdeal,
    #[error("subspace is not closed under multiplication")]
    NotASubalgebra,
    #[error("algebra was not constructed as a group algebra")]
    NotAGroupAlgebra,
    #[error("enumeration over {needed} elements exceeds the bound {bound}")]
    BoundExceeded { needed: u128, bound: u64 },
    #[error("axiom {axiom} fails: {witness}")]
    AxiomFailed {
        axiom: &'static str,
        witness: String,
    },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("homomorphism is not surjective")]
    NotSurjective,
    #[error("action is ill-defined: {0}")]
    IllDefinedAction(String),
    #[error("endomorphism is not idempotent")]
    NotIdempotent,
    #[error("the two endomorphisms have different images")]
    ImageMismatch,
    #[error("multiplier hypotheses fail: {0}")]
    MultiplierHypothesis(String),
    #[error("incompatible parents: {0}")]
    IncompatibleParents(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Default cap on exhaustive element scans (idempotent searches, candidate
/// image scans). 2^22 keeps GF(4)[C9] with its 262144 elements well inside.
pub const DEFAULT_MAX_ELEMENTS: u64 = 1 << 22;
