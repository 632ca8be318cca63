//! Exact classification of nilpotent associative algebras over small finite
//! fields by the central-extension method.
//!
//! Every nilpotent algebra with a nonzero multiplication kernel is a central
//! extension of a smaller one, so the classification proceeds bottom-up:
//! compute the second cohomology of each smaller algebra, enumerate the
//! orbits of its automorphism group on the useful subspaces of that
//! cohomology, and build one extension per orbit. Algebras that split off a
//! central direct summand are added separately as direct sums. A brute-force
//! isomorphism oracle cross-checks every step and matches the output against
//! a catalog of known presentations.
//!
//! All arithmetic is exact, over `F_{p^m}` with small `q = p^m`.
//!
//! The crate is organised along the pipeline:
//!
//! * [`field`]: arithmetic in `F_{p^m}` with deterministic moduli
//! * [`linalg`]: exact matrices, RREF, kernels, canonical subspaces
//! * [`algebra`]: structure-constant algebras and their predicates
//! * [`cohomology`]: cocycles, coboundaries, `H^2`, radicals
//! * [`orbits`]: automorphism groups, subspace orbits, central extensions
//! * [`isomorphism`]: the independent brute-force isomorphism oracle
//! * [`catalog`]: the named presentations used for labelling and checking
//! * [`classify`]: the end-to-end pipeline and the verification report

pub mod algebra;
pub mod catalog;
pub mod classify;
pub mod cohomology;
pub mod field;
pub mod isomorphism;
pub mod linalg;
pub mod orbits;

pub use algebra::Algebra;
pub use classify::{classify, verify, ClassificationRecord, VerifyReport};
pub use cohomology::{h2, Cocycle, CohomologySpaces};
pub use field::{make_field, FieldElement, FieldSpec};
pub use isomorphism::{are_isomorphic, invariant_vector, InvariantVector};
pub use linalg::{Matrix, Subspace};
pub use orbits::{automorphism_group, central_extension, AutGroup, Automorphism};

/// Errors reported by the library.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("field exponent must be at least 1")]
    InvalidExponent,
    #[error("field order {0} is too large")]
    FieldTooLarge(u128),
    #[error("operation requires characteristic 2")]
    OddCharacteristic,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("subspace is not a two-sided ideal")]
    NotAnIdeal,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("bilinear map violates the cocycle identity")]
    NotACocycle,
    #[error("cocycles are linearly dependent modulo coboundaries")]
    DependentCocycles,
    #[error("unknown catalog entry `{0}`")]
    UnknownCatalogEntry(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("search guard exceeded: {0}")]
    GuardExceeded(String),
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error("invalid algebra data: {0}")]
    InvalidAlgebra(String),
}

pub type Result<T> = std::result::Result<T, Error>;
