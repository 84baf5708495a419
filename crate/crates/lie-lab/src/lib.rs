//! Exact-arithmetic laboratory for finite-dimensional Lie rings.
//!
//! The crate provides four layers:
//!
//! * [`field`] / [`linalg`] / [`subspace`] — exact scalars over `F_p`,
//!   `F_{p^k}`, and `Q`, with reduced-row-echelon linear algebra (no floats
//!   anywhere; subspaces are canonical echelonized bases).
//! * [`ring`] / [`structure`] — Lie rings as antisymmetric structure-constant
//!   tables, with bracket images, centralizers, normalizers, derived and
//!   lower-central series, ideal closures, simplicity testing by spinning,
//!   eigenspace gradings, and quotients.
//! * [`constructions`] / [`rootsys`] — a catalog of named algebras (`sl2`,
//!   `ga1` and its twisted relatives, Heisenberg, Witt, Chevalley bases from
//!   root systems) plus basis-change combinators.
//! * [`analysis`] / [`lemmas`] / [`census`] — recognizers that produce
//!   certified isomorphisms, verifiers for general structural facts, and a
//!   brute-force census of 3-dimensional bracket tables.
//!
//! With the default `parallel` feature the census and the exhaustive
//! simplicity scans fan out over a rayon pool; without it every code path
//! falls back to the identical sequential loop.

pub mod analysis;
pub mod census;
pub mod constructions;
pub mod field;
pub mod lemmas;
pub mod linalg;
pub mod ring;
pub mod rootsys;
pub mod structure;
pub mod subspace;

pub use field::{Field, Scalar};
pub use linalg::Matrix;
pub use ring::LieRing;
pub use subspace::Subspace;

/// Crate-wide error type. Programming-contract violations (mismatched
/// dimensions inside internal arithmetic) panic instead; these variants are
/// for conditions a caller can hit with well-formed inputs.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("field mismatch: operands live over different fields")]
    FieldMismatch,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("subspace is not closed under the bracket")]
    NotASubring,
    #[error("subspace is not an ideal")]
    NotAnIdeal,
    #[error("invalid structure table: {0}")]
    InvalidTable(String),
    #[error("unsupported characteristic: {0}")]
    UnsupportedCharacteristic(String),
    #[error("unsupported construction: {0}")]
    UnsupportedConstruction(String),
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
