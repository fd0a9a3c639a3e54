//! Exact symbolic computation of Macdonald polynomials, their branching rule
//! and difference operators, the polynomial representation of the double
//! affine Hecke algebra with its rank-restriction map, and diagonal matrix
//! elements of intertwiners between quantum group representations.
//!
//! Every quantity is an exact rational function in two formal variables q
//! and t ([`qfield::CoeffRat`]); identities are checked by exact equality.

pub mod combinat;
pub mod daha;
pub mod indexops;
pub mod intertwiner;
pub mod macops;
pub mod qfield;
pub mod report;
pub mod sampling;
pub mod suites;
pub mod sympoly;

use thiserror::Error;

/// Errors reported by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    ZeroDenominator,
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("signature {0} is not dominant")]
    NotDominant(String),
    #[error("{mu} does not interlace {lam}")]
    NotInterlacing { mu: String, lam: String },
    #[error("domain violation: {0}")]
    Domain(String),
    #[error("input is not symmetric")]
    NotSymmetric,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("parse error: {0}")]
    Parse(String),
}
