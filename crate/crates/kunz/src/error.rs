//! Crate-wide error type.

use crate::semigroup::Violation;

/// Errors reported by constructors and operations across the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A generator set must contain at least one positive integer.
    #[error("generator set is empty")]
    EmptyGenerators,

    /// Generators must be ≥ 1.
    #[error("generator {0} is not a positive integer")]
    NonPositiveGenerator(i64),

    /// The generators have a common divisor > 1, so the complement is infinite.
    #[error("generators have gcd {gcd} > 1; they do not generate a numerical semigroup")]
    NonCoprimeGenerators { gcd: i64 },

    /// Kunz coordinates must have length `m - 1`.
    #[error("expected {expected} coordinates for multiplicity {m}, got {got}")]
    CoordinateCount { m: i64, expected: usize, got: usize },

    /// Multiplicity must be at least 1 (and at least 2 for most operations).
    #[error("multiplicity {0} is not a positive integer")]
    InvalidMultiplicity(i64),

    /// The operation is defined only for multiplicity ≥ 2; the degenerate
    /// semigroup ℕ carries no Kunz data.
    #[error("operation requires multiplicity >= 2, got {0}")]
    DegenerateMultiplicity(i64),

    /// The coordinate vector violates the Kunz inequality system.
    #[error("invalid Kunz coordinates: violated {}",
        .violations.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", "))]
    InvalidKunz { violations: Vec<Violation> },

    /// Two vectors were combined that describe different multiplicities.
    #[error("multiplicity mismatch: {0} vs {1}")]
    MultiplicityMismatch(i64, i64),

    /// The requested base point is not an element of the semigroup.
    #[error("{0} is not an element of the semigroup")]
    NotAnElement(i64),

    /// The requested value is not a special gap of the semigroup.
    #[error("{0} is not a special gap (> m) of the semigroup")]
    NotASpecialGap(i64),

    /// A decomposition-specific operation was asked of an input that is
    /// already irreducible in the requested sense.
    #[error("input is already irreducible; nothing to decompose")]
    InputIsIrreducible,

    /// A family specification is malformed (multiplicity, step, or length out
    /// of range, or step not coprime to the multiplicity).
    #[error("invalid family specification: {0}")]
    InvalidSpec(String),

    /// A brute-force scan was asked to cover a search space beyond its
    /// configured limits.
    #[error("bounds exceeded for brute-force scan: {0}")]
    BoundsExceeded(String),

    /// Arithmetic would overflow 64-bit integers; inputs are limited to desk
    /// scale by design.
    #[error("arithmetic overflow on input of this size")]
    Overflow,
}

pub type Result<T> = std::result::Result<T, Error>;
