use std::fmt;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// A single violated hypothesis on the level `ell`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LevelViolation {
    Zero,
    Even,
    NotAboveCoxeter { coxeter_number: u32 },
    SharesBadPrime { prime: u32 },
    NotPrime,
}

impl fmt::Display for LevelViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LevelViolation::Zero => write!(f, "ell must be positive"),
            LevelViolation::Even => write!(f, "ell must be odd"),
            LevelViolation::NotAboveCoxeter { coxeter_number } => {
                write!(f, "ell must exceed the Coxeter number h = {coxeter_number}")
            }
            LevelViolation::SharesBadPrime { prime } => {
                write!(f, "ell shares the bad prime {prime}")
            }
            LevelViolation::NotPrime => write!(f, "ell must be prime in modular mode"),
        }
    }
}

fn join_violations(v: &[LevelViolation]) -> String {
    v.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid root system type {family}{rank}")]
    InvalidCartanType { family: String, rank: usize },

    #[error("invalid level {ell}: {}", join_violations(.violations))]
    InvalidLevel {
        ell: u32,
        violations: Vec<LevelViolation>,
    },

    #[error("level mismatch: {left} vs {right}")]
    LevelMismatch { left: u32, right: u32 },

    #[error("expected a vector of length {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("{0:?} is not a root")]
    NotARoot(Vec<i64>),

    #[error("{0:?} does not lie in the root lattice")]
    NotInRootLattice(Vec<i64>),

    #[error("weight {0:?} is not dominant")]
    NotDominant(Vec<i64>),

    #[error("invalid generator word: {0}")]
    InvalidWord(String),

    #[error("element is not minimal in its coset modulo the parabolic subgroup")]
    NotMinimalInCoset,

    #[error("the zero polynomial has no cyclotomic multiplicity")]
    ZeroPolynomial,

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("Kazhdan-Lusztig capacity exceeded: element of length {length} exceeds the cap {cap}")]
    Capacity { length: u32, cap: u32 },

    #[error("invariant violated: {0}")]
    InvariantViolation(String),

    #[error("verification failed for {what}: lhs = {lhs}, rhs = {rhs}")]
    VerificationFailure {
        what: String,
        lhs: String,
        rhs: String,
    },

    #[error("hypothesis violated: {0}")]
    AssumptionViolation(String),
}

impl Error {
    pub fn is_capacity(&self) -> bool {
        matches!(self, Error::Capacity { .. })
    }
}
