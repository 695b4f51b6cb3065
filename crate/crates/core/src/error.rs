use crate::rational::Rational;

/// Errors raised by the invariant computations.
///
/// Pair indices are 1-based, matching how Seifert data is written.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("pair {index}: multiplicity alpha = {alpha} must be at least 1")]
    InvalidAlpha { index: usize, alpha: i64 },

    #[error("pair {index}: gcd({alpha}, {beta}) != 1")]
    NotCoprime { index: usize, alpha: i64, beta: i64 },

    #[error("genus {0} is negative")]
    NegativeGenus(i64),

    #[error("degree {degree} is not positive; no compatible contact form")]
    NonContactData { degree: Rational },

    #[error("Dedekind sum arguments ({alpha}, {beta}) need alpha >= 1 and gcd(alpha, beta) = 1")]
    InvalidDedekindArgs { alpha: i64, beta: i64 },

    #[error("audit mismatch for s({alpha}, {beta}): fast {fast} != sawtooth {sawtooth}")]
    AuditMismatch { alpha: i64, beta: i64, fast: Box<Rational>, sawtooth: Box<Rational> },

    #[error("pair index {index} out of range 1..={len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("integer overflow while applying {0}")]
    Overflow(&'static str),

    #[error("{order} flat classes exceed the enumeration cap {cap}")]
    EnumerationTooLarge { order: String, cap: u64 },

    #[error("curvature integral {0} is negative")]
    NegativeCurvatureIntegral(Rational),

    #[error("epsilon {0} must be positive")]
    NonPositiveEpsilon(Rational),

    #[error("level k = {0} must be at least 1")]
    InvalidLevel(i64),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
