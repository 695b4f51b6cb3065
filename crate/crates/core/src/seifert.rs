//! Seifert invariants `[g; n; (α₁,β₁), …, (α_N,β_N)]` and the quantities read
//! off them directly.
//!
//! Pairs are kept exactly as given: `β` is never reduced into `[0, α)`. The
//! only normalization is the explicit [`SeifertData::twist_move`].

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// One exceptional-fiber invariant `(α, β)` with `α ≥ 1` and `gcd(α, β) = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FiberPair {
    pub alpha: i64,
    pub beta: i64,
}

impl FiberPair {
    pub const fn new(alpha: i64, beta: i64) -> Self {
        FiberPair { alpha, beta }
    }
}

impl From<(i64, i64)> for FiberPair {
    fn from((alpha, beta): (i64, i64)) -> Self {
        FiberPair { alpha, beta }
    }
}

/// Validated Seifert invariants. Construct with [`SeifertData::validate`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct SeifertData {
    genus: u32,
    n: i64,
    pairs: Vec<FiberPair>,
}

impl SeifertData {
    pub fn validate<P>(genus: i64, n: i64, raw_pairs: impl IntoIterator<Item = P>) -> Result<Self>
    where
        P: Into<FiberPair>,
    {
        if genus < 0 {
            return Err(Error::NegativeGenus(genus));
        }
        let genus = u32::try_from(genus).map_err(|_| Error::Overflow("genus"))?;
        let pairs: Vec<FiberPair> = raw_pairs.into_iter().map(Into::into).collect();
        for (i, p) in pairs.iter().enumerate() {
            if p.alpha < 1 {
                return Err(Error::InvalidAlpha { index: i + 1, alpha: p.alpha });
            }
            if p.alpha.gcd(&p.beta) != 1 {
                return Err(Error::NotCoprime { index: i + 1, alpha: p.alpha, beta: p.beta });
            }
        }
        Ok(SeifertData { genus, n, pairs })
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn pairs(&self) -> &[FiberPair] {
        &self.pairs
    }

    /// `d = n + Σ βⱼ/αⱼ`.
    pub fn degree(&self) -> Rational {
        self.pairs
            .iter()
            .map(|p| Rational::new(p.beta, p.alpha))
            .fold(Rational::from(self.n), |acc, x| acc + x)
    }

    /// `Vol(H)² = ∫ κ∧dκ = d`, defined only for contact-compatible data.
    pub fn vol_isotropy_squared(&self) -> Result<Rational> {
        let degree = self.degree();
        if !degree.is_positive() {
            return Err(Error::NonContactData { degree });
        }
        Ok(degree)
    }

    /// `(αⱼ, βⱼ) ↦ (αⱼ, βⱼ + m·αⱼ)` together with `n ↦ n − m`.
    ///
    /// `j` is 1-based. The result describes the same manifold.
    pub fn twist_move(&self, j: usize, m: i64) -> Result<Self> {
        if j == 0 || j > self.pairs.len() {
            return Err(Error::IndexOutOfRange { index: j, len: self.pairs.len() });
        }
        let overflow = || Error::Overflow("twist move");
        let mut out = self.clone();
        let pair = &mut out.pairs[j - 1];
        pair.beta = m
            .checked_mul(pair.alpha)
            .and_then(|shift| pair.beta.checked_add(shift))
            .ok_or_else(overflow)?;
        out.n = self.n.checked_sub(m).ok_or_else(overflow)?;
        Ok(out)
    }

    /// Product of the multiplicities, `Π αⱼ` (1 when there are no pairs).
    pub fn alpha_product(&self) -> num_bigint::BigInt {
        self.pairs.iter().map(|p| num_bigint::BigInt::from(p.alpha)).product()
    }
}

/// Canonical rendering, accepted back by the command-line parser:
/// `g=1; n=0; (2,1) (3,1)`. The genus clause is omitted when it is zero.
impl fmt::Display for SeifertData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.genus != 0 {
            write!(f, "g={}; ", self.genus)?;
        }
        write!(f, "n={}", self.n)?;
        if !self.pairs.is_empty() {
            f.write_str(";")?;
            for p in &self.pairs {
                write!(f, " ({},{})", p.alpha, p.beta)?;
            }
        }
        Ok(())
    }
}

impl<'de> Deserialize<'de> for SeifertData {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            #[serde(default)]
            genus: i64,
            n: i64,
            #[serde(default)]
            pairs: Vec<FiberPair>,
        }
        let raw = Raw::deserialize(deserializer)?;
        SeifertData::validate(raw.genus, raw.n, raw.pairs).map_err(serde::de::Error::custom)
    }
}
