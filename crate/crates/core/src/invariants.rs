//! Closed-form invariants: the renormalized eta-invariant `η₀`, the contact
//! counterterm, the partition-function phase with its framing law, and the
//! dimensionally reduced gravitational Chern-Simons term.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::dedekind::{dedekind_fast, dedekind_sawtooth, DedekindArgs};
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::seifert::SeifertData;

/// The unit complex number `exp(iπq)`, stored as the exact exponent `q`
/// reduced into `[0, 2)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PhaseExponent {
    q: Rational,
}

impl PhaseExponent {
    pub fn new(q: Rational) -> Self {
        PhaseExponent { q: q.rem_euclid(&Rational::from(2)) }
    }

    pub fn identity() -> Self {
        PhaseExponent { q: Rational::zero() }
    }

    pub fn q(&self) -> &Rational {
        &self.q
    }

    /// Phase of the product of the two unit numbers.
    pub fn compose(&self, other: &PhaseExponent) -> PhaseExponent {
        PhaseExponent::new(&self.q + &other.q)
    }

    /// `(cos πq, sin πq)`, for display only.
    pub fn to_complex(&self) -> (f64, f64) {
        let angle = std::f64::consts::PI * self.q.to_f64();
        (angle.cos(), angle.sin())
    }
}

impl fmt::Debug for PhaseExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "exp(i*pi*{})", self.q)
    }
}

impl fmt::Display for PhaseExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

const PHASE_MEANING: &str = "exp(i*pi*q)";

#[derive(Serialize, Deserialize)]
struct PhaseRepr {
    q: Rational,
    meaning: String,
}

impl Serialize for PhaseExponent {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PhaseRepr { q: self.q.clone(), meaning: PHASE_MEANING.to_string() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for PhaseExponent {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = PhaseRepr::deserialize(d)?;
        if repr.meaning != PHASE_MEANING {
            return Err(serde::de::Error::custom(format!(
                "phase meaning must be {PHASE_MEANING:?}, got {:?}",
                repr.meaning
            )));
        }
        Ok(PhaseExponent::new(repr.q))
    }
}

/// `η₀ = 1 + d/3 + 4 Σⱼ s(αⱼ, βⱼ)`.
///
/// Genus does not enter; the formula is evaluated as written for any `g`.
pub fn eta0(sd: &SeifertData) -> Rational {
    eta0_with(sd, dedekind_fast)
}

/// [`eta0`], recomputing every Dedekind sum by brute force as well and
/// failing on the first disagreement.
pub fn eta0_audited(sd: &SeifertData) -> Result<Rational> {
    for p in sd.pairs() {
        let args = DedekindArgs::new(p.alpha, p.beta)?;
        let fast = dedekind_fast(args);
        let sawtooth = dedekind_sawtooth(args);
        if fast != sawtooth {
            return Err(Error::AuditMismatch { alpha: p.alpha, beta: p.beta, fast: fast.into(), sawtooth: sawtooth.into() });
        }
    }
    Ok(eta0(sd))
}

fn eta0_with(sd: &SeifertData, s: impl Fn(DedekindArgs) -> Rational) -> Rational {
    let dedekind_total: Rational = sd
        .pairs()
        .iter()
        .map(|p| s(DedekindArgs::new(p.alpha, p.beta).expect("validated pair")))
        .sum();
    Rational::one() + sd.degree() / Rational::from(3) + Rational::from(4) * dedekind_total
}

/// `C_T = (1/512) ∫ R² κ∧dκ`.
pub fn counterterm(int_r2_volume: &Rational) -> Result<Rational> {
    if int_r2_volume.is_negative() {
        return Err(Error::NegativeCurvatureIntegral(int_r2_volume.clone()));
    }
    Ok(int_r2_volume / &Rational::from(512))
}

/// Eta-invariant of the contact operator, `η₀ − C_T`.
pub fn eta_contact(eta0_value: &Rational, ct: &Rational) -> Rational {
    eta0_value - ct
}

/// `exp(iπ η₀/4)`.
pub fn phase(eta0_value: &Rational) -> PhaseExponent {
    PhaseExponent::new(eta0_value / &Rational::from(4))
}

/// Changing the 2-framing by `s` units multiplies the partition function by
/// `exp(2πis/24)`, i.e. adds `s/12` to the exponent.
pub fn twist_framing(p: &PhaseExponent, s: i64) -> PhaseExponent {
    PhaseExponent::new(p.q() + &Rational::new(s, 12))
}

/// `CS(A^{g_ε}) = (ε⁻¹/2) ∫ r ω + (ε⁻²/2) ∫ f² ω` on the base orbifold.
/// Tends to zero as `ε → ∞`.
pub fn grav_cs_adiabatic(int_r_omega: &Rational, int_f2_omega: &Rational, epsilon: &Rational) -> Result<Rational> {
    if !epsilon.is_positive() {
        return Err(Error::NonPositiveEpsilon(epsilon.clone()));
    }
    let inv = Rational::one() / epsilon;
    let half = Rational::new(1, 2);
    Ok(&half * &inv * int_r_omega + &half * &inv * &inv * int_f2_omega)
}
