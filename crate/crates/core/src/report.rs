//! Everything computable about `Z_{U(1)}(X, p, k)` gathered in one value.
//!
//! The partition function of a Seifert manifold at level `k` factors as
//!
//! ```text
//! Z(X, p, k) = k^{n_X} · exp(πik S_{X,P}(A₀)) · exp(iπ η₀/4) · ∫_{M_P} (T^d)^{1/2}
//! ```
//!
//! summed over flat classes `p ∈ Tors H²(X; ℤ)`. The level exponent, the
//! phase and the class set are exact; the flat-connection action and the
//! torsion integral are carried as named [`Placeholder`]s.

use num_traits::ToPrimitive;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::homology::{flat_bundle_classes, homology_h1, ClassLabel, HomologySummary, DEFAULT_ENUMERATION_CAP};
use crate::invariants::{eta0, phase, twist_framing, PhaseExponent};
use crate::rational::Rational;
use crate::seifert::SeifertData;

/// A factor with no closed form here, kept by name so that a value can be
/// substituted downstream.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Placeholder {
    pub name: &'static str,
    pub symbol: &'static str,
    /// Alternative names for the same quantity.
    #[serde(skip_serializing_if = "<[_]>::is_empty")]
    pub aliases: &'static [&'static str],
}

pub const CS_FLAT_ACTION: Placeholder = Placeholder {
    name: "cs_flat_action",
    symbol: "exp(pi*i*k*S_{X,P}(A_0))",
    aliases: &[],
};

/// The Chern-Simons and Ray-Singer torsion densities agree, so one symbol
/// stands for both.
pub const TORSION_INTEGRAL: Placeholder = Placeholder {
    name: "torsion_integral",
    symbol: "int_{M_P} (T^d)^{1/2}",
    aliases: &["T^d_C", "T^d_RS"],
};

/// One summand of the sum over flat classes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ClassSummand {
    pub class: ClassLabel,
    pub cs_action: Placeholder,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartitionReport {
    pub seifert: SeifertData,
    pub level_k: u64,
    pub n_exponent: Rational,
    pub phase: PhaseExponent,
    pub eta0: Rational,
    pub degree: Rational,
    pub vol_h_squared: Rational,
    pub flat_classes: HomologySummary,
    pub summands: Vec<ClassSummand>,
    pub torsion_integral: Placeholder,
    pub framing: i64,
}

impl PartitionReport {
    /// Equality of every computed field, ignoring the echoed Seifert data.
    pub fn same_invariants(&self, other: &PartitionReport) -> bool {
        PartitionReport { seifert: other.seifert.clone(), ..self.clone() } == *other
    }

    /// Checks `phase = η₀/4 + framing/12 (mod 2)` and `n_X = (b₁ − 1)/2`.
    pub fn is_consistent(&self) -> bool {
        let expected_phase = twist_framing(&phase(&self.eta0), self.framing);
        self.phase == expected_phase
            && self.n_exponent == self.flat_classes.n_exponent()
            && self.flat_classes.flat_class_count.to_usize() == Some(self.summands.len())
    }
}

impl Serialize for PartitionReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("PartitionReport", 13)?;
        s.serialize_field("seifert", &self.seifert.to_string())?;
        s.serialize_field("level_k", &self.level_k)?;
        s.serialize_field("n_exponent", &self.n_exponent)?;
        s.serialize_field("phase", &self.phase)?;
        s.serialize_field("phase_exponent", self.phase.q())?;
        s.serialize_field("eta0", &self.eta0)?;
        s.serialize_field("degree", &self.degree)?;
        s.serialize_field("vol_h_squared", &self.vol_h_squared)?;
        s.serialize_field("flat_classes", &self.flat_classes)?;
        s.serialize_field("summands", &self.summands)?;
        s.serialize_field("torsion_integral", &self.torsion_integral)?;
        s.serialize_field("framing", &self.framing)?;
        s.end()
    }
}

pub fn build_report(sd: &SeifertData, k: u64, framing: i64) -> Result<PartitionReport> {
    build_report_with_cap(sd, k, framing, DEFAULT_ENUMERATION_CAP)
}

/// [`build_report`] with an explicit cap on the number of flat classes.
pub fn build_report_with_cap(sd: &SeifertData, k: u64, framing: i64, cap: u64) -> Result<PartitionReport> {
    if k == 0 {
        return Err(Error::InvalidLevel(0));
    }
    let vol_h_squared = sd.vol_isotropy_squared()?;
    let eta0 = eta0(sd);
    let flat_classes = homology_h1(sd);
    let summands = flat_bundle_classes(&flat_classes, cap)?
        .into_iter()
        .map(|class| ClassSummand { class, cs_action: CS_FLAT_ACTION })
        .collect();
    Ok(PartitionReport {
        seifert: sd.clone(),
        level_k: k,
        n_exponent: flat_classes.n_exponent(),
        phase: twist_framing(&phase(&eta0), framing),
        degree: sd.degree(),
        eta0,
        vol_h_squared,
        flat_classes,
        summands,
        torsion_integral: TORSION_INTEGRAL,
        framing,
    })
}
