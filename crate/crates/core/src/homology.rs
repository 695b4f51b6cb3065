//! First homology of a Seifert manifold and the flat U(1) bundle classes it
//! indexes.
//!
//! `H₁(X; ℤ)` is presented on generators `q₁, …, q_N, h` by the relations
//! `αⱼ qⱼ + βⱼ h = 0` and `q₁ + … + q_N − n h = 0`, plus `2g` free generators
//! from the base surface. With this sign convention `|H₁| = (Π αⱼ)·|d|`
//! whenever the degree `d` is nonzero and `g = 0`, and `n=1` with no exceptional fibers is `S³`.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::seifert::SeifertData;
use crate::snf::{smith_normal_form, IntMatrix};

/// Default cap on [`flat_bundle_classes`].
pub const DEFAULT_ENUMERATION_CAP: u64 = 1_000_000;

/// Relation matrix of `H₁` (rows are relations, columns are `q₁ … q_N, h`).
/// The `2g` unrelated generators are kept as a count.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PresentationMatrix {
    pub matrix: IntMatrix,
    pub free_rank_adjunct: u64,
}

impl PresentationMatrix {
    pub fn new(sd: &SeifertData) -> Self {
        let pairs = sd.pairs();
        let size = pairs.len() + 1;
        let last = pairs.len();
        let mut m = IntMatrix::zeros(size, size);
        for (j, p) in pairs.iter().enumerate() {
            m[(j, j)] = BigInt::from(p.alpha);
            m[(j, last)] = BigInt::from(p.beta);
            m[(last, j)] = BigInt::one();
        }
        m[(last, last)] = -BigInt::from(sd.n());
        PresentationMatrix { matrix: m, free_rank_adjunct: 2 * u64::from(sd.genus()) }
    }
}

/// Shape of `H₁ = ℤ^{b₁} ⊕ ⊕ ℤ/dᵢ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct HomologySummary {
    pub b1: u64,
    /// `d₁ | d₂ | …`, each at least 2.
    #[serde(serialize_with = "ser_bigints")]
    pub torsion_coefficients: Vec<BigInt>,
    #[serde(serialize_with = "ser_bigint")]
    pub torsion_order: BigInt,
    /// Equal to `torsion_order`; one class per element of `Tors H²`.
    #[serde(serialize_with = "ser_bigint")]
    pub flat_class_count: BigInt,
}

fn ser_bigint<S: serde::Serializer>(x: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(x)
}

fn ser_bigints<S: serde::Serializer>(xs: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(xs.len()))?;
    for x in xs {
        seq.serialize_element(&x.to_string())?;
    }
    seq.end()
}

impl HomologySummary {
    /// `(b₁ − 1)/2`.
    pub fn n_exponent(&self) -> Rational {
        Rational::new(BigInt::from(self.b1) - 1, 2)
    }

    /// Builds a summary from invariant factors (any order of zeros and units
    /// is accepted) plus extra free rank.
    pub fn from_invariant_factors(factors: &[BigInt], extra_free_rank: u64) -> Self {
        let zeros = factors.iter().filter(|f| f.is_zero()).count() as u64;
        let torsion_coefficients: Vec<BigInt> =
            factors.iter().map(BigInt::abs).filter(|f| f > &BigInt::one()).collect();
        let torsion_order: BigInt = torsion_coefficients.iter().product();
        HomologySummary {
            b1: extra_free_rank + zeros,
            torsion_coefficients,
            flat_class_count: torsion_order.clone(),
            torsion_order,
        }
    }
}

pub fn presentation_matrix(sd: &SeifertData) -> PresentationMatrix {
    PresentationMatrix::new(sd)
}

pub fn homology_h1(sd: &SeifertData) -> HomologySummary {
    let pres = PresentationMatrix::new(sd);
    let snf = smith_normal_form(&pres.matrix);
    HomologySummary::from_invariant_factors(&snf.invariant_factors(), pres.free_rank_adjunct)
}

/// Power of the level `k` in the partition function: `n_X = (b₁ − 1)/2`,
/// half the difference of the first and zeroth Betti numbers of a connected
/// `X`.
pub fn n_exponent(sd: &SeifertData) -> Rational {
    homology_h1(sd).n_exponent()
}

/// Label of one flat bundle class: residues `rᵢ` with `0 ≤ rᵢ < dᵢ`.
pub type ClassLabel = Vec<u64>;

/// All classes in lexicographic order. Fails if there are more than `cap`.
pub fn flat_bundle_classes(summary: &HomologySummary, cap: u64) -> Result<Vec<ClassLabel>> {
    let too_large = || Error::EnumerationTooLarge { order: summary.torsion_order.to_string(), cap };
    if summary.torsion_order > BigInt::from(cap) {
        return Err(too_large());
    }
    let moduli: Vec<u64> = summary
        .torsion_coefficients
        .iter()
        .map(|d| d.to_u64().ok_or_else(too_large))
        .collect::<Result<_>>()?;
    let total = summary.torsion_order.to_usize().ok_or_else(too_large)?;

    let mut out = Vec::with_capacity(total);
    let mut current = vec![0u64; moduli.len()];
    for _ in 0..total {
        out.push(current.clone());
        // odometer increment, last digit fastest
        for (digit, &m) in current.iter_mut().zip(&moduli).rev() {
            *digit += 1;
            if *digit < m {
                break;
            }
            *digit = 0;
        }
    }
    Ok(out)
}
