//! Exact topological invariants of U(1) Chern-Simons theory on Seifert
//! fibered 3-manifolds carrying a quasi-regular K-contact structure.
//!
//! Everything is computed from the Seifert invariants `[g; n; (αⱼ, βⱼ)]` in
//! exact rational arithmetic: the degree, Dedekind sums, the renormalized
//! eta-invariant, the partition-function phase and its framing law, first
//! homology with the flat-bundle classes, and the adiabatic gravitational
//! Chern-Simons term.

pub mod dedekind;
pub mod error;
pub mod homology;
pub mod invariants;
pub mod rational;
pub mod report;
pub mod seifert;
pub mod snf;

pub use dedekind::{dedekind_cotangent, dedekind_fast, dedekind_sawtooth, reciprocity_defect, DedekindArgs};
pub use error::{Error, Result};
pub use homology::{HomologySummary, PresentationMatrix};
pub use invariants::PhaseExponent;
pub use rational::Rational;
pub use report::PartitionReport;
pub use seifert::{FiberPair, SeifertData};
