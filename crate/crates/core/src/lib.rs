//! Fuzzy paraconsistent truth values and their approximate mapping onto
//! complex amplitudes.
//!
//! - [`logic`]: crisp four-valued CD logic and fuzzy evidence pairs.
//! - [`tnorm`]: t-norm families, generators, residua, distributivity defect.
//! - [`quantum`]: the σ-mapping, amplitude arithmetic and the identity audit.
//! - [`ee`]: evidential-error smoothing and effective-exponent fitting.
//! - [`dsl`]: a logic expression language evaluated under all semantics.

pub mod dsl;
pub mod ee;
pub mod logic;
pub mod quantum;
pub mod report;
pub mod rng;
pub mod tnorm;

pub use logic::{Evidence, ImplVariant, PBit, TruthPair};
pub use quantum::{Amplitude, OpMap, SigmaConfig, SigmaConvention};
pub use tnorm::TNormFamily;
