//! Constructible-duality (CD) truth values.
//!
//! A [`PBit`] is a crisp value made of a truth bit and a falsity bit, so that
//! `True = (1,0)`, `False = (0,1)`, `Both = (1,1)` and `Neither = (0,0)`.
//! Conjunction and disjunction act on the first coordinate directly and on the
//! second coordinate through the dual operation; negation swaps coordinates.
//!
//! [`TruthPair`] is the fuzzy counterpart: a pair of evidence weights in
//! `[0,1]` whose sum may range over `[0,2]`, combined through a
//! [`TNormFamily`].

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::tnorm::{TNormError, TNormFamily};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum LogicError {
    #[error("weight {0} is outside [0, 1]")]
    OutOfUnit(f64),
    #[error("cannot aggregate an empty observation sequence")]
    EmptyObservations,
    #[error("invalid evidence counts ({plus}, {minus}) for total {total}")]
    InvalidEvidence { plus: u64, minus: u64, total: u64 },
    #[error("({0}, {1}) is not a crisp truth value")]
    NotCrisp(f64, f64),
    #[error("unknown truth value `{0}`")]
    UnknownSymbol(String),
}

/// Crisp four-valued truth value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PBit {
    pub t: bool,
    pub f: bool,
}

impl PBit {
    pub const TRUE: PBit = PBit { t: true, f: false };
    pub const FALSE: PBit = PBit { t: false, f: true };
    pub const BOTH: PBit = PBit { t: true, f: true };
    pub const NEITHER: PBit = PBit { t: false, f: false };

    /// All four values in `T, F, B, N` order.
    pub const ALL: [PBit; 4] = [PBit::TRUE, PBit::FALSE, PBit::BOTH, PBit::NEITHER];

    pub const fn new(t: bool, f: bool) -> Self {
        PBit { t, f }
    }

    pub fn symbol(self) -> char {
        match (self.t, self.f) {
            (true, false) => 'T',
            (false, true) => 'F',
            (true, true) => 'B',
            (false, false) => 'N',
        }
    }

    pub fn meet(self, other: PBit) -> PBit {
        cd_meet(self, other)
    }

    pub fn join(self, other: PBit) -> PBit {
        cd_join(self, other)
    }
}

impl std::ops::Not for PBit {
    type Output = PBit;

    fn not(self) -> PBit {
        cd_neg(self)
    }
}

impl fmt::Display for PBit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

impl FromStr for PBit {
    type Err = LogicError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "T" | "True" | "true" => Ok(PBit::TRUE),
            "F" | "False" | "false" => Ok(PBit::FALSE),
            "B" | "Both" | "both" => Ok(PBit::BOTH),
            "N" | "Neither" | "neither" => Ok(PBit::NEITHER),
            other => Err(LogicError::UnknownSymbol(other.to_string())),
        }
    }
}

impl TryFrom<TruthPair> for PBit {
    type Error = LogicError;

    /// Accepts only pairs whose weights are exactly 0 or 1; no rounding.
    fn try_from(pair: TruthPair) -> Result<Self, Self::Error> {
        let bit = |w: f64| {
            if w == 1.0 {
                Some(true)
            } else if w == 0.0 {
                Some(false)
            } else {
                None
            }
        };
        match (bit(pair.plus), bit(pair.minus)) {
            (Some(t), Some(f)) => Ok(PBit { t, f }),
            _ => Err(LogicError::NotCrisp(pair.plus, pair.minus)),
        }
    }
}

/// Which second coordinate the crisp implication uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ImplVariant {
    /// `(x → y, x' ⊓ y')`
    #[default]
    Printed,
    /// `(x → y, x ⊓ y')`
    Standard,
}

impl FromStr for ImplVariant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "printed" => Ok(ImplVariant::Printed),
            "standard" => Ok(ImplVariant::Standard),
            other => Err(format!("unknown implication variant `{other}`")),
        }
    }
}

pub fn cd_meet(a: PBit, b: PBit) -> PBit {
    PBit::new(a.t && b.t, a.f || b.f)
}

pub fn cd_join(a: PBit, b: PBit) -> PBit {
    PBit::new(a.t || b.t, a.f && b.f)
}

pub fn cd_neg(a: PBit) -> PBit {
    PBit::new(a.f, a.t)
}

pub fn cd_impl(a: PBit, b: PBit, variant: ImplVariant) -> PBit {
    let second = match variant {
        ImplVariant::Printed => a.f && b.f,
        ImplVariant::Standard => a.t && b.f,
    };
    PBit::new(!a.t || b.t, second)
}

/// Fuzzy evidence pair `(w⁺, w⁻) ∈ [0,1]²`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TruthPair {
    pub plus: f64,
    pub minus: f64,
}

impl TruthPair {
    pub fn new(plus: f64, minus: f64) -> Result<Self, LogicError> {
        for w in [plus, minus] {
            if !(0.0..=1.0).contains(&w) {
                return Err(LogicError::OutOfUnit(w));
            }
        }
        Ok(TruthPair { plus, minus })
    }

    /// Caller guarantees both weights are in `[0,1]`.
    pub(crate) fn new_unchecked(plus: f64, minus: f64) -> Self {
        debug_assert!((0.0..=1.0).contains(&plus) && (0.0..=1.0).contains(&minus));
        TruthPair { plus, minus }
    }

    pub fn swap(self) -> Self {
        TruthPair { plus: self.minus, minus: self.plus }
    }
}

impl From<PBit> for TruthPair {
    fn from(bit: PBit) -> Self {
        embed_crisp(bit)
    }
}

/// Counts of positive and negative evidence over `total` micro-situations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Evidence {
    pub plus: u64,
    pub minus: u64,
    pub total: u64,
}

impl Evidence {
    pub fn new(plus: u64, minus: u64, total: u64) -> Result<Self, LogicError> {
        if total == 0 || plus > total || minus > total {
            return Err(LogicError::InvalidEvidence { plus, minus, total });
        }
        Ok(Evidence { plus, minus, total })
    }

    pub fn normalize(self) -> TruthPair {
        normalize(self)
    }
}

/// Counts observations coordinatewise: a `t` bit is positive evidence, an `f`
/// bit is negative evidence, so `Both` counts twice and `Neither` not at all.
pub fn aggregate(observations: &[PBit]) -> Result<Evidence, LogicError> {
    if observations.is_empty() {
        return Err(LogicError::EmptyObservations);
    }
    let plus = observations.iter().filter(|o| o.t).count() as u64;
    let minus = observations.iter().filter(|o| o.f).count() as u64;
    Evidence::new(plus, minus, observations.len() as u64)
}

pub fn normalize(e: Evidence) -> TruthPair {
    let n = e.total as f64;
    TruthPair::new_unchecked(e.plus as f64 / n, e.minus as f64 / n)
}

pub fn embed_crisp(a: PBit) -> TruthPair {
    let w = |b: bool| if b { 1.0 } else { 0.0 };
    TruthPair::new_unchecked(w(a.t), w(a.f))
}

pub fn fuzzy_meet(a: TruthPair, b: TruthPair, fam: TNormFamily) -> TruthPair {
    TruthPair::new_unchecked(fam.tnorm_unchecked(a.plus, b.plus), fam.conorm_unchecked(a.minus, b.minus))
}

pub fn fuzzy_join(a: TruthPair, b: TruthPair, fam: TNormFamily) -> TruthPair {
    TruthPair::new_unchecked(fam.conorm_unchecked(a.plus, b.plus), fam.tnorm_unchecked(a.minus, b.minus))
}

pub fn fuzzy_neg(a: TruthPair) -> TruthPair {
    a.swap()
}

/// Componentwise complement `(1−w⁺, 1−w⁻)`. Unlike [`fuzzy_neg`] this does
/// not fix `Both` and does not form a De Morgan triple with the meet/join.
pub fn coord_neg(a: TruthPair) -> TruthPair {
    TruthPair::new_unchecked(1.0 - a.plus, 1.0 - a.minus)
}

/// Residuum on the truth coordinate, t-norm on the falsity coordinate.
pub fn fuzzy_impl(a: TruthPair, b: TruthPair, fam: TNormFamily, variant: ImplVariant) -> Result<TruthPair, TNormError> {
    let first = fam.residuum(a.plus, b.plus)?;
    let second = match variant {
        ImplVariant::Printed => fam.tnorm_unchecked(a.minus, b.minus),
        ImplVariant::Standard => fam.tnorm_unchecked(a.plus, b.minus),
    };
    Ok(TruthPair::new_unchecked(first, second))
}

/// Largest coordinate error of both swap De Morgan laws,
/// `¬(A⊔B) = ¬A⊓¬B` and `¬(A⊓B) = ¬A⊔¬B`, over `samples` random pairs of
/// pairs drawn uniformly from `[0,1]²`.
pub fn de_morgan_defect(fam: TNormFamily, samples: usize, seed: u64) -> Result<f64, TNormError> {
    fam.validate()?;
    let mut rng = crate::rng::stream_rng(seed, 0);
    let mut pair = || TruthPair::new_unchecked(rng.random(), rng.random());
    let gap = |x: TruthPair, y: TruthPair| (x.plus - y.plus).abs().max((x.minus - y.minus).abs());
    let mut worst = 0.0f64;
    for _ in 0..samples {
        let (a, b) = (pair(), pair());
        let join = gap(fuzzy_neg(fuzzy_join(a, b, fam)), fuzzy_meet(fuzzy_neg(a), fuzzy_neg(b), fam));
        let meet = gap(fuzzy_neg(fuzzy_meet(a, b, fam)), fuzzy_join(fuzzy_neg(a), fuzzy_neg(b), fam));
        worst = worst.max(join).max(meet);
    }
    Ok(worst)
}
