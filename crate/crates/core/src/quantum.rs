//! The σ-mapping from truth pairs to complex amplitudes and an audit of how
//! closely it carries fuzzy meet/join/negation onto complex `+`, `×` and the
//! reflection `z ↦ i·z̄`.
//!
//! Three conventions for the falsity coordinate are supported, with `f` the
//! additive generator of the chosen t-norm:
//!
//! | convention       | σ(a, b)              |
//! |------------------|----------------------|
//! | `pure_generator` | `(f(a), f(1−b))`     |
//! | `printed`        | `(f(a), 1 − f(1−b))` |
//! | `symmetric`      | `(f(a), f(b))`       |
//!
//! Only some identities hold exactly under each convention; the audit
//! measures all of them rather than assuming any.

use std::fmt;
use std::io::{self, Write};
use std::ops::{Add, Mul, Sub};
use std::str::FromStr;

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::logic::{fuzzy_join, fuzzy_meet, fuzzy_neg, TruthPair};
use crate::report::fmt_f64;
use crate::rng::stream_rng;
use crate::tnorm::{TNormError, TNormFamily, DEFAULT_CLAMP};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum QuantumError {
    #[error("σ needs an additively generated family with p < 0 or the product, got {0}")]
    UnsupportedFamily(TNormFamily),
    #[error("clamp floor must lie in (0, 1), got {0}")]
    InvalidClamp(f64),
    #[error("amplitude component {0} has no preimage in [clamp, 1]")]
    OutOfImage(f64),
    #[error("σ produced a non-finite amplitude for ({0}, {1})")]
    NonFinite(f64, f64),
    #[error("sweep exponents must be negative, got {0}")]
    NonNegativeExponent(f64),
    #[error("audit needs at least one sample")]
    NoSamples,
    #[error(transparent)]
    TNorm(#[from] TNormError),
}

/// Ordered real pair read as the complex number `re + i·im`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize)]
pub struct Amplitude {
    pub re: f64,
    pub im: f64,
}

impl Amplitude {
    pub const ZERO: Amplitude = Amplitude { re: 0.0, im: 0.0 };
    pub const ONE: Amplitude = Amplitude { re: 1.0, im: 0.0 };
    pub const I: Amplitude = Amplitude { re: 0.0, im: 1.0 };

    pub const fn new(re: f64, im: f64) -> Self {
        Amplitude { re, im }
    }

    /// `z ↦ i·z̄`, i.e. swap the coordinates.
    pub fn reflect(self) -> Self {
        Amplitude { re: self.im, im: self.re }
    }

    pub fn norm(self) -> f64 {
        self.re.hypot(self.im)
    }

    pub fn is_finite(self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }
}

impl Add for Amplitude {
    type Output = Amplitude;

    fn add(self, rhs: Amplitude) -> Amplitude {
        Amplitude { re: self.re + rhs.re, im: self.im + rhs.im }
    }
}

impl Sub for Amplitude {
    type Output = Amplitude;

    fn sub(self, rhs: Amplitude) -> Amplitude {
        Amplitude { re: self.re - rhs.re, im: self.im - rhs.im }
    }
}

impl Mul for Amplitude {
    type Output = Amplitude;

    fn mul(self, rhs: Amplitude) -> Amplitude {
        Amplitude { re: self.re * rhs.re - self.im * rhs.im, im: self.re * rhs.im + self.im * rhs.re }
    }
}

pub fn amp_add(x: Amplitude, y: Amplitude) -> Amplitude {
    x + y
}

pub fn amp_mul(x: Amplitude, y: Amplitude) -> Amplitude {
    x * y
}

pub fn amp_neg(z: Amplitude) -> Amplitude {
    z.reflect()
}

/// Error between two amplitudes: the modulus of the difference, and the same
/// modulus divided by `max(1, |reference|)`.
pub fn modulus_errors(got: Amplitude, reference: Amplitude) -> (f64, f64) {
    let abs = (got - reference).norm();
    (abs, abs / reference.norm().max(1.0))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SigmaConvention {
    PureGenerator,
    Printed,
    Symmetric,
}

impl SigmaConvention {
    pub const ALL: [SigmaConvention; 3] =
        [SigmaConvention::PureGenerator, SigmaConvention::Printed, SigmaConvention::Symmetric];

    pub fn name(self) -> &'static str {
        match self {
            SigmaConvention::PureGenerator => "pure_generator",
            SigmaConvention::Printed => "printed",
            SigmaConvention::Symmetric => "symmetric",
        }
    }
}

impl fmt::Display for SigmaConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SigmaConvention {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SigmaConvention::ALL.into_iter().find(|c| c.name() == s).ok_or_else(|| format!("unknown σ convention `{s}`"))
    }
}

/// Which logical operation is sent to complex addition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OpMap {
    /// meet → add, join → mul
    #[default]
    Printed,
    /// join → add, meet → mul
    Summary,
}

impl OpMap {
    pub const ALL: [OpMap; 2] = [OpMap::Printed, OpMap::Summary];

    pub fn name(self) -> &'static str {
        match self {
            OpMap::Printed => "printed",
            OpMap::Summary => "summary",
        }
    }
}

impl fmt::Display for OpMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for OpMap {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        OpMap::ALL.into_iter().find(|m| m.name() == s).ok_or_else(|| format!("unknown op map `{s}`"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SigmaConfig {
    family: TNormFamily,
    pub convention: SigmaConvention,
    pub op_map: OpMap,
    clamp: f64,
}

impl SigmaConfig {
    /// Accepts the product and Schweizer–Sklar members with `p ≤ 0`.
    pub fn new(family: TNormFamily, convention: SigmaConvention, op_map: OpMap) -> Result<Self, QuantumError> {
        family.validate()?;
        match family {
            TNormFamily::Product => {}
            TNormFamily::SchweizerSklar(p) if p <= 0.0 => {}
            other => return Err(QuantumError::UnsupportedFamily(other)),
        }
        Ok(SigmaConfig { family, convention, op_map, clamp: DEFAULT_CLAMP })
    }

    pub fn with_clamp(mut self, clamp: f64) -> Result<Self, QuantumError> {
        if !(clamp > 0.0 && clamp < 1.0) {
            return Err(QuantumError::InvalidClamp(clamp));
        }
        self.clamp = clamp;
        Ok(self)
    }

    pub fn family(&self) -> TNormFamily {
        self.family
    }

    pub fn clamp(&self) -> f64 {
        self.clamp
    }

    fn f(&self, x: f64) -> f64 {
        // the family was validated at construction and the argument is clamped
        self.family.generator_with_floor(x.clamp(self.clamp, 1.0), self.clamp).expect("clamped generator argument")
    }

    fn f_inv(&self, u: f64) -> Result<f64, QuantumError> {
        if u.is_nan() || u < 0.0 {
            return Err(QuantumError::OutOfImage(u));
        }
        let x = self.family.generator_inverse(u)?;
        // allow for rounding at the floor itself
        if x < self.clamp * (1.0 - 1e-9) {
            return Err(QuantumError::OutOfImage(u));
        }
        Ok(x)
    }
}

pub fn sigma(cfg: &SigmaConfig, a: TruthPair) -> Result<Amplitude, QuantumError> {
    let re = cfg.f(a.plus);
    let im = match cfg.convention {
        SigmaConvention::PureGenerator => cfg.f(1.0 - a.minus),
        SigmaConvention::Printed => 1.0 - cfg.f(1.0 - a.minus),
        SigmaConvention::Symmetric => cfg.f(a.minus),
    };
    let z = Amplitude::new(re, im);
    if z.is_finite() {
        Ok(z)
    } else {
        Err(QuantumError::NonFinite(a.plus, a.minus))
    }
}

pub fn sigma_inverse(cfg: &SigmaConfig, z: Amplitude) -> Result<TruthPair, QuantumError> {
    let plus = cfg.f_inv(z.re)?;
    let minus = match cfg.convention {
        SigmaConvention::PureGenerator => 1.0 - cfg.f_inv(z.im)?,
        SigmaConvention::Printed => 1.0 - cfg.f_inv(1.0 - z.im)?,
        SigmaConvention::Symmetric => cfg.f_inv(z.im)?,
    };
    Ok(TruthPair::new(plus.min(1.0), minus.clamp(0.0, 1.0)).expect("weights clamped to [0,1]"))
}

/// Algebraic identity checked by the audit. Which logical operation is meant
/// by "additive" / "multiplicative" follows the configuration's [`OpMap`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Identity {
    /// `σ(A ∘ B) = σA + σB`
    Additive,
    /// `σ(A ∘ B) = σA · σB`
    Multiplicative,
    /// `σ(¬A) = i·conj(σA)`
    Negation,
    /// `σ(A ∘ B) = σA + σB − i`
    AdditiveOffset,
}

impl Identity {
    pub const ALL: [Identity; 4] =
        [Identity::Additive, Identity::Multiplicative, Identity::Negation, Identity::AdditiveOffset];

    pub fn name(self) -> &'static str {
        match self {
            Identity::Additive => "additive",
            Identity::Multiplicative => "multiplicative",
            Identity::Negation => "negation",
            Identity::AdditiveOffset => "additive_offset",
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AuditRow {
    pub p: f64,
    pub family: String,
    pub sigma_convention: SigmaConvention,
    pub op_map: OpMap,
    pub identity: Identity,
    pub max_abs_err: f64,
    pub mean_abs_err: f64,
    pub max_scaled_err: f64,
    pub mean_scaled_err: f64,
    pub samples: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize)]
pub struct AuditReport {
    pub rows: Vec<AuditRow>,
}

impl AuditReport {
    pub const CSV_HEADER: &'static str = "p,family,sigma_convention,op_map,identity,max_abs_err,mean_abs_err,samples,seed,max_scaled_err,mean_scaled_err";

    pub fn write_csv<W: Write>(&self, mut w: W) -> io::Result<()> {
        writeln!(w, "{}", Self::CSV_HEADER)?;
        for r in &self.rows {
            writeln!(
                w,
                "{},{},{},{},{},{},{},{},{},{},{}",
                fmt_f64(r.p),
                r.family,
                r.sigma_convention,
                r.op_map,
                r.identity,
                fmt_f64(r.max_abs_err),
                fmt_f64(r.mean_abs_err),
                r.samples,
                r.seed,
                fmt_f64(r.max_scaled_err),
                fmt_f64(r.mean_scaled_err)
            )?;
        }
        Ok(())
    }

    pub fn find(&self, p: f64, convention: SigmaConvention, op_map: OpMap, identity: Identity) -> Option<&AuditRow> {
        self.rows
            .iter()
            .find(|r| r.p == p && r.sigma_convention == convention && r.op_map == op_map && r.identity == identity)
    }
}

#[derive(Default, Clone, Copy)]
struct ErrorStats {
    max_abs: f64,
    sum_abs: f64,
    max_scaled: f64,
    sum_scaled: f64,
}

impl ErrorStats {
    fn push(&mut self, got: Amplitude, reference: Amplitude) {
        let (abs, scaled) = modulus_errors(got, reference);
        // NaN is recorded as infinite so it cannot hide behind max()
        let abs = if abs.is_nan() { f64::INFINITY } else { abs };
        let scaled = if scaled.is_nan() { f64::INFINITY } else { scaled };
        self.max_abs = self.max_abs.max(abs);
        self.sum_abs += abs;
        self.max_scaled = self.max_scaled.max(scaled);
        self.sum_scaled += scaled;
    }
}

fn sample_pair<R: Rng>(rng: &mut R, clamp: f64) -> TruthPair {
    TruthPair::new_unchecked(rng.random_range(clamp..=1.0), rng.random_range(clamp..=1.0))
}

/// Monte Carlo audit of every [`Identity`] under each configuration.
///
/// Truth pairs are drawn uniformly from `[clamp, 1]²`; configuration `i`
/// draws from stream `i` of `seed`, so rows are reproducible and independent
/// of evaluation order.
pub fn audit_identities(configs: &[SigmaConfig], samples: usize, seed: u64) -> Result<AuditReport, QuantumError> {
    if samples == 0 {
        return Err(QuantumError::NoSamples);
    }
    let per_config: Vec<Result<Vec<AuditRow>, QuantumError>> =
        configs.par_iter().enumerate().map(|(i, cfg)| audit_one(cfg, samples, seed, i as u64)).collect();
    let mut rows = Vec::with_capacity(configs.len() * Identity::ALL.len());
    for r in per_config {
        rows.extend(r?);
    }
    Ok(AuditReport { rows })
}

fn audit_one(cfg: &SigmaConfig, samples: usize, seed: u64, stream: u64) -> Result<Vec<AuditRow>, QuantumError> {
    let fam = cfg.family;
    let mut rng = stream_rng(seed, stream);
    let mut stats = [ErrorStats::default(); 4];
    let offset = Amplitude::I;
    for _ in 0..samples {
        let a = sample_pair(&mut rng, cfg.clamp);
        let b = sample_pair(&mut rng, cfg.clamp);
        let (sa, sb) = (sigma(cfg, a)?, sigma(cfg, b)?);
        let (to_add, to_mul) = match cfg.op_map {
            OpMap::Printed => (fuzzy_meet(a, b, fam), fuzzy_join(a, b, fam)),
            OpMap::Summary => (fuzzy_join(a, b, fam), fuzzy_meet(a, b, fam)),
        };
        let s_add = sigma(cfg, to_add)?;
        stats[0].push(s_add, sa + sb);
        stats[1].push(sigma(cfg, to_mul)?, sa * sb);
        stats[2].push(sigma(cfg, fuzzy_neg(a))?, sa.reflect());
        stats[3].push(s_add, sa + sb - offset);
    }
    let n = samples as f64;
    Ok(Identity::ALL
        .iter()
        .zip(stats)
        .map(|(&identity, s)| AuditRow {
            p: fam.exponent().unwrap_or(0.0),
            family: fam.name().to_string(),
            sigma_convention: cfg.convention,
            op_map: cfg.op_map,
            identity,
            max_abs_err: s.max_abs,
            mean_abs_err: s.sum_abs / n,
            max_scaled_err: s.max_scaled,
            mean_scaled_err: s.sum_scaled / n,
            samples,
            seed,
        })
        .collect())
}

/// Every `(p, convention, op_map)` combination for Schweizer–Sklar exponents
/// `ps`, in that nesting order.
pub fn sweep_configs(ps: &[f64]) -> Result<Vec<SigmaConfig>, QuantumError> {
    let mut out = Vec::with_capacity(ps.len() * 6);
    for &p in ps {
        if p.is_nan() || p >= 0.0 {
            return Err(QuantumError::NonNegativeExponent(p));
        }
        let fam = TNormFamily::schweizer_sklar(p)?;
        for conv in SigmaConvention::ALL {
            for op_map in OpMap::ALL {
                out.push(SigmaConfig::new(fam, conv, op_map)?);
            }
        }
    }
    Ok(out)
}

/// Audit of all conventions and operator maps across `ps`.
pub fn sweep(ps: &[f64], samples: usize, seed: u64) -> Result<AuditReport, QuantumError> {
    audit_identities(&sweep_configs(ps)?, samples, seed)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ss(p: f64) -> TNormFamily {
        TNormFamily::schweizer_sklar(p).unwrap()
    }

    fn cfg(p: f64, conv: SigmaConvention) -> SigmaConfig {
        SigmaConfig::new(ss(p), conv, OpMap::Printed).unwrap()
    }

    fn pair(a: f64, b: f64) -> TruthPair {
        TruthPair::new(a, b).unwrap()
    }

    fn close(a: Amplitude, b: Amplitude, tol: f64) -> bool {
        (a - b).norm() <= tol
    }

    #[test]
    fn arithmetic_examples() {
        let a = Amplitude::new;
        assert_eq!(a(1.0, 2.0) + a(3.0, -1.0), a(4.0, 1.0));
        assert_eq!(Amplitude::ZERO + a(0.3, 0.7), a(0.3, 0.7));
        assert_eq!(a(1.0, 1.0) + a(1.0, 1.0), a(2.0, 2.0));
        assert_eq!(Amplitude::I * Amplitude::I, a(-1.0, 0.0));
        assert_eq!(Amplitude::ONE * a(0.3, -0.7), a(0.3, -0.7));
        assert_eq!(a(1.0, 1.0) * a(1.0, -1.0), a(2.0, 0.0));
        assert_eq!(a(1.0, 0.5).reflect(), a(0.5, 1.0));
        assert_eq!(a(0.2, 0.9).reflect().reflect(), a(0.2, 0.9));
        assert_eq!(a(0.4, 0.4).reflect(), a(0.4, 0.4));
    }

    #[test]
    fn sigma_examples() {
        let half = pair(0.5, 0.5);
        let z = sigma(&cfg(-1.0, SigmaConvention::PureGenerator), half).unwrap();
        assert!(close(z, Amplitude::new(1.0, 1.0), 1e-15));
        let z = sigma(&cfg(-1.0, SigmaConvention::Printed), half).unwrap();
        assert!(close(z, Amplitude::new(1.0, 0.0), 1e-15));
        for fam in [TNormFamily::Product, ss(-0.5), ss(-9.0)] {
            let c = SigmaConfig::new(fam, SigmaConvention::Symmetric, OpMap::Printed).unwrap();
            assert_eq!(sigma(&c, pair(1.0, 1.0)).unwrap(), Amplitude::ZERO);
        }
    }

    #[test]
    fn sigma_inverse_examples() {
        let pg = cfg(-1.0, SigmaConvention::PureGenerator);
        let w = sigma_inverse(&pg, Amplitude::new(1.0, 1.0)).unwrap();
        assert!((w.plus - 0.5).abs() < 1e-15 && (w.minus - 0.5).abs() < 1e-15);
        assert_eq!(sigma_inverse(&pg, Amplitude::ZERO).unwrap(), pair(1.0, 0.0));
        let pr = cfg(-1.0, SigmaConvention::Printed);
        let w = sigma_inverse(&pr, Amplitude::new(1.0, 0.0)).unwrap();
        assert!((w.plus - 0.5).abs() < 1e-15 && (w.minus - 0.5).abs() < 1e-15);

        assert!(matches!(sigma_inverse(&pg, Amplitude::new(-0.5, 0.0)), Err(QuantumError::OutOfImage(_))));
        assert!(matches!(sigma_inverse(&pg, Amplitude::new(1e12, 0.0)), Err(QuantumError::OutOfImage(_))));
        // printed second coordinate is at most 1
        assert!(matches!(sigma_inverse(&pr, Amplitude::new(0.0, 1.5)), Err(QuantumError::OutOfImage(_))));
    }

    #[test]
    fn config_rejects_unsupported_families() {
        for fam in [TNormFamily::MinMax, TNormFamily::Drastic, ss(0.5)] {
            assert!(matches!(
                SigmaConfig::new(fam, SigmaConvention::Symmetric, OpMap::Printed),
                Err(QuantumError::UnsupportedFamily(_))
            ));
        }
        let c = cfg(-1.0, SigmaConvention::Symmetric);
        assert!(c.with_clamp(0.0).is_err());
        assert_eq!(c.with_clamp(1e-6).unwrap().clamp(), 1e-6);
    }

    #[test]
    fn audit_exact_rows() {
        let configs = sweep_configs(&[-1.0, -8.0]).unwrap();
        let report = audit_identities(&configs, 2000, 7).unwrap();
        assert_eq!(report.rows.len(), 2 * 6 * 4);
        for p in [-1.0, -8.0] {
            let r = report.find(p, SigmaConvention::PureGenerator, OpMap::Printed, Identity::Additive).unwrap();
            assert!(r.max_scaled_err <= 1e-9, "{r:?}");
            let r = report.find(p, SigmaConvention::Printed, OpMap::Printed, Identity::AdditiveOffset).unwrap();
            assert!(r.max_scaled_err <= 1e-9, "{r:?}");
            for m in OpMap::ALL {
                let r = report.find(p, SigmaConvention::Symmetric, m, Identity::Negation).unwrap();
                assert!(r.max_abs_err <= 1e-12, "{r:?}");
            }
            // the conventions that do not make these exact really do not
            let r = report.find(p, SigmaConvention::PureGenerator, OpMap::Printed, Identity::Negation).unwrap();
            assert!(r.max_abs_err > 1e-3);
            let r = report.find(p, SigmaConvention::Printed, OpMap::Printed, Identity::Additive).unwrap();
            assert!(r.max_scaled_err > 1e-3, "{r:?}");
        }
        for r in &report.rows {
            assert!(r.max_abs_err.is_finite() && r.max_abs_err >= 0.0, "{r:?}");
            assert!(r.mean_abs_err <= r.max_abs_err);
        }
    }

    #[test]
    fn audit_is_deterministic() {
        let configs = sweep_configs(&[-2.0]).unwrap();
        let a = audit_identities(&configs, 500, 99).unwrap();
        let b = audit_identities(&configs, 500, 99).unwrap();
        assert_eq!(a, b);
        let c = audit_identities(&configs, 500, 100).unwrap();
        assert_ne!(a, c);
        assert!(matches!(audit_identities(&configs, 0, 1), Err(QuantumError::NoSamples)));
    }

    #[test]
    fn sweep_row_counts() {
        let ps = [-1.0, -2.0, -4.0, -8.0, -16.0, -32.0];
        let report = sweep(&ps, 50, 1).unwrap();
        for id in Identity::ALL {
            assert_eq!(report.rows.iter().filter(|r| r.identity == id).count(), 36);
        }
        assert!(matches!(sweep(&[-1.0, 0.0], 10, 1), Err(QuantumError::NonNegativeExponent(_))));
    }

    #[test]
    fn csv_layout() {
        let report = sweep(&[-1.0], 10, 3).unwrap();
        let mut buf = Vec::new();
        report.write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next().unwrap(), AuditReport::CSV_HEADER);
        let first: Vec<&str> = lines.next().unwrap().split(',').collect();
        assert_eq!(first.len(), 11);
        assert_eq!(first[0].parse::<f64>().unwrap(), -1.0);
        assert_eq!(&first[1..5], &["ss", "pure_generator", "printed", "additive"]);
        assert_eq!(text.lines().count(), 1 + 24);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn round_trip(a in DEFAULT_CLAMP..=1.0f64, b in DEFAULT_CLAMP..=1.0f64, p in -20.0..-0.1f64, conv in 0usize..3) {
                let c = SigmaConfig::new(ss(p), SigmaConvention::ALL[conv], OpMap::Printed).unwrap();
                let w = sigma_inverse(&c, sigma(&c, pair(a, b)).unwrap()).unwrap();
                prop_assert!((w.plus - a).abs() <= 1e-9 && (w.minus - b).abs() <= 1e-9, "{:?}", w);
            }

            #[test]
            fn symmetric_negation_is_exact(a in DEFAULT_CLAMP..=1.0f64, b in DEFAULT_CLAMP..=1.0f64, p in -30.0..-0.1f64) {
                let c = cfg(p, SigmaConvention::Symmetric);
                let w = pair(a, b);
                prop_assert_eq!(sigma(&c, fuzzy_neg(w)).unwrap(), sigma(&c, w).unwrap().reflect());
            }
        }
    }
}
