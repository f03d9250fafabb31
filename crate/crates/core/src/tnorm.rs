//! T-norm families, their dual conorms, additive generators and residua.
//!
//! The Schweizer–Sklar family `⊤_p` interpolates between the minimum
//! (`p → −∞`), the product (`p = 0`) and the drastic t-norm (`p → +∞`).
//! For `p < 0` it is evaluated in the log domain (see [`ss_tnorm_stable`]) so
//! that exponents down to `−10⁶` do not overflow.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

/// Smallest weight fed to a generator with an unbounded pole at zero.
pub const DEFAULT_CLAMP: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum TNormError {
    #[error("argument {0} is outside [0, 1]")]
    OutOfUnit(f64),
    #[error("Schweizer–Sklar exponent must be finite, got {0}")]
    InvalidExponent(f64),
    #[error("{0} is not additively generated")]
    NotAdditivelyGenerated(TNormFamily),
    #[error("generator argument {value} is outside its domain [{floor}, 1]")]
    DomainError { value: f64, floor: f64 },
    #[error("generator inverse needs a non-negative argument, got {0}")]
    NegativeGeneratorValue(f64),
    #[error("residuum is not supported for {0}")]
    ResiduumUnsupported(TNormFamily),
    #[error("grid resolution must be at least 2, got {0}")]
    GridTooSmall(usize),
}

/// A t-norm together with its standard dual conorm `1 − ⊤(1−x, 1−y)`.
///
/// Build Schweizer–Sklar members with [`TNormFamily::schweizer_sklar`], which
/// rejects non-finite exponents.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TNormFamily {
    MinMax,
    Product,
    SchweizerSklar(f64),
    Drastic,
}

impl fmt::Display for TNormFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TNormFamily::MinMax => write!(f, "minmax"),
            TNormFamily::Product => write!(f, "product"),
            TNormFamily::SchweizerSklar(p) => write!(f, "ss({p})"),
            TNormFamily::Drastic => write!(f, "drastic"),
        }
    }
}

impl TNormFamily {
    pub fn schweizer_sklar(p: f64) -> Result<Self, TNormError> {
        if p.is_finite() {
            Ok(TNormFamily::SchweizerSklar(p))
        } else {
            Err(TNormError::InvalidExponent(p))
        }
    }

    /// Short name used in reports: `minmax`, `product`, `ss` or `drastic`.
    pub fn name(&self) -> &'static str {
        match self {
            TNormFamily::MinMax => "minmax",
            TNormFamily::Product => "product",
            TNormFamily::SchweizerSklar(_) => "ss",
            TNormFamily::Drastic => "drastic",
        }
    }

    /// Exponent of a Schweizer–Sklar member; product is reported as `0`.
    pub fn exponent(&self) -> Option<f64> {
        match self {
            TNormFamily::SchweizerSklar(p) => Some(*p),
            TNormFamily::Product => Some(0.0),
            _ => None,
        }
    }

    pub fn validate(&self) -> Result<(), TNormError> {
        match self {
            TNormFamily::SchweizerSklar(p) if !p.is_finite() => Err(TNormError::InvalidExponent(*p)),
            _ => Ok(()),
        }
    }

    pub fn is_additively_generated(&self) -> bool {
        matches!(self, TNormFamily::Product | TNormFamily::SchweizerSklar(_))
    }

    pub fn tnorm(&self, x: f64, y: f64) -> Result<f64, TNormError> {
        self.validate()?;
        check_unit(x)?;
        check_unit(y)?;
        Ok(self.tnorm_unchecked(x, y))
    }

    pub fn conorm(&self, x: f64, y: f64) -> Result<f64, TNormError> {
        self.validate()?;
        check_unit(x)?;
        check_unit(y)?;
        Ok(self.conorm_unchecked(x, y))
    }

    pub(crate) fn tnorm_unchecked(&self, x: f64, y: f64) -> f64 {
        match *self {
            TNormFamily::MinMax => x.min(y),
            TNormFamily::Product => x * y,
            TNormFamily::Drastic => drastic(x, y),
            TNormFamily::SchweizerSklar(p) => ss_tnorm(p, x, y),
        }
    }

    /// Closed forms where one exists, otherwise the dual of the t-norm.
    pub(crate) fn conorm_unchecked(&self, x: f64, y: f64) -> f64 {
        match *self {
            TNormFamily::MinMax => x.max(y),
            TNormFamily::Product => x + y - x * y,
            TNormFamily::Drastic => {
                if x == 0.0 {
                    y
                } else if y == 0.0 {
                    x
                } else {
                    1.0
                }
            }
            TNormFamily::SchweizerSklar(0.0) => x + y - x * y,
            TNormFamily::SchweizerSklar(p) => 1.0 - ss_tnorm(p, 1.0 - x, 1.0 - y),
        }
    }

    /// Additive generator with the default clamp floor.
    pub fn generator(&self, x: f64) -> Result<f64, TNormError> {
        self.generator_with_floor(x, DEFAULT_CLAMP)
    }

    /// `−ln x` for the product, `(1 − x^p)/p` for Schweizer–Sklar.
    ///
    /// For `p ≤ 0` the generator has a pole at zero, so arguments below
    /// `floor` are rejected.
    pub fn generator_with_floor(&self, x: f64, floor: f64) -> Result<f64, TNormError> {
        self.validate()?;
        let p = self.generator_exponent()?;
        let floor = if p > 0.0 { 0.0 } else { floor };
        if !(floor..=1.0).contains(&x) {
            return Err(TNormError::DomainError { value: x, floor });
        }
        Ok(generator_raw(p, x))
    }

    /// Pseudo-inverse of the generator, saturating at zero for nilpotent members.
    pub fn generator_inverse(&self, u: f64) -> Result<f64, TNormError> {
        self.validate()?;
        let p = self.generator_exponent()?;
        if u.is_nan() || u < 0.0 {
            return Err(TNormError::NegativeGeneratorValue(u));
        }
        Ok(generator_inverse_raw(p, u))
    }

    fn generator_exponent(&self) -> Result<f64, TNormError> {
        match *self {
            TNormFamily::Product => Ok(0.0),
            TNormFamily::SchweizerSklar(p) => Ok(p),
            other => Err(TNormError::NotAdditivelyGenerated(other)),
        }
    }

    /// Residuum `sup{z : ⊤(x,z) ≤ y}`.
    pub fn residuum(&self, x: f64, y: f64) -> Result<f64, TNormError> {
        self.validate()?;
        check_unit(x)?;
        check_unit(y)?;
        if x <= y {
            return match self {
                TNormFamily::Drastic => Err(TNormError::ResiduumUnsupported(*self)),
                _ => Ok(1.0),
            };
        }
        match *self {
            TNormFamily::MinMax => Ok(y),
            TNormFamily::Product => Ok(y / x),
            TNormFamily::SchweizerSklar(0.0) => Ok(y / x),
            TNormFamily::SchweizerSklar(p) => Ok(ss_residuum(p, x, y)),
            TNormFamily::Drastic => Err(TNormError::ResiduumUnsupported(*self)),
        }
    }
}

fn check_unit(x: f64) -> Result<(), TNormError> {
    if (0.0..=1.0).contains(&x) {
        Ok(())
    } else {
        Err(TNormError::OutOfUnit(x))
    }
}

fn drastic(x: f64, y: f64) -> f64 {
    if x == 1.0 {
        y
    } else if y == 1.0 {
        x
    } else {
        0.0
    }
}

fn ss_tnorm(p: f64, x: f64, y: f64) -> f64 {
    if p < 0.0 {
        ss_tnorm_stable(p, x, y)
    } else if p == 0.0 {
        x * y
    } else {
        if x == 1.0 {
            return y;
        }
        if y == 1.0 {
            return x;
        }
        (x.powf(p) + y.powf(p) - 1.0).max(0.0).powf(1.0 / p)
    }
}

/// Schweizer–Sklar t-norm for `p < 0`, `(x^p + y^p − 1)^{1/p}`, evaluated as
///
/// ```text
/// a = p·ln x,  b = p·ln y,  c = max(a, b),  m = min(a, b)
/// ln(x^p + y^p − 1) = c + ln(1 + e^{−c}·(e^m − 1))
/// ```
///
/// so no power is ever formed. Zero arguments return zero and a unit argument
/// returns the other argument exactly. The result never exceeds `min(x, y)`.
/// Non-negative `p` falls back to the product / direct formula.
pub fn ss_tnorm_stable(p: f64, x: f64, y: f64) -> f64 {
    if p >= 0.0 {
        return ss_tnorm(p, x, y);
    }
    if x == 0.0 || y == 0.0 {
        return 0.0;
    }
    if x == 1.0 {
        return y;
    }
    if y == 1.0 {
        return x;
    }
    let a = p * x.ln();
    let b = p * y.ln();
    let (c, m) = if a >= b { (a, b) } else { (b, a) };
    let log_sum = c + ((-c).exp() * m.exp_m1()).ln_1p();
    (log_sum / p).exp().min(x).min(y)
}

/// `(y^p − x^p + 1)^{1/p}` for `p < 0` and `0 < y < x`, in the log domain.
fn ss_residuum(p: f64, x: f64, y: f64) -> f64 {
    if p > 0.0 {
        return (1.0 - x.powf(p) + y.powf(p)).powf(1.0 / p);
    }
    if y == 0.0 {
        return 0.0;
    }
    let a = p * y.ln();
    let b = p * x.ln();
    // a > b ≥ 0 because y < x ≤ 1 and p < 0
    let log_v = a + (-(-a).exp() * b.exp_m1()).ln_1p();
    (log_v / p).exp().min(1.0)
}

fn generator_raw(p: f64, x: f64) -> f64 {
    if p == 0.0 {
        -x.ln()
    } else {
        -(p * x.ln()).exp_m1() / p
    }
}

fn generator_inverse_raw(p: f64, u: f64) -> f64 {
    if p == 0.0 {
        (-u).exp()
    } else if p > 0.0 && p * u >= 1.0 {
        0.0
    } else {
        ((-p * u).ln_1p() / p).exp().min(1.0)
    }
}

/// `|⊤(x, ⊥(y,z)) − ⊥(⊤(x,y), ⊤(x,z))|`
pub fn distributivity_defect_at(fam: TNormFamily, x: f64, y: f64, z: f64) -> f64 {
    let lhs = fam.tnorm_unchecked(x, fam.conorm_unchecked(y, z));
    let rhs = fam.conorm_unchecked(fam.tnorm_unchecked(x, y), fam.tnorm_unchecked(x, z));
    (lhs - rhs).abs()
}

/// One row of a distributivity sweep.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DefectReport {
    pub family: String,
    pub p: Option<f64>,
    pub grid: usize,
    pub max_defect: f64,
    pub mean_defect: f64,
}

impl DefectReport {
    pub const CSV_HEADER: &'static str = "family,p,grid,max_defect,mean_defect";

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{}",
            self.family,
            self.p.map(crate::report::fmt_f64).unwrap_or_default(),
            self.grid,
            crate::report::fmt_f64(self.max_defect),
            crate::report::fmt_f64(self.mean_defect)
        )
    }
}

/// Evenly spaced points `lo, …, hi` (inclusive), `n ≥ 2`.
pub fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    let step = (hi - lo) / (n - 1) as f64;
    (0..n).map(|i| if i == n - 1 { hi } else { lo + step * i as f64 }).collect()
}

/// Max and mean distributivity defect over all triples of a `grid³` lattice
/// on `[0,1]`. Slices are reduced in index order, so the result does not
/// depend on thread scheduling.
pub fn distributivity_defect(fam: TNormFamily, grid: usize) -> Result<DefectReport, TNormError> {
    fam.validate()?;
    if grid < 2 {
        return Err(TNormError::GridTooSmall(grid));
    }
    let pts = linspace(0.0, 1.0, grid);
    let slices: Vec<(f64, f64)> = pts
        .par_iter()
        .map(|&x| {
            let mut max = 0.0f64;
            let mut sum = 0.0;
            for &y in &pts {
                for &z in &pts {
                    let d = distributivity_defect_at(fam, x, y, z);
                    max = max.max(d);
                    sum += d;
                }
            }
            (max, sum)
        })
        .collect();
    let (max, sum) = slices.iter().fold((0.0f64, 0.0), |(m, s), &(sm, ss)| (m.max(sm), s + ss));
    Ok(DefectReport {
        family: fam.name().to_string(),
        p: fam.exponent(),
        grid,
        max_defect: max,
        mean_defect: sum / (grid * grid * grid) as f64,
    })
}

/// Largest `|⊤(x,y) − min(x,y)|` over a `grid × grid` lattice on `[lo, 1]²`.
pub fn max_distance_to_min(fam: TNormFamily, lo: f64, grid: usize) -> Result<f64, TNormError> {
    fam.validate()?;
    if grid < 2 {
        return Err(TNormError::GridTooSmall(grid));
    }
    let pts = linspace(lo, 1.0, grid);
    let mut max = 0.0f64;
    for &x in &pts {
        for &y in &pts {
            max = max.max((fam.tnorm_unchecked(x, y) - x.min(y)).abs());
        }
    }
    Ok(max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn ss(p: f64) -> TNormFamily {
        TNormFamily::schweizer_sklar(p).unwrap()
    }

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    /// Direct power formula, only valid where powers stay finite.
    fn ss_direct(p: f64, x: f64, y: f64) -> f64 {
        (x.powf(p) + y.powf(p) - 1.0).powf(1.0 / p)
    }

    #[test]
    fn tnorm_examples() {
        assert!(close(ss(-1.0).tnorm(0.5, 0.5).unwrap(), 1.0 / 3.0, 1e-15));
        for p in [-0.5, -1.0, -7.0, -300.0] {
            for x in [0.0, 0.2, 0.9, 1.0] {
                assert_eq!(ss(p).tnorm(x, 1.0).unwrap(), x);
                assert_eq!(ss(p).tnorm(0.0, x).unwrap(), 0.0);
            }
        }
        assert_eq!(TNormFamily::Drastic.tnorm(0.4, 0.9).unwrap(), 0.0);
        assert_eq!(TNormFamily::Drastic.tnorm(1.0, 0.9).unwrap(), 0.9);
        assert_eq!(ss(0.0).tnorm(0.3, 0.7).unwrap(), TNormFamily::Product.tnorm(0.3, 0.7).unwrap());
        assert!(matches!(TNormFamily::MinMax.tnorm(1.5, 0.2), Err(TNormError::OutOfUnit(_))));
        assert!(TNormFamily::schweizer_sklar(f64::NEG_INFINITY).is_err());
    }

    #[test]
    fn positive_exponent_is_nilpotent() {
        // x^2 + y^2 − 1 < 0 → clamped to 0
        assert_eq!(ss(2.0).tnorm(0.5, 0.5).unwrap(), 0.0);
        assert!(close(ss(2.0).tnorm(0.9, 0.8).unwrap(), (0.81f64 + 0.64 - 1.0).sqrt(), 1e-15));
        assert_eq!(ss(2.0).tnorm(0.3, 1.0).unwrap(), 0.3);
    }

    #[test]
    fn conorm_examples() {
        assert!(close(ss(-1.0).conorm(0.5, 0.5).unwrap(), 2.0 / 3.0, 1e-15));
        assert_eq!(TNormFamily::MinMax.conorm(0.3, 0.8).unwrap(), 0.8);
        for fam in [TNormFamily::MinMax, TNormFamily::Product, TNormFamily::Drastic, ss(-1.0), ss(-20.0), ss(1.5)] {
            for x in [0.0, 0.13, 0.5, 0.77, 1.0] {
                assert!(close(fam.conorm(x, 0.0).unwrap(), x, 1e-15), "{fam} {x}");
            }
        }
    }

    #[test]
    fn conorm_is_dual() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for fam in [TNormFamily::MinMax, TNormFamily::Product, TNormFamily::Drastic, ss(-1.0), ss(-9.0), ss(0.7)] {
            for _ in 0..2000 {
                let (x, y): (f64, f64) = (rng.random(), rng.random());
                let dual = 1.0 - fam.tnorm(1.0 - x, 1.0 - y).unwrap();
                assert!(close(fam.conorm(x, y).unwrap(), dual, 1e-15), "{fam} {x} {y}");
            }
        }
    }

    #[test]
    fn generator_examples() {
        assert_eq!(ss(0.0).generator(1.0).unwrap(), 0.0);
        assert_eq!(TNormFamily::Product.generator(1.0).unwrap(), 0.0);
        assert!(close(ss(-1.0).generator(0.5).unwrap(), 1.0, 1e-15));
        assert!(close(ss(-1.0).generator(1.0 / 3.0).unwrap(), 2.0, 1e-15));
        assert!(close(ss(-1.0).generator_inverse(2.0).unwrap(), 1.0 / 3.0, 1e-15));
        assert_eq!(ss(0.0).generator_inverse(0.0).unwrap(), 1.0);

        let f = ss(-1.0);
        let t = f.generator_inverse(f.generator(0.7).unwrap() + f.generator(0.4).unwrap()).unwrap();
        let expected = 1.0 / (1.0 / 0.7 + 1.0 / 0.4 - 1.0);
        assert!(close(t, expected, 1e-15));
        assert!(close(t, 0.341_463_414_634_146_3, 1e-15));
        assert!(close(f.tnorm(0.7, 0.4).unwrap(), expected, 1e-15));
    }

    #[test]
    fn generator_errors() {
        assert!(matches!(TNormFamily::MinMax.generator(0.5), Err(TNormError::NotAdditivelyGenerated(_))));
        assert!(matches!(TNormFamily::Drastic.generator_inverse(0.5), Err(TNormError::NotAdditivelyGenerated(_))));
        assert!(matches!(ss(-1.0).generator(1e-12), Err(TNormError::DomainError { .. })));
        assert!(matches!(ss(-1.0).generator(0.0), Err(TNormError::DomainError { .. })));
        assert!(ss(-1.0).generator_with_floor(1e-12, 1e-15).is_ok());
        assert!(matches!(ss(-1.0).generator_inverse(-1.0), Err(TNormError::NegativeGeneratorValue(_))));
        // nilpotent members have a finite generator at zero
        assert!(close(ss(2.0).generator(0.0).unwrap(), 0.5, 1e-15));
        assert_eq!(ss(2.0).generator_inverse(0.7).unwrap(), 0.0);
    }

    #[test]
    fn generator_is_strictly_decreasing() {
        for fam in [TNormFamily::Product, ss(-0.5), ss(-3.0), ss(1.0)] {
            let xs = linspace(0.01, 1.0, 200);
            for w in xs.windows(2) {
                assert!(fam.generator(w[0]).unwrap() > fam.generator(w[1]).unwrap(), "{fam}");
            }
        }
    }

    #[test]
    fn generator_inverse_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for fam in [TNormFamily::Product, ss(-0.5), ss(-1.0), ss(-4.0), ss(-16.0)] {
            for _ in 0..5000 {
                let x = rng.random_range(DEFAULT_CLAMP..=1.0);
                let back = fam.generator_inverse(fam.generator(x).unwrap()).unwrap();
                assert!(close(back, x, 1e-12), "{fam} {x} {back}");
            }
        }
    }

    #[test]
    fn generator_represents_tnorm() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for fam in [TNormFamily::Product, ss(-0.5), ss(-1.0), ss(-4.0), ss(-16.0)] {
            for _ in 0..5000 {
                let x = rng.random_range(DEFAULT_CLAMP..=1.0);
                let y = rng.random_range(DEFAULT_CLAMP..=1.0);
                let t = fam.tnorm(x, y).unwrap();
                let via = fam.generator_inverse(fam.generator(x).unwrap() + fam.generator(y).unwrap()).unwrap();
                assert!((t - via).abs() <= 1e-9 * t.max(f64::MIN_POSITIVE), "{fam} {x} {y}: {t} vs {via}");
            }
        }
    }

    #[test]
    fn stable_form_examples() {
        let v = ss_tnorm_stable(-64.0, 0.3, 0.9);
        assert!(v <= 0.3 && 0.3 - v <= 1e-3, "{v}");
        let v = ss_tnorm_stable(-2.0, 0.6, 0.6);
        let expected = (2.0 * 0.6f64.powi(-2) - 1.0).powf(-0.5);
        assert!(close(v, expected, 1e-15));
        assert!(close(v, 0.468_521_285_665_818_2, 1e-12));
        for p in [-0.1, -3.0, -1e6] {
            assert_eq!(ss_tnorm_stable(p, 0.42, 1.0), 0.42);
            assert_eq!(ss_tnorm_stable(p, 1.0, 0.42), 0.42);
        }
    }

    #[test]
    fn stable_form_matches_direct_formula() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for p in [-0.3, -1.0, -2.5, -10.0, -40.0] {
            for _ in 0..5000 {
                let x: f64 = rng.random_range(0.05..1.0);
                let y: f64 = rng.random_range(0.05..1.0);
                let direct = ss_direct(p, x, y);
                let stable = ss_tnorm_stable(p, x, y);
                assert!((direct - stable).abs() <= 1e-12 * direct, "{p} {x} {y}");
            }
        }
    }

    #[test]
    fn stable_form_survives_extreme_exponents() {
        for p in [-1e3, -1e5, -1e6] {
            for (x, y) in [(1e-9, 0.5), (0.3, 0.3), (1e-300, 1e-300), (0.999, 0.999_999)] {
                let v = ss_tnorm_stable(p, x, y);
                assert!(v.is_finite() && v >= 0.0 && v <= x.min(y), "{p} {x} {y} {v}");
            }
        }
    }

    #[test]
    fn residuum_examples_against_grid_oracle() {
        // brute force sup{z : ⊤(x,z) ≤ y} over a 10⁴-point grid
        let grid = linspace(0.0, 1.0, 10_001);
        let oracle = |fam: TNormFamily, x: f64, y: f64| {
            grid.iter().copied().filter(|&z| fam.tnorm(x, z).unwrap() <= y + 1e-15).fold(0.0, f64::max)
        };
        let cases = [(TNormFamily::MinMax, 0.7, 0.3, 0.3), (TNormFamily::Product, 0.5, 0.3, 0.6)];
        for (fam, x, y, expected) in cases {
            let r = fam.residuum(x, y).unwrap();
            assert!(close(r, expected, 1e-15), "{fam}");
            assert!(close(oracle(fam, x, y), expected, 1e-4), "{fam}");
        }
        for fam in [ss(-2.0), ss(-0.5), ss(1.5)] {
            for (x, y) in [(0.8, 0.3), (0.6, 0.55), (0.9, 0.05)] {
                assert!(close(fam.residuum(x, y).unwrap(), oracle(fam, x, y), 2e-4), "{fam} {x} {y}");
            }
        }
        for fam in [TNormFamily::MinMax, TNormFamily::Product, ss(-3.0)] {
            assert_eq!(fam.residuum(0.2, 0.9).unwrap(), 1.0);
        }
        assert!(matches!(TNormFamily::Drastic.residuum(0.2, 0.9), Err(TNormError::ResiduumUnsupported(_))));
    }

    #[test]
    fn residuum_adjunction() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for fam in [TNormFamily::MinMax, TNormFamily::Product, ss(-1.0), ss(-12.0), ss(2.0)] {
            for _ in 0..5000 {
                let (x, y): (f64, f64) = (rng.random(), rng.random());
                let r = fam.residuum(x, y).unwrap();
                assert!(fam.tnorm(x, r).unwrap() <= y + 1e-12, "{fam} {x} {y}");
                assert_eq!(r == 1.0, x <= y, "{fam} {x} {y} {r}");
            }
        }
    }

    #[test]
    fn defect_examples() {
        assert_eq!(distributivity_defect(TNormFamily::MinMax, 50).unwrap().max_defect, 0.0);
        let d = distributivity_defect_at(TNormFamily::Product, 0.5, 0.5, 0.5);
        assert!(close(d, 0.0625, 1e-15));
        let coarse = distributivity_defect(ss(-2.0), 50).unwrap();
        let fine = distributivity_defect(ss(-32.0), 50).unwrap();
        assert!(fine.max_defect < coarse.max_defect);
        assert!(fine.mean_defect < coarse.mean_defect);
        assert!(matches!(distributivity_defect(ss(-2.0), 1), Err(TNormError::GridTooSmall(1))));
    }

    #[test]
    fn defect_sweep_is_reproducible() {
        let a = distributivity_defect(ss(-5.0), 31).unwrap();
        let b = distributivity_defect(ss(-5.0), 31).unwrap();
        assert_eq!(a.max_defect.to_bits(), b.max_defect.to_bits());
        assert_eq!(a.mean_defect.to_bits(), b.mean_defect.to_bits());
    }

    #[test]
    fn converges_to_min() {
        let dists: Vec<f64> =
            [-2.0, -8.0, -32.0, -64.0].iter().map(|&p| max_distance_to_min(ss(p), 0.05, 99).unwrap()).collect();
        assert!(dists.windows(2).all(|w| w[1] <= w[0]), "{dists:?}");
        assert!(dists[3] <= 0.02);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn fam() -> impl Strategy<Value = TNormFamily> {
            prop_oneof![
                Just(TNormFamily::MinMax),
                Just(TNormFamily::Product),
                Just(TNormFamily::Drastic),
                (-200.0..-0.05f64).prop_map(|p| TNormFamily::schweizer_sklar(p).unwrap()),
                (0.05..5.0f64).prop_map(|p| TNormFamily::schweizer_sklar(p).unwrap()),
            ]
        }

        proptest! {
            #[test]
            fn axioms(fam in fam(), x in 0.0..=1.0f64, y in 0.0..=1.0f64, z in 0.0..=1.0f64) {
                let t = |a, b| fam.tnorm(a, b).unwrap();
                prop_assert_eq!(t(x, y), t(y, x));
                prop_assert!((t(x, t(y, z)) - t(t(x, y), z)).abs() <= 1e-9);
                prop_assert_eq!(t(x, 1.0), x);
                let (lo, hi) = if y <= z { (y, z) } else { (z, y) };
                prop_assert!(t(x, lo) <= t(x, hi) + 1e-15);
                let v = t(x, y);
                prop_assert!((0.0..=1.0).contains(&v));
            }

            #[test]
            fn stable_never_exceeds_min(p in -1e6..-1e-3f64, x in 0.0..=1.0f64, y in 0.0..=1.0f64) {
                prop_assert!(ss_tnorm_stable(p, x, y) <= x.min(y));
            }
        }
    }
}
