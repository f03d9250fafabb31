//! Evidential-error smoothing.
//!
//! Evidence counts `(n⁺, n⁻)` are treated as noisy: each is shifted by a
//! random mean-zero offset `k`, giving a distribution over nearby counts. The
//! smoothed conjunction is the expected min/max meet of the normalised
//! shifted counts. Fitting a Schweizer–Sklar exponent to the smoothed
//! surface shows how the amount of noise translates into an effective `p`.

use std::fmt;
use std::io::{self, Write};
use std::str::FromStr;

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;
use statrs::distribution::{Binomial, Discrete};

use crate::logic::{fuzzy_meet, Evidence, LogicError, TruthPair};
use crate::report::fmt_f64;
use crate::rng::stream_rng;
use crate::tnorm::{ss_tnorm_stable, TNormFamily};

const BATCH: usize = 4096;

/// Exponent search range for [`fit_ss_parameter`].
pub const FIT_P_MIN: f64 = -1e4;
pub const FIT_P_MAX: f64 = -0.1;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum EeError {
    #[error("error probability must lie in [0, 1), got {0}")]
    InvalidEpsilon(f64),
    #[error("perturbation bound {bound} exceeds total/4 for total {total}")]
    BoundTooLarge { bound: u64, total: u64 },
    #[error("Monte Carlo estimate needs at least one sample")]
    NoSamples,
    #[error("grid resolution must be at least 2, got {0}")]
    GridTooSmall(usize),
    #[error("surface is degenerate (all ones); nothing to fit")]
    DegenerateSurface,
    #[error(transparent)]
    Logic(#[from] LogicError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ShiftMode {
    /// `(n⁺ − k, n⁻ − k)`
    #[default]
    CommonShift,
    /// `(n⁺ − k, n⁻ + k)`: a misread observation moves from one side to the other.
    SwapShift,
}

impl ShiftMode {
    pub fn name(self) -> &'static str {
        match self {
            ShiftMode::CommonShift => "common_shift",
            ShiftMode::SwapShift => "swap_shift",
        }
    }
}

impl fmt::Display for ShiftMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ShiftMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "common_shift" => Ok(ShiftMode::CommonShift),
            "swap_shift" => Ok(ShiftMode::SwapShift),
            other => Err(format!("unknown shift mode `{other}`")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Kernel {
    /// `k = B₁ − B₂` with `B₁, B₂ ~ Binomial(K, ε)` independent.
    #[default]
    BinomialSymmetric,
    /// `k = 0` with probability `1 − ε`, otherwise uniform on `{±1, …, ±K}`.
    DiscreteUniform,
}

impl Kernel {
    pub fn name(self) -> &'static str {
        match self {
            Kernel::BinomialSymmetric => "binomial_symmetric",
            Kernel::DiscreteUniform => "discrete_uniform",
        }
    }
}

impl fmt::Display for Kernel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Kernel {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "binomial_symmetric" => Ok(Kernel::BinomialSymmetric),
            "discrete_uniform" => Ok(Kernel::DiscreteUniform),
            other => Err(format!("unknown kernel `{other}`")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NoiseModel {
    epsilon: f64,
    pub shift_mode: ShiftMode,
    pub kernel: Kernel,
    /// Largest shift `K`.
    pub bound: u64,
}

impl NoiseModel {
    pub fn new(epsilon: f64, shift_mode: ShiftMode, kernel: Kernel, bound: u64) -> Result<Self, EeError> {
        if !(0.0..1.0).contains(&epsilon) {
            return Err(EeError::InvalidEpsilon(epsilon));
        }
        Ok(NoiseModel { epsilon, shift_mode, kernel, bound })
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    /// Probabilities of `k = −K..=K`, index `k + K`. Symmetric by construction.
    fn kernel_pmf(&self) -> Vec<f64> {
        let k = self.bound as usize;
        let mut pmf = vec![0.0; 2 * k + 1];
        if self.epsilon == 0.0 || k == 0 {
            pmf[k] = 1.0;
            return pmf;
        }
        match self.kernel {
            Kernel::BinomialSymmetric => {
                let b = Binomial::new(self.epsilon, self.bound).expect("valid binomial parameters");
                let mass: Vec<f64> = (0..=self.bound).map(|j| b.pmf(j)).collect();
                for d in 0..=k {
                    // P(B₁ − B₂ = d) = Σ_j P(B₁ = j + d)·P(B₂ = j)
                    let p: f64 = (0..=k - d).map(|j| mass[j + d] * mass[j]).sum();
                    pmf[k + d] = p;
                    pmf[k - d] = p;
                }
            }
            Kernel::DiscreteUniform => {
                let each = self.epsilon / (2 * k) as f64;
                pmf.iter_mut().for_each(|p| *p = each);
                pmf[k] = 1.0 - self.epsilon;
            }
        }
        pmf
    }
}

/// Finite distribution over evidence count pairs sharing a reference total.
#[derive(Debug, Clone, PartialEq)]
pub struct EvidenceDistribution {
    support: Vec<(u64, u64)>,
    probs: Vec<f64>,
    cumulative: Vec<f64>,
    total: u64,
}

impl EvidenceDistribution {
    fn new(support: Vec<(u64, u64)>, probs: Vec<f64>, total: u64) -> Self {
        let mut acc = 0.0;
        let cumulative = probs
            .iter()
            .map(|p| {
                acc += p;
                acc
            })
            .collect();
        EvidenceDistribution { support, probs, cumulative, total }
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn iter(&self) -> impl Iterator<Item = ((u64, u64), f64)> + '_ {
        self.support.iter().copied().zip(self.probs.iter().copied())
    }

    pub fn len(&self) -> usize {
        self.support.len()
    }

    pub fn is_empty(&self) -> bool {
        self.support.is_empty()
    }

    pub fn mean(&self) -> (f64, f64) {
        self.iter().fold((0.0, 0.0), |(a, b), ((p, m), w)| (a + w * p as f64, b + w * m as f64))
    }

    /// Support point at cumulative probability `u ∈ [0, 1)`.
    pub fn quantile(&self, u: f64) -> Evidence {
        let last = self.cumulative.len() - 1;
        let target = u * self.cumulative[last];
        let i = self.cumulative.partition_point(|&c| c <= target).min(last);
        let (plus, minus) = self.support[i];
        Evidence { plus, minus, total: self.total }
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Evidence {
        self.quantile(rng.random())
    }
}

/// Distribution of shifted counts for `e` under `nm`.
///
/// Shifts are restricted to the largest symmetric window `|k| ≤ r` that keeps
/// every shifted count inside `[0, total]`, then renormalised. Because the
/// kernel is symmetric the mean stays at `(n⁺, n⁻)`.
pub fn perturb(nm: &NoiseModel, e: Evidence) -> Result<EvidenceDistribution, EeError> {
    if nm.bound > e.total / 4 {
        return Err(EeError::BoundTooLarge { bound: nm.bound, total: e.total });
    }
    let k = nm.bound;
    let window = [e.plus, e.total - e.plus, e.minus, e.total - e.minus, k].into_iter().min().unwrap_or(0) as i64;
    let pmf = nm.kernel_pmf();
    let mut support = Vec::new();
    let mut probs = Vec::new();
    for shift in -window..=window {
        let p = pmf[(shift + k as i64) as usize];
        if p == 0.0 {
            continue;
        }
        let plus = (e.plus as i64 - shift) as u64;
        let minus = match nm.shift_mode {
            ShiftMode::CommonShift => (e.minus as i64 - shift) as u64,
            ShiftMode::SwapShift => (e.minus as i64 + shift) as u64,
        };
        support.push((plus, minus));
        probs.push(p);
    }
    let mass: f64 = probs.iter().sum();
    probs.iter_mut().for_each(|p| *p /= mass);
    Ok(EvidenceDistribution::new(support, probs, e.total))
}

/// Monte Carlo estimate with per-component standard errors.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MeetEstimate {
    pub value: TruthPair,
    pub stderr: [f64; 2],
}

/// Smoothed conjunction: mean of the min/max meet of independently perturbed
/// arguments.
///
/// Each draw uses a pair of uniforms `(u₁, u₂)` and averages the meet over
/// both assignments of the uniforms to the arguments, which makes the
/// estimate exactly symmetric in `e1`, `e2` for a fixed seed. Samples are
/// split into fixed-size batches on their own streams and merged in order.
pub fn ee_meet_star(
    e1: Evidence,
    e2: Evidence,
    nm: &NoiseModel,
    samples: usize,
    seed: u64,
) -> Result<MeetEstimate, EeError> {
    if samples == 0 {
        return Err(EeError::NoSamples);
    }
    let d1 = perturb(nm, e1)?;
    let d2 = perturb(nm, e2)?;
    if d1.len() == 1 && d2.len() == 1 {
        let value = fuzzy_meet(d1.quantile(0.0).normalize(), d2.quantile(0.0).normalize(), TNormFamily::MinMax);
        return Ok(MeetEstimate { value, stderr: [0.0, 0.0] });
    }
    let batches = samples.div_ceil(BATCH);
    let partial: Vec<[f64; 4]> = (0..batches)
        .into_par_iter()
        .map(|b| {
            let mut rng = stream_rng(seed, b as u64);
            let n = BATCH.min(samples - b * BATCH);
            let mut acc = [0.0; 4];
            for _ in 0..n {
                let (u1, u2): (f64, f64) = (rng.random(), rng.random());
                let m1 = fuzzy_meet(d1.quantile(u1).normalize(), d2.quantile(u2).normalize(), TNormFamily::MinMax);
                let m2 = fuzzy_meet(d1.quantile(u2).normalize(), d2.quantile(u1).normalize(), TNormFamily::MinMax);
                let plus = 0.5 * (m1.plus + m2.plus);
                let minus = 0.5 * (m1.minus + m2.minus);
                acc[0] += plus;
                acc[1] += plus * plus;
                acc[2] += minus;
                acc[3] += minus * minus;
            }
            acc
        })
        .collect();
    let mut acc = [0.0; 4];
    for p in &partial {
        for (a, v) in acc.iter_mut().zip(p) {
            *a += v;
        }
    }
    let n = samples as f64;
    let stderr = |sum: f64, sumsq: f64| {
        if samples < 2 {
            return 0.0;
        }
        let mean = sum / n;
        ((sumsq / n - mean * mean).max(0.0) * n / (n - 1.0) / n).sqrt()
    };
    Ok(MeetEstimate {
        value: TruthPair::new_unchecked((acc[0] / n).clamp(0.0, 1.0), (acc[2] / n).clamp(0.0, 1.0)),
        stderr: [stderr(acc[0], acc[1]), stderr(acc[2], acc[3])],
    })
}

/// Values of a conjunction over a square grid, row-major in `(x, y)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Surface {
    pub coords: Vec<f64>,
    pub values: Vec<f64>,
    pub stderr: Vec<f64>,
}

impl Surface {
    pub fn from_fn(coords: Vec<f64>, f: impl Fn(f64, f64) -> f64) -> Self {
        let values = coords.iter().flat_map(|&x| coords.iter().map(move |&y| (x, y))).map(|(x, y)| f(x, y)).collect();
        let stderr = vec![0.0; coords.len() * coords.len()];
        Surface { coords, values, stderr }
    }

    pub fn grid(&self) -> usize {
        self.coords.len()
    }

    pub fn at(&self, i: usize, j: usize) -> f64 {
        self.values[i * self.grid() + j]
    }

    pub fn stderr_at(&self, i: usize, j: usize) -> f64 {
        self.stderr[i * self.grid() + j]
    }
}

fn mix_seed(seed: u64, a: u64, b: u64) -> u64 {
    // splitmix64 finaliser over the combined key
    let mut z = seed ^ a.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ b.wrapping_mul(0xD1B5_4A32_D192_ED03);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Smoothed min over a `grid × grid` lattice on `[0,1]²`.
///
/// Grid point `x` becomes the evidence `(round(x·N), N − round(x·N), N)`; the
/// surface coordinates are the resulting weights `round(x·N)/N`. Cells `(i,j)`
/// and `(j,i)` share a seed, so the surface is exactly symmetric.
pub fn smoothed_tnorm_surface(
    nm: &NoiseModel,
    total: u64,
    grid: usize,
    samples: usize,
    seed: u64,
) -> Result<Surface, EeError> {
    if grid < 2 {
        return Err(EeError::GridTooSmall(grid));
    }
    if samples == 0 {
        return Err(EeError::NoSamples);
    }
    let counts: Vec<u64> =
        crate::tnorm::linspace(0.0, 1.0, grid).into_iter().map(|x| (x * total as f64).round() as u64).collect();
    let evidence = counts.iter().map(|&c| Evidence::new(c, total - c, total)).collect::<Result<Vec<_>, _>>()?;
    let cells: Vec<(usize, usize)> = (0..grid).flat_map(|i| (i..grid).map(move |j| (i, j))).collect();
    let estimates = cells
        .par_iter()
        .map(|&(i, j)| ee_meet_star(evidence[i], evidence[j], nm, samples, mix_seed(seed, i as u64, j as u64)))
        .collect::<Result<Vec<_>, _>>()?;
    let mut values = vec![0.0; grid * grid];
    let mut stderr = vec![0.0; grid * grid];
    for (&(i, j), est) in cells.iter().zip(&estimates) {
        for idx in [i * grid + j, j * grid + i] {
            values[idx] = est.value.plus;
            stderr[idx] = est.stderr[0];
        }
    }
    let coords = counts.iter().map(|&c| c as f64 / total as f64).collect();
    Ok(Surface { coords, values, stderr })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SsFit {
    pub p_hat: f64,
    pub rss: f64,
    /// The optimum sits on an end of the search range.
    pub at_bound: bool,
}

fn ss_rss(surface: &Surface, p: f64) -> f64 {
    let g = surface.grid();
    let mut rss = 0.0;
    for i in 0..g {
        for j in 0..g {
            let d = ss_tnorm_stable(p, surface.coords[i], surface.coords[j]) - surface.at(i, j);
            rss += d * d;
        }
    }
    rss
}

/// Least-squares Schweizer–Sklar exponent for a surface.
///
/// Searches `p ∈ [−10⁴, −0.1]` in `ln(−p)`: a coarse log-spaced scan
/// brackets the best point, then golden-section search refines it.
pub fn fit_ss_parameter(surface: &Surface) -> Result<SsFit, EeError> {
    if surface.values.iter().all(|&v| v >= 1.0) {
        return Err(EeError::DegenerateSurface);
    }
    let objective = |u: f64| ss_rss(surface, -u.exp());
    let (lo, hi) = ((-FIT_P_MAX).ln(), (-FIT_P_MIN).ln());

    const SCAN: usize = 64;
    let scan: Vec<f64> = crate::tnorm::linspace(lo, hi, SCAN);
    let scores: Vec<f64> = scan.iter().map(|&u| objective(u)).collect();
    let best = scores.iter().enumerate().min_by(|a, b| a.1.total_cmp(b.1)).map(|(i, _)| i).unwrap_or(0);
    let mut a = scan[best.saturating_sub(1)];
    let mut b = scan[(best + 1).min(SCAN - 1)];

    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let (mut fc, mut fd) = (objective(c), objective(d));
    while b - a > 1e-10 {
        if fc <= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = objective(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = objective(d);
        }
    }
    // the bracket never contains the endpoints themselves, so compare against them;
    // a flat tail at large |p| (the form rounds to exactly min) resolves to the bound
    let mut u = 0.5 * (a + b);
    let mut rss = objective(u);
    for (end, wins_ties) in [(lo, false), (hi, true)] {
        let f_end = objective(end);
        if f_end < rss || (wins_ties && f_end <= rss) {
            u = end;
            rss = f_end;
        }
    }
    let at_bound = (u - lo).abs() < 1e-6 || (hi - u).abs() < 1e-6;
    let p_hat = if u == hi {
        FIT_P_MIN
    } else if u == lo {
        FIT_P_MAX
    } else {
        -u.exp()
    };
    Ok(SsFit { p_hat, rss, at_bound })
}

/// One row of an evidential-error fitting experiment.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EeFitRow {
    pub epsilon: f64,
    pub shift_mode: ShiftMode,
    pub kernel: Kernel,
    #[serde(rename = "K")]
    pub bound: u64,
    #[serde(rename = "N")]
    pub total: u64,
    pub samples: usize,
    pub seed: u64,
    pub p_hat: f64,
    pub fit_rss: f64,
    pub at_bound: bool,
}

impl EeFitRow {
    pub const CSV_HEADER: &'static str = "epsilon,shift_mode,kernel,K,N,samples,seed,p_hat,fit_rss,at_bound";

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{}",
            fmt_f64(self.epsilon),
            self.shift_mode,
            self.kernel,
            self.bound,
            self.total,
            self.samples,
            self.seed,
            fmt_f64(self.p_hat),
            fmt_f64(self.fit_rss),
            self.at_bound
        )
    }
}

pub fn write_ee_csv<W: Write>(rows: &[EeFitRow], mut w: W) -> io::Result<()> {
    writeln!(w, "{}", EeFitRow::CSV_HEADER)?;
    for r in rows {
        writeln!(w, "{}", r.csv_row())?;
    }
    Ok(())
}

/// Builds the smoothed surface for `nm` and fits an exponent to it.
pub fn ee_fit(nm: &NoiseModel, total: u64, grid: usize, samples: usize, seed: u64) -> Result<EeFitRow, EeError> {
    let surface = smoothed_tnorm_surface(nm, total, grid, samples, seed)?;
    let fit = fit_ss_parameter(&surface)?;
    Ok(EeFitRow {
        epsilon: nm.epsilon,
        shift_mode: nm.shift_mode,
        kernel: nm.kernel,
        bound: nm.bound,
        total,
        samples,
        seed,
        p_hat: fit.p_hat,
        fit_rss: fit.rss,
        at_bound: fit.at_bound,
    })
}
