use rand::Rng;
use serde::Serialize;

use super::ast::Expr;
use super::env::{Environment, Value};
use crate::logic::{
    cd_impl, cd_join, cd_meet, cd_neg, embed_crisp, fuzzy_impl, fuzzy_join, fuzzy_meet, fuzzy_neg, Evidence,
    ImplVariant, PBit, TruthPair,
};
use crate::quantum::{modulus_errors, sigma, Amplitude, OpMap, QuantumError, SigmaConfig};
use crate::rng::stream_rng;
use crate::tnorm::{TNormError, TNormFamily};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum EvalError {
    #[error("atom `{0}` is not bound")]
    UnboundAtom(String),
    #[error("leaf `{0}` is not a crisp truth value")]
    NonCrispLeaf(String),
    #[error("random(ρ) has no crisp value; use sampling instead")]
    RandomInCrisp,
    #[error("random(ρ) is only supported under crisp sampling, not {0} evaluation")]
    RandomNotSupported(&'static str),
    #[error("implication has no quantum counterpart")]
    ImpliesInQuantum,
    #[error("sampling needs at least one trial")]
    NoTrials,
    #[error(transparent)]
    TNorm(#[from] TNormError),
    #[error(transparent)]
    Quantum(#[from] QuantumError),
}

fn lookup<'a>(env: &'a Environment, name: &str) -> Result<&'a Value, EvalError> {
    env.get(name).ok_or_else(|| EvalError::UnboundAtom(name.to_string()))
}

fn leaf_pair(value: &Value) -> TruthPair {
    match value {
        Value::Crisp(b) => embed_crisp(*b),
        Value::Pair(p) => *p,
        Value::Counts(e) => e.normalize(),
    }
}

fn crisp_leaf(pair: TruthPair, label: impl FnOnce() -> String) -> Result<PBit, EvalError> {
    PBit::try_from(pair).map_err(|_| EvalError::NonCrispLeaf(label()))
}

fn counts_label(e: &Evidence) -> String {
    format!("{{{},{},{}}}", e.plus, e.minus, e.total)
}

fn crisp_with<F>(e: &Expr, env: &Environment, variant: ImplVariant, random: &mut F) -> Result<PBit, EvalError>
where
    F: FnMut(f64) -> Result<PBit, EvalError>,
{
    Ok(match e {
        Expr::Atom(name) => match lookup(env, name)? {
            Value::Crisp(b) => *b,
            other => crisp_leaf(leaf_pair(other), || name.clone())?,
        },
        Expr::Crisp(b) => *b,
        Expr::Pair(p) => crisp_leaf(*p, || e.to_string())?,
        Expr::Counts(c) => crisp_leaf(c.normalize(), || counts_label(c))?,
        Expr::Random(rho) => random(*rho)?,
        Expr::Not(x) => cd_neg(crisp_with(x, env, variant, random)?),
        Expr::And(l, r) => cd_meet(crisp_with(l, env, variant, random)?, crisp_with(r, env, variant, random)?),
        Expr::Or(l, r) => cd_join(crisp_with(l, env, variant, random)?, crisp_with(r, env, variant, random)?),
        Expr::Implies(l, r) => {
            cd_impl(crisp_with(l, env, variant, random)?, crisp_with(r, env, variant, random)?, variant)
        }
    })
}

/// Folds the expression with the crisp CD operations. Pair and count leaves
/// are accepted only when they are exactly crisp.
pub fn eval_crisp(e: &Expr, env: &Environment, variant: ImplVariant) -> Result<PBit, EvalError> {
    crisp_with(e, env, variant, &mut |_| Err(EvalError::RandomInCrisp))
}

pub fn eval_fuzzy(e: &Expr, env: &Environment, fam: TNormFamily, variant: ImplVariant) -> Result<TruthPair, EvalError> {
    fam.validate()?;
    Ok(match e {
        Expr::Atom(name) => leaf_pair(lookup(env, name)?),
        Expr::Crisp(b) => embed_crisp(*b),
        Expr::Pair(p) => *p,
        Expr::Counts(c) => c.normalize(),
        Expr::Random(_) => return Err(EvalError::RandomNotSupported("fuzzy")),
        Expr::Not(x) => fuzzy_neg(eval_fuzzy(x, env, fam, variant)?),
        Expr::And(l, r) => fuzzy_meet(eval_fuzzy(l, env, fam, variant)?, eval_fuzzy(r, env, fam, variant)?, fam),
        Expr::Or(l, r) => fuzzy_join(eval_fuzzy(l, env, fam, variant)?, eval_fuzzy(r, env, fam, variant)?, fam),
        Expr::Implies(l, r) => {
            fuzzy_impl(eval_fuzzy(l, env, fam, variant)?, eval_fuzzy(r, env, fam, variant)?, fam, variant)?
        }
    })
}

fn combine(cfg: &SigmaConfig, conjunction: bool, l: Amplitude, r: Amplitude) -> Amplitude {
    match (cfg.op_map, conjunction) {
        (OpMap::Printed, true) | (OpMap::Summary, false) => l + r,
        (OpMap::Printed, false) | (OpMap::Summary, true) => l * r,
    }
}

/// Maps leaves through σ and folds `&`/`|` with complex `+`/`×` according to
/// the configuration's operator map; `~` becomes the reflection `z ↦ i·z̄`.
pub fn eval_quantum(e: &Expr, env: &Environment, cfg: &SigmaConfig) -> Result<Amplitude, EvalError> {
    Ok(match e {
        Expr::Atom(name) => sigma(cfg, leaf_pair(lookup(env, name)?))?,
        Expr::Crisp(b) => sigma(cfg, embed_crisp(*b))?,
        Expr::Pair(p) => sigma(cfg, *p)?,
        Expr::Counts(c) => sigma(cfg, c.normalize())?,
        Expr::Random(_) => return Err(EvalError::RandomNotSupported("quantum")),
        Expr::Not(x) => eval_quantum(x, env, cfg)?.reflect(),
        Expr::And(l, r) => combine(cfg, true, eval_quantum(l, env, cfg)?, eval_quantum(r, env, cfg)?),
        Expr::Or(l, r) => combine(cfg, false, eval_quantum(l, env, cfg)?, eval_quantum(r, env, cfg)?),
        Expr::Implies(..) => return Err(EvalError::ImpliesInQuantum),
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NodeError {
    pub expr: String,
    pub quantum: Amplitude,
    pub via_fuzzy: Amplitude,
    pub abs_err: f64,
    pub scaled_err: f64,
}

/// Distance between the quantum fold and σ of the fuzzy value at every node,
/// in post-order (the root is last).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComparisonReport {
    pub nodes: Vec<NodeError>,
    pub root_abs_err: f64,
    pub root_scaled_err: f64,
}

pub fn compare(
    e: &Expr,
    env: &Environment,
    cfg: &SigmaConfig,
    fam: TNormFamily,
) -> Result<ComparisonReport, EvalError> {
    fam.validate()?;
    let mut nodes = Vec::new();
    compare_node(e, env, cfg, fam, &mut nodes)?;
    let root = nodes.last().expect("every expression has a root");
    Ok(ComparisonReport { root_abs_err: root.abs_err, root_scaled_err: root.scaled_err, nodes })
}

fn compare_node(
    e: &Expr,
    env: &Environment,
    cfg: &SigmaConfig,
    fam: TNormFamily,
    out: &mut Vec<NodeError>,
) -> Result<(Amplitude, TruthPair), EvalError> {
    let (quantum, fuzzy) = match e {
        Expr::Not(x) => {
            let (q, f) = compare_node(x, env, cfg, fam, out)?;
            (q.reflect(), fuzzy_neg(f))
        }
        Expr::And(l, r) | Expr::Or(l, r) => {
            let conj = matches!(e, Expr::And(..));
            let (ql, fl) = compare_node(l, env, cfg, fam, out)?;
            let (qr, fr) = compare_node(r, env, cfg, fam, out)?;
            let f = if conj { fuzzy_meet(fl, fr, fam) } else { fuzzy_join(fl, fr, fam) };
            (combine(cfg, conj, ql, qr), f)
        }
        Expr::Implies(..) => return Err(EvalError::ImpliesInQuantum),
        Expr::Random(_) => return Err(EvalError::RandomNotSupported("quantum")),
        leaf => {
            let f = eval_fuzzy(leaf, env, fam, ImplVariant::default())?;
            (sigma(cfg, f)?, f)
        }
    };
    let via_fuzzy = sigma(cfg, fuzzy)?;
    let (abs_err, scaled_err) = modulus_errors(quantum, via_fuzzy);
    out.push(NodeError { expr: e.to_string(), quantum, via_fuzzy, abs_err, scaled_err });
    Ok((quantum, fuzzy))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SampleEstimate {
    pub value: TruthPair,
    pub stderr: [f64; 2],
    pub evidence: Evidence,
}

/// Resolves every `random(ρ)` leaf to `T` with probability `ρ` (else `F`),
/// independently per leaf and trial, evaluates crisply, and normalises the
/// aggregated outcomes.
pub fn sample_random(
    e: &Expr,
    env: &Environment,
    variant: ImplVariant,
    trials: usize,
    seed: u64,
) -> Result<SampleEstimate, EvalError> {
    if trials == 0 {
        return Err(EvalError::NoTrials);
    }
    // surface leaf errors before spending any randomness
    crisp_with(e, env, variant, &mut |_| Ok(PBit::TRUE))?;
    let mut rng = stream_rng(seed, 0);
    let (mut plus, mut minus) = (0u64, 0u64);
    for _ in 0..trials {
        let v =
            crisp_with(e, env, variant, &mut |rho| Ok(if rng.random_bool(rho) { PBit::TRUE } else { PBit::FALSE }))?;
        plus += v.t as u64;
        minus += v.f as u64;
    }
    let evidence = Evidence::new(plus, minus, trials as u64).expect("counts bounded by trials");
    let value = evidence.normalize();
    let n = trials as f64;
    let se = |w: f64| (w * (1.0 - w) / n).sqrt();
    Ok(SampleEstimate { value, stderr: [se(value.plus), se(value.minus)], evidence })
}
