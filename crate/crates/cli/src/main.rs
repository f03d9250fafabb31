//! `paraquant`: runs the logic, t-norm, σ-mapping and evidential-error
//! experiments from the command line. Reports go to stdout as JSON, or to a
//! CSV file with `--out`.

mod output;

use std::fmt::Display;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use paraquant::dsl::{self, Environment, Expr};
use paraquant::ee::{self, Kernel, NoiseModel, ShiftMode};
use paraquant::logic::{self, cd_impl, cd_join, cd_meet, cd_neg};
use paraquant::quantum::{self, AuditReport};
use paraquant::tnorm::{self, DefectReport};
use paraquant::{ImplVariant, OpMap, PBit, SigmaConfig, SigmaConvention, TNormFamily};
use serde::Serialize;
use serde_json::json;

#[derive(Parser, Debug)]
#[command(name = "paraquant", version, about = "Paraconsistent fuzzy logic and its quantum-like mapping")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate an expression under one semantics.
    Eval(EvalArgs),
    /// Print the crisp table of one connective.
    TruthTable(TruthTableArgs),
    /// Measure how well σ carries meet/join/negation onto amplitude arithmetic.
    Audit(AuditArgs),
    /// Distributivity defect of each family over a grid.
    SweepDefect(SweepDefectArgs),
    /// Fit the Schweizer–Sklar exponent to evidential-error smoothed meets.
    EeFit(EeFitArgs),
    /// Check the swap De Morgan laws on random pairs.
    DemorganCheck(DemorganArgs),
    /// Estimate an expression with random(ρ) leaves by repeated sampling.
    Sample(SampleArgs),
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum Family {
    Minmax,
    Product,
    Ss,
    Drastic,
}

#[derive(Args, Debug)]
struct FamilyArgs {
    #[arg(long, value_enum, default_value = "minmax")]
    family: Family,
    /// Schweizer–Sklar exponent; required with `--family ss`.
    #[arg(long, allow_negative_numbers = true)]
    p: Option<f64>,
}

impl FamilyArgs {
    fn resolve(&self) -> Result<TNormFamily, CliError> {
        match (self.family, self.p) {
            (Family::Minmax, _) => Ok(TNormFamily::MinMax),
            (Family::Product, _) => Ok(TNormFamily::Product),
            (Family::Drastic, _) => Ok(TNormFamily::Drastic),
            (Family::Ss, Some(p)) => TNormFamily::schweizer_sklar(p).map_err(CliError::usage),
            (Family::Ss, None) => Err(CliError::Usage("--family ss needs --p".into())),
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq)]
enum Semantics {
    Crisp,
    Fuzzy,
    Quantum,
    Compare,
}

#[derive(Args, Debug)]
struct EvalArgs {
    #[arg(long)]
    expr: String,
    /// JSON file binding atoms, e.g. `{"a": {"pair": [0.7, 0.2]}, "c": "B"}`.
    #[arg(long)]
    env: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "crisp")]
    semantics: Semantics,
    #[command(flatten)]
    family: FamilyArgs,
    #[arg(long = "impl", default_value = "printed")]
    implication: ImplVariant,
    #[arg(long, default_value = "pure_generator")]
    sigma: SigmaConvention,
    #[arg(long, default_value = "printed")]
    op_map: OpMap,
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum Op {
    Meet,
    Join,
    Neg,
    Impl,
}

#[derive(Args, Debug)]
struct TruthTableArgs {
    #[arg(long, value_enum)]
    op: Op,
    #[arg(long, default_value = "printed")]
    variant: ImplVariant,
}

#[derive(Args, Debug)]
struct AuditArgs {
    /// Schweizer–Sklar exponents (negative), repeatable or comma separated.
    #[arg(long, allow_hyphen_values = true, value_delimiter = ',', default_values_t = [-1.0, -2.0, -4.0, -8.0, -16.0, -32.0])]
    p: Vec<f64>,
    #[arg(long, default_value_t = 10_000)]
    samples: usize,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct SweepDefectArgs {
    /// Schweizer–Sklar exponents; min/max and product rows are always included.
    #[arg(long, allow_hyphen_values = true, value_delimiter = ',', default_values_t = [-0.5, -1.0, -2.0, -4.0, -8.0, -16.0, -32.0, -64.0])]
    p: Vec<f64>,
    #[arg(long, default_value_t = 50)]
    grid: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct EeFitArgs {
    #[arg(long, value_delimiter = ',', default_values_t = [0.2, 0.1, 0.05, 0.02])]
    epsilon: Vec<f64>,
    /// Observations per evidence count.
    #[arg(long, default_value_t = 1000)]
    n: u64,
    /// Largest count perturbation.
    #[arg(long, default_value_t = 250)]
    k: u64,
    #[arg(long, default_value_t = 11)]
    grid: usize,
    #[arg(long, default_value_t = 100_000)]
    samples: usize,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long, default_value = "common_shift")]
    shift: ShiftMode,
    #[arg(long, default_value = "binomial_symmetric")]
    kernel: Kernel,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct DemorganArgs {
    /// Schweizer–Sklar exponents checked alongside min/max, product and drastic.
    #[arg(long, allow_hyphen_values = true, value_delimiter = ',', default_values_t = [-1.0, -8.0])]
    p: Vec<f64>,
    #[arg(long, default_value_t = 10_000)]
    samples: usize,
    #[arg(long, default_value_t = 42)]
    seed: u64,
}

#[derive(Args, Debug)]
struct SampleArgs {
    #[arg(long)]
    expr: String,
    #[arg(long)]
    env: Option<PathBuf>,
    #[arg(long, default_value_t = 100_000)]
    trials: usize,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long = "impl", default_value = "printed")]
    implication: ImplVariant,
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Eval(String),
}

impl CliError {
    fn usage(e: impl Display) -> Self {
        CliError::Usage(e.to_string())
    }

    fn eval(e: impl Display) -> Self {
        CliError::Eval(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Eval(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Eval(a) => eval(a),
        Command::TruthTable(a) => truth_table(a),
        Command::Audit(a) => audit(a),
        Command::SweepDefect(a) => sweep_defect(a),
        Command::EeFit(a) => ee_fit(a),
        Command::DemorganCheck(a) => demorgan(a),
        Command::Sample(a) => sample(a),
    }
}

fn emit<T: Serialize>(value: &T) -> Result<(), CliError> {
    output::print_json(value).map_err(CliError::eval)
}

fn load(expr: &str, env: Option<&Path>) -> Result<(Expr, Environment), CliError> {
    let e = dsl::parse(expr).map_err(|err| CliError::Eval(format!("parse error at {err}")))?;
    let env = match env {
        Some(path) => {
            let text =
                std::fs::read_to_string(path).map_err(|err| CliError::Eval(format!("{}: {err}", path.display())))?;
            Environment::from_json(&text).map_err(CliError::eval)?
        }
        None => Environment::new(),
    };
    Ok((e, env))
}

fn eval(a: EvalArgs) -> Result<(), CliError> {
    let fam = a.family.resolve()?;
    let (e, env) = load(&a.expr, a.env.as_deref())?;
    let sigma = || SigmaConfig::new(fam, a.sigma, a.op_map).map_err(CliError::eval);
    match a.semantics {
        Semantics::Crisp => {
            let v = dsl::eval_crisp(&e, &env, a.implication).map_err(CliError::eval)?;
            emit(&json!({ "value": v.to_string() }))
        }
        Semantics::Fuzzy => {
            let v = dsl::eval_fuzzy(&e, &env, fam, a.implication).map_err(CliError::eval)?;
            emit(&json!({ "value": v }))
        }
        Semantics::Quantum => {
            let v = dsl::eval_quantum(&e, &env, &sigma()?).map_err(CliError::eval)?;
            emit(&json!({ "value": v }))
        }
        Semantics::Compare => emit(&dsl::compare(&e, &env, &sigma()?, fam).map_err(CliError::eval)?),
    }
}

fn truth_table(a: TruthTableArgs) -> Result<(), CliError> {
    let rows: Vec<_> = match a.op {
        Op::Neg => PBit::ALL.iter().map(|&x| json!({ "a": x.to_string(), "value": cd_neg(x).to_string() })).collect(),
        op => {
            let f = |x, y| match op {
                Op::Meet => cd_meet(x, y),
                Op::Join => cd_join(x, y),
                _ => cd_impl(x, y, a.variant),
            };
            PBit::ALL
                .iter()
                .flat_map(|&x| PBit::ALL.iter().map(move |&y| (x, y)))
                .map(|(x, y)| json!({ "a": x.to_string(), "b": y.to_string(), "value": f(x, y).to_string() }))
                .collect()
        }
    };
    let op = format!("{:?}", a.op).to_lowercase();
    match a.op {
        Op::Impl => emit(&json!({ "op": op, "variant": a.variant, "rows": rows })),
        _ => emit(&json!({ "op": op, "rows": rows })),
    }
}

fn audit(a: AuditArgs) -> Result<(), CliError> {
    let configs = quantum::sweep_configs(&a.p).map_err(CliError::usage)?;
    let report = quantum::audit_identities(&configs, a.samples, a.seed).map_err(CliError::eval)?;
    match &a.out {
        Some(path) => {
            output::write_csv_file(path, |w| report.write_csv(w)).map_err(CliError::eval)?;
            emit(&json!({ "out": path, "rows": report.rows.len(), "header": AuditReport::CSV_HEADER }))
        }
        None => emit(&report.rows),
    }
}

fn sweep_defect(a: SweepDefectArgs) -> Result<(), CliError> {
    let mut families = vec![TNormFamily::MinMax, TNormFamily::Product];
    for &p in &a.p {
        families.push(TNormFamily::schweizer_sklar(p).map_err(CliError::usage)?);
    }
    let rows = families
        .into_iter()
        .map(|fam| tnorm::distributivity_defect(fam, a.grid))
        .collect::<Result<Vec<_>, _>>()
        .map_err(CliError::eval)?;
    match &a.out {
        Some(path) => {
            output::write_csv_file(path, |w| {
                use std::io::Write;
                writeln!(w, "{}", DefectReport::CSV_HEADER)?;
                rows.iter().try_for_each(|r| writeln!(w, "{}", r.csv_row()))
            })
            .map_err(CliError::eval)?;
            emit(&json!({ "out": path, "rows": rows.len(), "header": DefectReport::CSV_HEADER }))
        }
        None => emit(&rows),
    }
}

fn ee_fit(a: EeFitArgs) -> Result<(), CliError> {
    let rows = a
        .epsilon
        .iter()
        .map(|&eps| {
            let nm = NoiseModel::new(eps, a.shift, a.kernel, a.k).map_err(CliError::usage)?;
            ee::ee_fit(&nm, a.n, a.grid, a.samples, a.seed).map_err(CliError::eval)
        })
        .collect::<Result<Vec<_>, _>>()?;
    match &a.out {
        Some(path) => {
            output::write_csv_file(path, |w| ee::write_ee_csv(&rows, w)).map_err(CliError::eval)?;
            emit(&json!({ "out": path, "rows": rows.len(), "header": ee::EeFitRow::CSV_HEADER }))
        }
        None => emit(&rows),
    }
}

fn demorgan(a: DemorganArgs) -> Result<(), CliError> {
    let mut families = vec![TNormFamily::MinMax, TNormFamily::Product, TNormFamily::Drastic];
    for &p in &a.p {
        families.push(TNormFamily::schweizer_sklar(p).map_err(CliError::usage)?);
    }
    let mut rows = Vec::new();
    for fam in families {
        let max_err = logic::de_morgan_defect(fam, a.samples, a.seed).map_err(CliError::eval)?;
        rows.push(json!({ "family": fam.to_string(), "max_err": max_err, "holds": max_err <= 1e-12 }));
    }
    let holds = rows.iter().all(|r| r["holds"] == true);
    emit(&json!({ "samples": a.samples, "seed": a.seed, "holds": holds, "rows": rows }))
}

fn sample(a: SampleArgs) -> Result<(), CliError> {
    let (e, env) = load(&a.expr, a.env.as_deref())?;
    let est = dsl::sample_random(&e, &env, a.implication, a.trials, a.seed).map_err(CliError::eval)?;
    emit(
        &json!({ "trials": a.trials, "seed": a.seed, "value": est.value, "stderr": est.stderr, "evidence": est.evidence }),
    )
}
