use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use mpl_core::evaluator::li;
use mpl_core::numcore::{domain_check, BranchSign, CutSet, DomainFamily, EvalConfig};
use mpl_core::parity::CheckMode;
use mpl_core::regul::reg_value;
use mpl_core::wordalg::{ArgVector, Index};
use mpl_verify::parse::{parse_args, parse_index};
use mpl_verify::report::{emit, pair, pairs, to_json, Format, Theorem, SCHEMA};
use mpl_verify::run::{self, Job, SweepSpec};
use mpl_verify::suite::{self, Ctx, Scale};
use serde::{Deserialize, Serialize};

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_EVAL: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "mpl-verify", version, about = "Evaluate multiple polylogarithms and verify their parity identities")]
struct Cli {
    /// JSON file supplying defaults for any flag, plus an "eval" section
    /// with numeric settings
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate a single (possibly regularized) value
    Eval {
        #[command(flatten)]
        point: PointArgs,
        #[command(flatten)]
        shared: Shared,
    },
    /// Check one identity at one point
    Check {
        #[arg(long, value_enum)]
        theorem: Option<Theorem>,
        #[command(flatten)]
        point: PointArgs,
        #[command(flatten)]
        shared: Shared,
    },
    /// Seeded sweep over all small indices
    Sweep {
        #[arg(long, value_enum)]
        theorem: Option<Theorem>,
        #[arg(long)]
        depth_max: Option<usize>,
        #[arg(long)]
        weight_max: Option<u32>,
        /// random points per index (plain identity only)
        #[arg(long)]
        points: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        /// modulus range of the tail products
        #[arg(long)]
        rmin: Option<f64>,
        #[arg(long)]
        rmax: Option<f64>,
        /// root-of-unity orders for the regularized sweep
        #[arg(long, value_delimiter = ',')]
        roots: Option<Vec<u32>>,
        #[arg(long, value_enum)]
        mode: Option<ModeArg>,
        /// number of skipped points tolerated before the run fails
        #[arg(long)]
        max_skipped: Option<usize>,
        #[command(flatten)]
        shared: Shared,
    },
    /// Run the invariant suite at reduced scale
    Selftest {
        /// restrict to one module
        #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(suite::MODULES))]
        only: Option<String>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// negative control: perturb ζ(2) in the forward ρ table
        #[arg(long, hide = true)]
        corrupt_zeta: bool,
    },
}

#[derive(Args, Debug, Clone, Default)]
struct PointArgs {
    /// index, e.g. "2,1"
    #[arg(long, allow_hyphen_values = true)]
    k: Option<String>,
    /// arguments, e.g. "-2,0.5+1i,r4:1" (rN:j is e^{2πij/N})
    #[arg(long, allow_hyphen_values = true)]
    z: Option<String>,
    #[arg(long, value_enum)]
    mode: Option<ModeArg>,
}

#[derive(Args, Debug, Clone, Default)]
struct Shared {
    #[arg(long)]
    tol: Option<f64>,
    /// choice of log(-1): +1 for +πi, -1 for -πi
    #[arg(long, value_parser = parse_branch, allow_hyphen_values = true)]
    branch: Option<BranchSign>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum ModeArg {
    Plain,
    Stuffle,
    Shuffle,
}

impl From<ModeArg> for CheckMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Plain => CheckMode::Plain,
            ModeArg::Stuffle => CheckMode::Stuffle,
            ModeArg::Shuffle => CheckMode::Shuffle,
        }
    }
}

fn parse_branch(s: &str) -> Result<BranchSign, String> {
    match s.trim().replace('−', "-").as_str() {
        "+1" | "1" | "+" | "plus" => Ok(BranchSign::Plus),
        "-1" | "-" | "minus" => Ok(BranchSign::Minus),
        other => Err(format!("branch must be +1 or -1, got {other:?}")),
    }
}

/// Defaults read from `--config`; command-line flags take precedence.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    eval: Option<EvalConfig>,
    theorem: Option<Theorem>,
    mode: Option<ModeArg>,
    k: Option<String>,
    z: Option<String>,
    tol: Option<f64>,
    branch: Option<BranchSign>,
    out: Option<PathBuf>,
    format: Option<Format>,
    depth_max: Option<usize>,
    weight_max: Option<u32>,
    points: Option<usize>,
    seed: Option<u64>,
    rmin: Option<f64>,
    rmax: Option<f64>,
    roots: Option<Vec<u32>>,
    max_skipped: Option<usize>,
}

fn load_config(path: Option<&Path>) -> Result<FileConfig> {
    let Some(p) = path else {
        return Ok(FileConfig::default());
    };
    let text = std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", p.display()))
}

/// Failure carrying its exit code.
struct Failure {
    code: u8,
    error: anyhow::Error,
    violations: Vec<(usize, usize)>,
}

impl<E: Into<anyhow::Error>> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure {
            code: EXIT_USAGE,
            error: e.into(),
            violations: Vec::new(),
        }
    }
}

fn eval_failure(e: mpl_core::Error) -> Failure {
    let violations = match e {
        mpl_core::Error::Domain { i, j } => vec![(i, j)],
        _ => Vec::new(),
    };
    Failure {
        code: EXIT_EVAL,
        error: anyhow!(e),
        violations,
    }
}

#[derive(Serialize)]
struct ErrorBody {
    message: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    violations: Vec<[usize; 2]>,
}

#[derive(Serialize)]
struct ErrorReport {
    schema: u32,
    command: &'static str,
    error: ErrorBody,
}

struct Resolved {
    cfg: EvalConfig,
    tol: f64,
    out: Option<PathBuf>,
    format: Format,
}

fn resolve(file: &FileConfig, shared: &Shared) -> Result<Resolved> {
    let mut cfg = file.eval.clone().unwrap_or_default();
    if let Some(b) = shared.branch.or(file.branch) {
        cfg.branch_at_one = b;
    }
    cfg.validate().map_err(|e| anyhow!(e))?;
    let tol = shared.tol.or(file.tol).unwrap_or(cfg.target_tol);
    Ok(Resolved {
        tol,
        out: shared.out.clone().or_else(|| file.out.clone()),
        format: shared.format.or(file.format).unwrap_or_default(),
        cfg,
    })
}

fn point(file: &FileConfig, p: &PointArgs) -> Result<(Index, ArgVector)> {
    let k = p.k.as_deref().or(file.k.as_deref()).ok_or_else(|| anyhow!("--k is required"))?;
    let k = parse_index(k)?;
    let z = match p.z.as_deref().or(file.z.as_deref()) {
        Some(s) => parse_args(s)?,
        None => ArgVector::ones(k.depth()),
    };
    if z.len() != k.depth() {
        return Err(anyhow!("index has depth {} but {} arguments were given", k.depth(), z.len()));
    }
    Ok((k, z))
}

fn reject_on_cut(z: &ArgVector, family: DomainFamily, set: CutSet) -> Result<(), Failure> {
    let report = domain_check(z, family, set);
    match report.first() {
        None => Ok(()),
        Some((i, j)) => Err(Failure {
            code: EXIT_EVAL,
            error: anyhow!(mpl_core::Error::Domain { i, j }),
            violations: report.violations,
        }),
    }
}

#[derive(Serialize)]
struct EvalReport {
    schema: u32,
    command: &'static str,
    k: Vec<u32>,
    z: Vec<[f64; 2]>,
    mode: CheckMode,
    branch: BranchSign,
    value: [f64; 2],
    est_error: Option<f64>,
    method: &'static str,
}

fn cmd_eval(file: &FileConfig, p: &PointArgs, shared: &Shared) -> Result<bool, Failure> {
    let r = resolve(file, shared)?;
    let (k, z) = point(file, p)?;
    let mode: CheckMode = p.mode.or(file.mode).unwrap_or(ModeArg::Plain).into();
    reject_on_cut(&z, DomainFamily::Tail, CutSet::RealAboveOne)?;
    let (value, est_error, method) = match mode.reg_mode() {
        None => {
            let e = li(&k, &z, &r.cfg).map_err(eval_failure)?;
            (e.value, Some(e.est_error), e.method.as_str())
        }
        Some(m) => (reg_value(&k, &z, m, &r.cfg).map_err(eval_failure)?, None, "regularized"),
    };
    let rep = EvalReport {
        schema: SCHEMA,
        command: "eval",
        k: k.parts().to_vec(),
        z: pairs(&z),
        mode,
        branch: r.cfg.branch_at_one,
        value: pair(value),
        est_error,
        method,
    };
    let text = match r.format {
        Format::Json => to_json(&rep)?.into_bytes(),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["k", "mode", "branch", "value_re", "value_im", "est_error", "method"])?;
            w.write_record([
                k.to_string(),
                mode.as_str().to_string(),
                if r.cfg.branch_at_one == BranchSign::Plus { "1" } else { "-1" }.to_string(),
                value.re.to_string(),
                value.im.to_string(),
                est_error.map(|e| e.to_string()).unwrap_or_default(),
                method.to_string(),
            ])?;
            w.into_inner().map_err(|e| anyhow!(e.to_string()))?
        }
    };
    emit(&text, r.out.as_deref())?;
    Ok(true)
}

fn write_report(rep: &mpl_verify::report::CheckReport, r: &Resolved) -> Result<()> {
    let text = match r.format {
        Format::Json => to_json(rep)?.into_bytes(),
        Format::Csv => {
            let mut buf = Vec::new();
            rep.write_csv(&mut buf)?;
            buf
        }
    };
    emit(&text, r.out.as_deref())
}

fn cmd_check(file: &FileConfig, theorem: Option<Theorem>, p: &PointArgs, shared: &Shared) -> Result<bool, Failure> {
    let r = resolve(file, shared)?;
    let theorem = theorem.or(file.theorem).unwrap_or(Theorem::Main);
    let (k, z) = point(file, p)?;
    let mode = match (theorem, p.mode.or(file.mode)) {
        (Theorem::Main, None | Some(ModeArg::Plain)) => CheckMode::Plain,
        (Theorem::Main, Some(_)) => return Err(anyhow!("the main identity uses plain values").into()),
        (Theorem::Reg, None) => CheckMode::Stuffle,
        (Theorem::Reg, Some(ModeArg::Plain)) => return Err(anyhow!("the regularized identity needs --mode stuffle or shuffle").into()),
        (Theorem::Reg, Some(m)) => m.into(),
        (Theorem::Zeta, None | Some(ModeArg::Stuffle)) => CheckMode::Stuffle,
        (Theorem::Zeta, Some(_)) => return Err(anyhow!("the zeta-value identity uses stuffle regularization").into()),
    };
    match theorem {
        Theorem::Main => reject_on_cut(&z, DomainFamily::All, CutSet::NonNegReal)?,
        Theorem::Reg => reject_on_cut(&z, DomainFamily::All, CutSet::NonNegRealExceptOne)?,
        Theorem::Zeta => {}
    }
    let z = if theorem == Theorem::Zeta { ArgVector::ones(k.depth()) } else { z };
    let job = Job {
        point: 0,
        theorem,
        mode,
        k,
        z,
        branches: vec![r.cfg.branch_at_one],
    };
    let records = run::run_job(&job, &r.cfg, r.tol);
    if let Some(err) = records.iter().find_map(|x| x.error.clone()) {
        return Err(Failure {
            code: EXIT_EVAL,
            error: anyhow!(err),
            violations: Vec::new(),
        });
    }
    let rep = run::report("check", theorem, None, r.tol, records);
    write_report(&rep, &r)?;
    Ok(run::succeeded(&rep.summary, 0))
}

#[allow(clippy::too_many_arguments)]
fn cmd_sweep(
    file: &FileConfig,
    theorem: Option<Theorem>,
    depth_max: Option<usize>,
    weight_max: Option<u32>,
    points: Option<usize>,
    seed: Option<u64>,
    (rmin, rmax): (Option<f64>, Option<f64>),
    roots: Option<Vec<u32>>,
    mode: Option<ModeArg>,
    max_skipped: Option<usize>,
    shared: &Shared,
) -> Result<bool, Failure> {
    let r = resolve(file, shared)?;
    let theorem = theorem.or(file.theorem).unwrap_or(Theorem::Main);
    let modes = match (theorem, mode.or(file.mode)) {
        (Theorem::Main, _) => vec![CheckMode::Plain],
        (Theorem::Reg, None | Some(ModeArg::Plain)) => vec![CheckMode::Stuffle, CheckMode::Shuffle],
        (Theorem::Reg, Some(m)) => vec![m.into()],
        (Theorem::Zeta, _) => vec![CheckMode::Stuffle],
    };
    let branches = match (theorem, shared.branch.or(file.branch)) {
        (_, Some(b)) => vec![b],
        (Theorem::Reg, None) => vec![BranchSign::Plus, BranchSign::Minus],
        (_, None) => vec![r.cfg.branch_at_one],
    };
    let seed = seed.or(file.seed).unwrap_or(r.cfg.rng_seed);
    let spec = SweepSpec {
        theorem,
        modes,
        branches,
        depth_max: depth_max.or(file.depth_max).unwrap_or(2),
        weight_max: weight_max.or(file.weight_max).unwrap_or(4),
        points: points.or(file.points).unwrap_or(20),
        seed,
        rmin: rmin.or(file.rmin).unwrap_or(1.3),
        rmax: rmax.or(file.rmax).unwrap_or(3.0),
        roots: roots.or_else(|| file.roots.clone()).unwrap_or_else(|| vec![2, 4]),
    };
    if !(spec.rmin > 0.0 && spec.rmin <= spec.rmax) {
        return Err(anyhow!("need 0 < rmin <= rmax").into());
    }
    if spec.roots.contains(&0) {
        return Err(anyhow!("root orders must be positive").into());
    }
    let start = std::time::Instant::now();
    let jobs = run::sweep_jobs(&spec);
    let records = run::run_jobs(&jobs, &r.cfg, r.tol);
    let rep = run::report("sweep", theorem, Some(seed), r.tol, records);
    write_report(&rep, &r)?;
    let s = &rep.summary;
    eprintln!(
        "{} records: {} passed, {} failed, {} skipped, {} errors; max residual {:.3e} ({:.1}s)",
        s.records,
        s.passed,
        s.failed,
        s.skipped,
        s.errors,
        s.max_residual.unwrap_or(f64::NAN),
        start.elapsed().as_secs_f64()
    );
    Ok(run::succeeded(s, max_skipped.or(file.max_skipped).unwrap_or(0)))
}

#[derive(Serialize)]
struct SelftestReport<'a> {
    schema: u32,
    command: &'static str,
    seed: u64,
    only: Option<&'a str>,
    results: Vec<suite::Outcome>,
    passed: usize,
    failed: usize,
}

fn cmd_selftest(file: &FileConfig, only: Option<&str>, seed: Option<u64>, out: Option<&Path>, corrupt: bool) -> Result<bool, Failure> {
    let base = file.eval.clone().unwrap_or_default();
    let seed = seed.or(file.seed).unwrap_or(base.rng_seed);
    let mut ctx = Ctx::new(seed, Scale::Reduced);
    ctx.cfg = base;
    if corrupt {
        ctx = ctx.with_corrupt_zeta();
    }
    let mut results = Vec::new();
    for item in suite::selftest_items(only) {
        let o = item.execute(&ctx);
        eprintln!(
            "[{}] {} {}: {:.2}s{}",
            o.module,
            if o.pass { "ok  " } else { "FAIL" },
            o.name,
            o.elapsed.as_secs_f64(),
            o.measure.witness.as_ref().filter(|_| !o.pass).map(|w| format!(" | witness: {w}")).unwrap_or_default()
        );
        results.push(o);
    }
    let failed = results.iter().filter(|o| !o.pass).count();
    let rep = SelftestReport {
        schema: SCHEMA,
        command: "selftest",
        seed,
        only,
        passed: results.len() - failed,
        failed,
        results,
    };
    emit(to_json(&rep)?.as_bytes(), out.or(file.out.as_deref()))?;
    Ok(failed == 0)
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Eval { .. } => "eval",
        Command::Check { .. } => "check",
        Command::Sweep { .. } => "sweep",
        Command::Selftest { .. } => "selftest",
    }
}

fn dispatch(cli: &Cli) -> Result<bool, Failure> {
    let file = load_config(cli.config.as_deref())?;
    match &cli.command {
        Command::Eval { point, shared } => cmd_eval(&file, point, shared),
        Command::Check { theorem, point, shared } => cmd_check(&file, *theorem, point, shared),
        Command::Sweep {
            theorem,
            depth_max,
            weight_max,
            points,
            seed,
            rmin,
            rmax,
            roots,
            mode,
            max_skipped,
            shared,
        } => cmd_sweep(
            &file,
            *theorem,
            *depth_max,
            *weight_max,
            *points,
            *seed,
            (*rmin, *rmax),
            roots.clone(),
            *mode,
            *max_skipped,
            shared,
        ),
        Command::Selftest { only, seed, out, corrupt_zeta } => {
            cmd_selftest(&file, only.as_deref(), *seed, out.as_deref(), *corrupt_zeta)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_FAIL),
        Err(f) => {
            let body = ErrorReport {
                schema: SCHEMA,
                command: command_name(&cli.command),
                error: ErrorBody {
                    message: format!("{:#}", f.error),
                    violations: f.violations.iter().map(|&(i, j)| [i, j]).collect(),
                },
            };
            if let Ok(text) = to_json(&body) {
                print!("{text}");
            }
            eprintln!("error: {:#}", f.error);
            ExitCode::from(f.code)
        }
    }
}
