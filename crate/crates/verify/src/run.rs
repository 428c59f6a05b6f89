//! Single checks and seeded sweeps over the parity identities.

use mpl_core::numcore::{BranchSign, EvalConfig};
use mpl_core::parity::{zeta_report, main_report, reg_sides, residual, CheckMode, ParityReport};
use mpl_core::regul::RegMode;
use mpl_core::wordalg::{ArgVector, Index};
use mpl_core::Error;
use rayon::prelude::*;

use crate::report::{pair, CheckReport, Record, RouteTags, Status, Summary, Theorem, SCHEMA};
use crate::sample;

/// Largest admissible difference between the two `log(−1)` branches.
pub const CROSS_BRANCH_TOL: f64 = 1e-9;

/// One unit of work: a point checked under one or two branches.
#[derive(Debug, Clone)]
pub struct Job {
    pub point: usize,
    pub theorem: Theorem,
    pub mode: CheckMode,
    pub k: Index,
    pub z: ArgVector,
    pub branches: Vec<BranchSign>,
}

/// Failures that mean "no admissible route" rather than a wrong answer.
fn is_skip(e: &Error) -> bool {
    match e {
        Error::Term { source, .. } => is_skip(source),
        Error::SingularityOnPath { .. } | Error::PanelBudget(_) | Error::OutsideSeriesRegion { .. } => true,
        _ => false,
    }
}

pub fn evaluate(theorem: Theorem, mode: CheckMode, k: &Index, z: &ArgVector, cfg: &EvalConfig) -> mpl_core::Result<ParityReport> {
    match (theorem, mode.reg_mode()) {
        (Theorem::Main, _) => main_report(k, z, cfg),
        (Theorem::Reg, Some(m)) => reg_sides(k, z, m, cfg),
        (Theorem::Reg, None) => reg_sides(k, z, RegMode::Stuffle, cfg),
        (Theorem::Zeta, _) => zeta_report(k, cfg),
    }
}

pub fn run_job(job: &Job, cfg: &EvalConfig, tol: f64) -> Vec<Record> {
    let outcomes: Vec<_> = job
        .branches
        .iter()
        .map(|&b| evaluate(job.theorem, job.mode, &job.k, &job.z, &cfg.with_branch(b)))
        .collect();
    let cross = match outcomes.as_slice() {
        [Ok(a), Ok(b)] => Some(residual(a.lhs, b.lhs).max(residual(a.rhs, b.rhs))),
        _ => None,
    };
    job.branches
        .iter()
        .zip(outcomes)
        .map(|(&b, out)| {
            let mut rec = Record::blank(job.point, job.theorem, job.mode, b, &job.k, &job.z);
            match out {
                Ok(r) => {
                    rec.lhs = Some(pair(r.lhs));
                    rec.rhs = Some(pair(r.rhs));
                    rec.residual = Some(r.residual);
                    rec.routes = r.routes.as_ref().map(RouteTags::from);
                    rec.cross_branch = cross;
                    let ok = r.residual < tol && cross.is_none_or(|c| c < CROSS_BRANCH_TOL);
                    rec.status = if ok { Status::Pass } else { Status::Fail };
                }
                Err(e) => {
                    rec.status = if is_skip(&e) { Status::Skipped } else { Status::Error };
                    rec.error = Some(e.to_string());
                }
            }
            rec
        })
        .collect()
}

/// Runs jobs in parallel; records come back in job order.
pub fn run_jobs(jobs: &[Job], cfg: &EvalConfig, tol: f64) -> Vec<Record> {
    jobs.par_iter()
        .map(|j| run_job(j, cfg, tol))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

pub fn report(command: &'static str, theorem: Theorem, seed: Option<u64>, tol: f64, records: Vec<Record>) -> CheckReport {
    let summary = Summary::from_records(&records);
    CheckReport {
        schema: SCHEMA,
        command,
        theorem,
        seed,
        tol,
        records,
        summary,
    }
}

/// Sweep parameters.
#[derive(Debug, Clone)]
pub struct SweepSpec {
    pub theorem: Theorem,
    pub modes: Vec<CheckMode>,
    pub branches: Vec<BranchSign>,
    pub depth_max: usize,
    pub weight_max: u32,
    pub points: usize,
    pub seed: u64,
    pub rmin: f64,
    pub rmax: f64,
    pub roots: Vec<u32>,
}

/// Every job of a sweep, generated sequentially so the points depend only
/// on the sweep parameters.
pub fn sweep_jobs(spec: &SweepSpec) -> Vec<Job> {
    let mut jobs = Vec::new();
    let mut push = |mode, k: &Index, z: ArgVector| {
        let point = jobs.len();
        jobs.push(Job {
            point,
            theorem: spec.theorem,
            mode,
            k: k.clone(),
            z,
            branches: spec.branches.clone(),
        });
    };
    for (n, k) in sample::indices(spec.depth_max, spec.weight_max).iter().enumerate() {
        match spec.theorem {
            Theorem::Main => {
                let mut rng = sample::rng(spec.seed, n as u64);
                for _ in 0..spec.points {
                    let z = sample::tail_point(&mut rng, k.depth(), spec.rmin, spec.rmax);
                    for &m in &spec.modes {
                        push(m, k, z.clone());
                    }
                }
            }
            Theorem::Reg => {
                for z in sample::root_points(&spec.roots, k.depth()) {
                    for &m in &spec.modes {
                        push(m, k, z.clone());
                    }
                }
            }
            Theorem::Zeta => push(CheckMode::Stuffle, k, ArgVector::ones(k.depth())),
        }
    }
    jobs
}

/// Exit-code contract: success iff nothing failed or errored and the skip
/// count stays within budget.
pub fn succeeded(summary: &Summary, max_skipped: usize) -> bool {
    summary.failed == 0 && summary.errors == 0 && summary.skipped <= max_skipped
}

#[cfg(test)]
mod tests {
    use super::*;
    use mpl_core::Complex64;

    #[test]
    fn single_main_check() {
        let cfg = EvalConfig::default();
        let job = Job {
            point: 0,
            theorem: Theorem::Main,
            mode: CheckMode::Plain,
            k: Index::from_slice(&[2]).unwrap(),
            z: ArgVector::from_values(&[Complex64::new(-2.0, 0.0)]),
            branches: vec![BranchSign::Plus],
        };
        let recs = run_job(&job, &cfg, 1e-9);
        assert_eq!(recs.len(), 1);
        assert_eq!(recs[0].status, Status::Pass);
    }

    #[test]
    fn domain_violation_is_error() {
        let cfg = EvalConfig::default();
        let job = Job {
            point: 0,
            theorem: Theorem::Main,
            mode: CheckMode::Plain,
            k: Index::from_slice(&[2]).unwrap(),
            z: ArgVector::from_values(&[Complex64::new(2.0, 0.0)]),
            branches: vec![BranchSign::Plus],
        };
        let recs = run_job(&job, &cfg, 1e-9);
        assert_eq!(recs[0].status, Status::Error);
        assert!(recs[0].error.as_ref().unwrap().contains("(1,1)"));
    }

    #[test]
    fn both_branches_report_cross_difference() {
        let cfg = EvalConfig::default();
        let job = Job {
            point: 0,
            theorem: Theorem::Reg,
            mode: CheckMode::Shuffle,
            k: Index::from_slice(&[1, 1]).unwrap(),
            z: ArgVector::ones(2),
            branches: vec![BranchSign::Plus, BranchSign::Minus],
        };
        let recs = run_job(&job, &cfg, 1e-7);
        assert_eq!(recs.len(), 2);
        assert!(recs.iter().all(|r| r.status == Status::Pass && r.cross_branch.unwrap() < 1e-9));
    }
}
