//! Versioned JSON reports and their flat CSV projection.

use std::io::Write;
use std::path::Path;

use anyhow::{Context, Result};
use clap::ValueEnum;
use mpl_core::numcore::BranchSign;
use mpl_core::parity::{CheckMode, Routes};
use mpl_core::wordalg::{ArgVector, Index};
use mpl_core::Complex64;
use serde::{Deserialize, Serialize};

pub const SCHEMA: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Theorem {
    /// plain values on the cut-free domain
    Main,
    /// regularized values, including the all-ones correction
    Reg,
    /// stuffle-regularized multiple zeta values
    #[value(alias = "hirose")]
    #[serde(alias = "hirose")]
    Zeta,
}

impl Theorem {
    pub fn as_str(self) -> &'static str {
        match self {
            Theorem::Main => "main",
            Theorem::Reg => "reg",
            Theorem::Zeta => "zeta",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
    Error,
}

pub fn pair(c: Complex64) -> [f64; 2] {
    [c.re, c.im]
}

pub fn pairs(z: &ArgVector) -> Vec<[f64; 2]> {
    z.values().into_iter().map(pair).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RouteTags {
    pub direct: Vec<&'static str>,
    pub inverse: Vec<&'static str>,
    pub independent: bool,
}

impl From<&Routes> for RouteTags {
    fn from(r: &Routes) -> Self {
        Self {
            direct: r.direct.iter().map(|m| m.as_str()).collect(),
            inverse: r.inverse.iter().map(|m| m.as_str()).collect(),
            independent: r.independent(),
        }
    }
}

/// One checked point.
#[derive(Debug, Clone, Serialize)]
pub struct Record {
    pub point: usize,
    pub theorem: Theorem,
    pub mode: CheckMode,
    pub branch: BranchSign,
    pub k: Vec<u32>,
    pub z: Vec<[f64; 2]>,
    pub lhs: Option<[f64; 2]>,
    pub rhs: Option<[f64; 2]>,
    pub residual: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cross_branch: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub routes: Option<RouteTags>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl Record {
    pub fn blank(point: usize, theorem: Theorem, mode: CheckMode, branch: BranchSign, k: &Index, z: &ArgVector) -> Self {
        Self {
            point,
            theorem,
            mode,
            branch,
            k: k.parts().to_vec(),
            z: pairs(z),
            lhs: None,
            rhs: None,
            residual: None,
            cross_branch: None,
            routes: None,
            status: Status::Error,
            error: None,
        }
    }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct Summary {
    pub records: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub errors: usize,
    pub max_residual: Option<f64>,
    pub max_cross_branch: Option<f64>,
}

impl Summary {
    pub fn from_records(records: &[Record]) -> Self {
        let mut s = Summary {
            records: records.len(),
            ..Default::default()
        };
        for r in records {
            match r.status {
                Status::Pass => s.passed += 1,
                Status::Fail => s.failed += 1,
                Status::Skipped => s.skipped += 1,
                Status::Error => s.errors += 1,
            }
            if let Some(v) = r.residual {
                s.max_residual = Some(s.max_residual.map_or(v, |m| m.max(v)));
            }
            if let Some(v) = r.cross_branch {
                s.max_cross_branch = Some(s.max_cross_branch.map_or(v, |m| m.max(v)));
            }
        }
        s
    }
}

/// Report of a `check` or `sweep` run.
#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub schema: u32,
    pub command: &'static str,
    pub theorem: Theorem,
    pub seed: Option<u64>,
    pub tol: f64,
    pub records: Vec<Record>,
    pub summary: Summary,
}

#[derive(Serialize)]
struct CsvRow<'a> {
    point: usize,
    theorem: &'static str,
    mode: &'static str,
    branch: i8,
    k: String,
    z: String,
    lhs_re: Option<f64>,
    lhs_im: Option<f64>,
    rhs_re: Option<f64>,
    rhs_im: Option<f64>,
    residual: Option<f64>,
    cross_branch: Option<f64>,
    routes: String,
    status: Status,
    error: Option<&'a str>,
}

fn join_pairs(z: &[[f64; 2]]) -> String {
    z.iter().map(|[re, im]| format!("{re}{im:+}i")).collect::<Vec<_>>().join(";")
}

impl CheckReport {
    pub fn write_csv<W: Write>(&self, w: W) -> Result<()> {
        let mut out = csv::Writer::from_writer(w);
        for r in &self.records {
            out.serialize(CsvRow {
                point: r.point,
                theorem: r.theorem.as_str(),
                mode: r.mode.as_str(),
                branch: if r.branch == BranchSign::Plus { 1 } else { -1 },
                k: r.k.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","),
                z: join_pairs(&r.z),
                lhs_re: r.lhs.map(|p| p[0]),
                lhs_im: r.lhs.map(|p| p[1]),
                rhs_re: r.rhs.map(|p| p[0]),
                rhs_im: r.rhs.map(|p| p[1]),
                residual: r.residual,
                cross_branch: r.cross_branch,
                routes: r
                    .routes
                    .as_ref()
                    .map(|t| format!("{}/{}", t.direct.join("+"), t.inverse.join("+")))
                    .unwrap_or_default(),
                status: r.status,
                error: r.error.as_deref(),
            })?;
        }
        out.flush()?;
        Ok(())
    }
}

/// Serialize as pretty JSON followed by a newline.
pub fn to_json<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

/// Write `text` to `out`, or stdout when no path is given.
pub fn emit(text: &[u8], out: Option<&Path>) -> Result<()> {
    match out {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text)?;
            stdout.flush()?;
            Ok(())
        }
    }
}
