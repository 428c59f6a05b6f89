//! Invariant suite shared by `selftest` (reduced scale) and the acceptance
//! target (full scale).

use std::time::{Duration, Instant};

use mpl_core::evaluator::{li_panels, li_series};
use mpl_core::numcore::{cal_b, principal_log, zeta_const, BranchSign, EvalConfig, ZetaTable};
use mpl_core::parity::{
    check_derivative, zeta_lhs, zeta_rhs, main_sides, small_z1_limit_probe, reg_sides, residual,
};
use mpl_core::regul::{
    decompose, recompose, reg_poly, reg_poly_stuffle_direct, RegMode, RhoMap, TPoly,
};
use mpl_core::wordalg::{shuffle, stuffle, ArgSymbol, ArgVector, Index, Letter, LinComb, Word};
use mpl_core::Complex64;
use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::sample;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scale {
    Full,
    Reduced,
}

impl Scale {
    fn pick(self, full: usize, reduced: usize) -> usize {
        match self {
            Scale::Full => full,
            Scale::Reduced => reduced,
        }
    }
}

/// Inputs shared by every item of the suite.
#[derive(Debug, Clone)]
pub struct Ctx {
    pub seed: u64,
    pub scale: Scale,
    pub cfg: EvalConfig,
    /// ρ map under test; a corrupted forward table turns the round trip
    /// into a negative control.
    pub rho: RhoMap,
}

impl Ctx {
    pub fn new(seed: u64, scale: Scale) -> Self {
        Self {
            seed,
            scale,
            cfg: EvalConfig::default(),
            rho: RhoMap::global().clone(),
        }
    }

    /// Forward ρ built from a ζ table with `ζ(2)` perturbed.
    pub fn with_corrupt_zeta(mut self) -> Self {
        let good = ZetaTable::compute();
        let bad = good
            .with_zeta(2, good.zeta(2).expect("zeta(2)") + 1e-3)
            .expect("zeta(2) slot");
        self.rho = RhoMap::with_tables(&bad, &good);
        self
    }
}

/// One measured quantity and its bound (`value < tol` passes).
#[derive(Debug, Clone, Serialize)]
pub struct Part {
    pub label: &'static str,
    pub value: f64,
    pub tol: f64,
}

impl Part {
    pub fn pass(&self) -> bool {
        self.value < self.tol
    }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct Measure {
    pub parts: Vec<Part>,
    /// First offending input, if any.
    pub witness: Option<String>,
}

impl Measure {
    fn part(&mut self, label: &'static str, value: f64, tol: f64) {
        self.parts.push(Part { label, value, tol });
    }

    fn note(&mut self, w: impl FnOnce() -> String) {
        if self.witness.is_none() {
            self.witness = Some(w());
        }
    }
}

/// Running maximum that remembers where it was attained.
struct Worst {
    value: f64,
    at: Option<String>,
}

impl Worst {
    fn new() -> Self {
        Self { value: 0.0, at: None }
    }

    fn add(&mut self, v: f64, at: impl FnOnce() -> String) {
        if v > self.value || v.is_nan() {
            self.value = if v.is_nan() { f64::INFINITY } else { v };
            self.at = Some(at());
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Outcome {
    pub id: u8,
    pub module: &'static str,
    pub name: &'static str,
    pub pass: bool,
    pub measure: Measure,
    #[serde(skip)]
    pub elapsed: Duration,
    #[serde(skip)]
    pub limit: Duration,
}

impl Outcome {
    pub fn line(&self) -> String {
        let parts: Vec<String> = self
            .measure
            .parts
            .iter()
            .map(|p| format!("{}={:.3e} (<{:.0e})", p.label, p.value, p.tol))
            .collect();
        let mut s = format!(
            "criterion {:>2}: {} {} | {} | {:.2}s of {}s",
            self.id,
            if self.pass { "PASS" } else { "FAIL" },
            self.name,
            parts.join(", "),
            self.elapsed.as_secs_f64(),
            self.limit.as_secs()
        );
        if !self.pass {
            if let Some(w) = &self.measure.witness {
                s.push_str(&format!(" | witness: {w}"));
            }
        }
        s
    }
}

pub struct Item {
    pub id: u8,
    pub module: &'static str,
    pub name: &'static str,
    pub limit: Duration,
    pub run: fn(&Ctx) -> Measure,
}

impl Item {
    pub fn execute(&self, ctx: &Ctx) -> Outcome {
        let start = Instant::now();
        let measure = (self.run)(ctx);
        let elapsed = start.elapsed();
        let pass = !measure.parts.is_empty() && measure.parts.iter().all(Part::pass) && elapsed <= self.limit;
        Outcome {
            id: self.id,
            module: self.module,
            name: self.name,
            pass,
            measure,
            elapsed,
            limit: self.limit,
        }
    }
}

const fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

/// The ten acceptance criteria, in order.
pub const CRITERIA: [Item; 10] = [
    Item { id: 1, module: "parity", name: "weight-one base case", limit: secs(1), run: weight_one },
    Item { id: 2, module: "parity", name: "dilogarithm inversion", limit: secs(10), run: dilog_inversion },
    Item { id: 3, module: "parity", name: "plain identity sweep", limit: secs(600), run: main_sweep },
    Item { id: 4, module: "parity", name: "colored regularized sweep", limit: secs(900), run: colored_sweep },
    Item { id: 5, module: "parity", name: "stuffle-regularized zeta identity", limit: secs(300), run: zeta },
    Item { id: 6, module: "regul", name: "regularization consistency", limit: secs(60), run: regularization },
    Item { id: 7, module: "evaluator", name: "series/panels agreement", limit: secs(300), run: oracle_agreement },
    Item { id: 8, module: "parity", name: "derivative checks", limit: secs(300), run: derivatives },
    Item { id: 9, module: "parity", name: "small-z1 limit probe", limit: secs(120), run: limit_probe },
    Item { id: 10, module: "wordalg", name: "algebra laws", limit: secs(60), run: algebra_laws },
];

/// Checks run only by `selftest`.
pub const EXTRAS: [Item; 2] = [
    Item { id: 0, module: "wordalg", name: "decomposition round trip", limit: secs(60), run: decomposition_round_trip },
    Item { id: 0, module: "numcore", name: "constants and Bernoulli factors", limit: secs(10), run: constants },
];

pub const MODULES: [&str; 5] = ["wordalg", "numcore", "regul", "evaluator", "parity"];

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn one_z(z: Complex64) -> ArgVector {
    ArgVector::from_values(&[z])
}

fn idx(k: &[u32]) -> Index {
    Index::from_slice(k).expect("positive entries")
}

fn weight_one(ctx: &Ctx) -> Measure {
    let mut rng = sample::rng(ctx.seed, 1);
    let mut m = Measure::default();
    let (mut res, mut closed) = (Worst::new(), Worst::new());
    for _ in 0..ctx.scale.pick(100, 20) {
        let r = 10f64.powf(rng.random_range(-1.0..=1.0));
        let z = sample::off_cut(&mut rng, r, r);
        match main_sides(&idx(&[1]), &one_z(z), &ctx.cfg) {
            Ok(s) => {
                res.add(residual(s.lhs, s.rhs), || format!("z={z}"));
                closed.add(residual(s.lhs, principal_log(-z).unwrap_or_default()), || format!("z={z}"));
            }
            Err(e) => {
                res.add(f64::INFINITY, || format!("z={z}: {e}"));
            }
        }
    }
    m.part("residual", res.value, 1e-12);
    m.part("vs log(-z)", closed.value, 1e-12);
    m.witness = res.at.filter(|_| res.value >= 1e-12).or(closed.at.filter(|_| closed.value >= 1e-12));
    m
}

fn dilog_inversion(ctx: &Ctx) -> Measure {
    let mut rng = sample::rng(ctx.seed, 2);
    let mut m = Measure::default();
    let (mut res, mut closed) = (Worst::new(), Worst::new());
    let zeta2 = std::f64::consts::PI.powi(2) / 6.0;
    for _ in 0..ctx.scale.pick(50, 10) {
        let z = sample::off_cut(&mut rng, 1.5, 3.0);
        match main_sides(&idx(&[2]), &one_z(z), &ctx.cfg) {
            Ok(s) => {
                res.add(residual(s.lhs, s.rhs), || format!("z={z}"));
                // lhs = −(Li₂(z) + Li₂(1/z))
                let l = principal_log(-z).unwrap_or_default();
                closed.add(residual(s.lhs, zeta2 + l * l / 2.0), || format!("z={z}"));
            }
            Err(e) => res.add(f64::INFINITY, || format!("z={z}: {e}")),
        }
    }
    m.part("residual", res.value, 1e-9);
    m.part("vs closed form", closed.value, 1e-9);
    m.witness = res.at.filter(|_| res.value >= 1e-9).or(closed.at.filter(|_| closed.value >= 1e-9));
    m
}

fn main_sweep(ctx: &Ctx) -> Measure {
    let points = ctx.scale.pick(20, 3);
    let mut jobs = Vec::new();
    for (n, k) in sample::indices(2, 4).into_iter().enumerate() {
        let mut rng = sample::rng(ctx.seed, 300 + n as u64);
        for _ in 0..points {
            let z = sample::tail_point(&mut rng, k.depth(), 1.3, 3.0);
            jobs.push((k.clone(), z));
        }
    }
    let results: Vec<_> = jobs
        .par_iter()
        .map(|(k, z)| main_sides(k, z, &ctx.cfg).map(|s| (residual(s.lhs, s.rhs), s.routes.independent())))
        .collect();
    let mut worst = Worst::new();
    let mut dependent = 0usize;
    let mut m = Measure::default();
    for ((k, z), r) in jobs.iter().zip(results) {
        match r {
            Ok((res, indep)) => {
                worst.add(res, || format!("k={k} z={z}"));
                if !indep {
                    dependent += 1;
                    m.note(|| format!("shared route at k={k} z={z}"));
                }
            }
            Err(e) => worst.add(f64::INFINITY, || format!("k={k} z={z}: {e}")),
        }
    }
    m.part("max residual", worst.value, 1e-8);
    m.part("points sharing a route", dependent as f64, 1.0);
    if worst.value >= 1e-8 {
        m.witness = worst.at;
    }
    m
}

fn colored_sweep(ctx: &Ctx) -> Measure {
    let weight = match ctx.scale {
        Scale::Full => 4,
        Scale::Reduced => 3,
    };
    let mut jobs = Vec::new();
    for k in sample::indices(2, weight) {
        for z in sample::root_points(&[2, 4], k.depth()) {
            for mode in [RegMode::Stuffle, RegMode::Shuffle] {
                jobs.push((k.clone(), z.clone(), mode));
            }
        }
    }
    let results: Vec<_> = jobs
        .par_iter()
        .map(|(k, z, mode)| {
            let plus = reg_sides(k, z, *mode, &ctx.cfg.with_branch(BranchSign::Plus))?;
            let minus = reg_sides(k, z, *mode, &ctx.cfg.with_branch(BranchSign::Minus))?;
            let cross = residual(plus.lhs, minus.lhs).max(residual(plus.rhs, minus.rhs));
            Ok::<_, mpl_core::Error>((plus.residual.max(minus.residual), cross))
        })
        .collect();
    let (mut res, mut cross) = (Worst::new(), Worst::new());
    for ((k, z, mode), r) in jobs.iter().zip(results) {
        let at = || format!("k={k} z={z} mode={}", mode.as_str());
        match r {
            Ok((a, b)) => {
                res.add(a, at);
                cross.add(b, at);
            }
            Err(e) => res.add(f64::INFINITY, || format!("{}: {e}", at())),
        }
    }
    let mut m = Measure::default();
    m.part("max residual", res.value, 1e-7);
    m.part("cross-branch", cross.value, 1e-9);
    m.witness = res.at.filter(|_| res.value >= 1e-7).or(cross.at.filter(|_| cross.value >= 1e-9));
    m
}

fn zeta(ctx: &Ctx) -> Measure {
    let mut m = Measure::default();
    let target = c(-std::f64::consts::PI.powi(2) / 3.0, 0.0);
    let k2 = idx(&[2]);
    let exact = match (zeta_lhs(&k2, &ctx.cfg), zeta_rhs(&k2, &ctx.cfg)) {
        (Ok(l), Ok(r)) => (l - target).norm().max((r - target).norm()),
        _ => f64::INFINITY,
    };
    m.part("k=(2) vs -pi^2/3", exact, 1e-10);
    let (mut res, mut special) = (Worst::new(), Worst::new());
    for k in sample::indices(2, 4) {
        let out = (|| {
            let l = zeta_lhs(&k, &ctx.cfg)?;
            let r = zeta_rhs(&k, &ctx.cfg)?;
            let reg = reg_sides(&k, &ArgVector::ones(k.depth()), RegMode::Stuffle, &ctx.cfg)?;
            Ok::<_, mpl_core::Error>((residual(l, r), residual(reg.rhs, r)))
        })();
        match out {
            Ok((a, b)) => {
                res.add(a, || format!("k={k}"));
                special.add(b, || format!("k={k}"));
            }
            Err(e) => res.add(f64::INFINITY, || format!("k={k}: {e}")),
        }
    }
    m.part("max residual", res.value, 1e-7);
    m.part("vs regularized identity at ones", special.value, 1e-7);
    m.witness = res.at.filter(|_| res.value >= 1e-7).or(special.at.filter(|_| special.value >= 1e-7));
    m
}

fn rel_diff(a: &TPoly, b: &TPoly) -> f64 {
    let scale = a
        .coeffs()
        .iter()
        .chain(b.coeffs().iter())
        .map(|c| c.norm())
        .fold(1.0, f64::max);
    a.max_abs_diff(b) / scale
}

fn regularization(ctx: &Ctx) -> Measure {
    let mut m = Measure::default();
    let mut round = Worst::new();
    for n in 0..=8 {
        let p = TPoly::monomial(n);
        let there = ctx.rho.apply(&p).and_then(|q| ctx.rho.apply_inverse(&q));
        let back = ctx.rho.apply_inverse(&p).and_then(|q| ctx.rho.apply(&q));
        match (there, back) {
            (Ok(a), Ok(b)) => round.add(a.max_abs_diff(&p).max(b.max_abs_diff(&p)), || format!("T^{n}")),
            _ => round.add(f64::INFINITY, || format!("T^{n}: degree rejected")),
        }
    }
    let (weight, depth) = match ctx.scale {
        Scale::Full => (5, 3),
        Scale::Reduced => (4, 2),
    };
    let mut cases = Vec::new();
    for k in sample::indices(depth, weight) {
        let d = k.depth();
        cases.push((k.clone(), ArgVector::ones(d)));
        if d >= 2 {
            let mut roots = vec![(2u32, 1i64)];
            roots.extend(std::iter::repeat_n((1, 0), d - 1));
            cases.push((k.clone(), ArgVector::roots_of_unity(&roots)));
        }
    }
    let results: Vec<_> = cases
        .par_iter()
        .map(|(k, z)| {
            let sh = reg_poly(k, z, RegMode::Shuffle, &ctx.cfg)?;
            let st = reg_poly(k, z, RegMode::Stuffle, &ctx.cfg)?;
            let direct = reg_poly_stuffle_direct(k, z, &ctx.cfg)?;
            let mapped = ctx.rho.apply(&direct)?;
            Ok::<_, mpl_core::Error>((rel_diff(&sh, &mapped), rel_diff(&st, &direct)))
        })
        .collect();
    let (mut rho_law, mut routes) = (Worst::new(), Worst::new());
    for ((k, z), r) in cases.iter().zip(results) {
        match r {
            Ok((a, b)) => {
                rho_law.add(a, || format!("k={k} z={z}"));
                routes.add(b, || format!("k={k} z={z}"));
            }
            Err(e) => rho_law.add(f64::INFINITY, || format!("k={k} z={z}: {e}")),
        }
    }
    m.part("rho round trip", round.value, 1e-12);
    m.part("shuffle vs rho(stuffle)", rho_law.value, 1e-9);
    m.part("stuffle routes", routes.value, 1e-9);
    m.witness = round
        .at
        .filter(|_| round.value >= 1e-12)
        .or(rho_law.at.filter(|_| rho_law.value >= 1e-9))
        .or(routes.at.filter(|_| routes.value >= 1e-9));
    m
}

fn oracle_agreement(ctx: &Ctx) -> Measure {
    let mut rng = sample::rng(ctx.seed, 7);
    let jobs: Vec<(Index, ArgVector)> = (0..ctx.scale.pick(200, 40))
        .map(|i| {
            let d = 1 + i % 3;
            let k = sample::random_index(&mut rng, d, 3);
            let z = sample::tail_point(&mut rng, d, 0.05, 0.9);
            (k, z)
        })
        .collect();
    let results: Vec<_> = jobs
        .par_iter()
        .map(|(k, z)| {
            let s = li_series(k, z, &ctx.cfg)?;
            let p = li_panels(k, z, &ctx.cfg)?;
            Ok::<_, mpl_core::Error>(residual(s.value, p.value))
        })
        .collect();
    let mut worst = Worst::new();
    for ((k, z), r) in jobs.iter().zip(results) {
        match r {
            Ok(v) => worst.add(v, || format!("k={k} z={z}")),
            Err(e) => worst.add(f64::INFINITY, || format!("k={k} z={z}: {e}")),
        }
    }
    let mut m = Measure::default();
    m.part("max difference", worst.value, 1e-9);
    if worst.value >= 1e-9 {
        m.witness = worst.at;
    }
    m
}

fn derivatives(ctx: &Ctx) -> Measure {
    let mut rng = sample::rng(ctx.seed, 8);
    let jobs: Vec<(Index, ArgVector)> = (0..ctx.scale.pick(30, 6))
        .map(|i| {
            let d = 1 + (i / 2) % 3;
            let mut parts: Vec<u32> = (0..d).map(|_| rng.random_range(1..=2)).collect();
            // alternate the two first-entry cases
            parts[0] = if i % 2 == 0 { 1 } else { rng.random_range(2..=3) };
            let z = sample::entry_point(&mut rng, d, 0.4, 2.5, 0.1);
            (Index::new(parts).expect("positive"), z)
        })
        .collect();
    let results: Vec<_> = jobs
        .par_iter()
        .map(|(k, z)| check_derivative(k, z, &ctx.cfg).map(|r| r.max_residual()))
        .collect();
    let mut worst = Worst::new();
    for ((k, z), r) in jobs.iter().zip(results) {
        match r {
            Ok(v) => worst.add(v, || format!("k={k} z={z}")),
            Err(e) => worst.add(f64::INFINITY, || format!("k={k} z={z}: {e}")),
        }
    }
    let mut m = Measure::default();
    m.part("max residual", worst.value, 1e-5);
    if worst.value >= 1e-5 {
        m.witness = worst.at;
    }
    m
}

fn limit_probe(ctx: &Ctx) -> Measure {
    let mut rng = sample::rng(ctx.seed, 9);
    let ts = [1e-2, 1e-3, 1e-4];
    let mut m = Measure::default();
    let mut increasing = 0usize;
    let mut last = Worst::new();
    for i in 0..ctx.scale.pick(10, 4) {
        let d = 1 + i % 2;
        let k = sample::random_index(&mut rng, d, 2);
        let tail = sample::entry_point(&mut rng, d - 1, 0.5, 2.0, 0.3);
        // keep every product involving z_1 away from the positive axis
        let theta = loop {
            let th: f64 = rng.random_range(0.3..std::f64::consts::TAU - 0.3);
            let vals = std::iter::once(Complex64::from_polar(1.0, th)).chain(tail.values()).collect::<Vec<_>>();
            if sample::clear_of_cut(&vals, 0.3) {
                break th;
            }
        };
        match small_z1_limit_probe(&k, &tail, theta, &ts, &ctx.cfg) {
            Ok(vals) => {
                let mags: Vec<f64> = vals.iter().map(|v| v.norm()).collect();
                if mags.windows(2).any(|w| w[1] >= w[0]) {
                    increasing += 1;
                    m.note(|| format!("k={k} tail={tail} theta={theta:.4}: {mags:?}"));
                }
                last.add(mags[2], || format!("k={k} tail={tail} theta={theta:.4}"));
            }
            Err(e) => last.add(f64::INFINITY, || format!("k={k} tail={tail}: {e}")),
        }
    }
    m.part("non-decreasing cases", increasing as f64, 1.0);
    m.part("max final magnitude", last.value, 1e-2);
    if last.value >= 1e-2 {
        m.note(|| last.at.unwrap_or_default());
    }
    m
}

fn random_word<R: Rng>(rng: &mut R, pool: &[ArgSymbol], max_len: usize) -> Word {
    let len = rng.random_range(1..=max_len);
    let letters = (0..len)
        .map(|i| {
            if i > 0 && rng.random_bool(0.4) {
                Letter::X
            } else {
                Letter::Y(pool[rng.random_range(0..pool.len())].clone())
            }
        })
        .collect();
    Word::new(letters)
}

fn symbol_pool() -> Vec<ArgSymbol> {
    vec![
        ArgSymbol::one(),
        ArgSymbol::root_of_unity(2, 1),
        ArgSymbol::slot(1, c(0.3, 0.4)),
        ArgSymbol::slot(2, c(-1.5, 0.2)),
    ]
}

fn algebra_laws(ctx: &Ctx) -> Measure {
    let mut rng = sample::rng(ctx.seed, 10);
    let pool = symbol_pool();
    let mut violations = 0usize;
    let mut m = Measure::default();
    let one = LinComb::one();
    for _ in 0..ctx.scale.pick(200, 40) {
        let u = LinComb::word(random_word(&mut rng, &pool, 5));
        let v = LinComb::word(random_word(&mut rng, &pool, 5));
        let w = LinComb::word(random_word(&mut rng, &pool, 3));
        let laws = (|| {
            let st = |a: &LinComb, b: &LinComb| stuffle(a, b);
            Ok::<_, mpl_core::Error>([
                ("shuffle commutes", shuffle(&u, &v) == shuffle(&v, &u)),
                ("shuffle associates", shuffle(&shuffle(&u, &v), &w) == shuffle(&u, &shuffle(&v, &w))),
                ("shuffle unit", shuffle(&one, &u) == u && shuffle(&u, &one) == u),
                ("stuffle commutes", st(&u, &v)? == st(&v, &u)?),
                ("stuffle associates", st(&st(&u, &v)?, &w)? == st(&u, &st(&v, &w)?)?),
                ("stuffle unit", st(&one, &u)? == u && st(&u, &one)? == u),
            ])
        })();
        match laws {
            Ok(checks) => {
                for (name, ok) in checks {
                    if !ok {
                        violations += 1;
                        m.note(|| format!("{name}: u={u} v={v} w={w}"));
                    }
                }
            }
            Err(e) => {
                violations += 1;
                m.note(|| format!("u={u} v={v}: {e}"));
            }
        }
    }
    m.part("violations", violations as f64, 1.0);
    m
}

fn decomposition_round_trip(ctx: &Ctx) -> Measure {
    let mut rng = sample::rng(ctx.seed, 11);
    let pool = symbol_pool();
    let mut bad = 0usize;
    let mut m = Measure::default();
    for _ in 0..ctx.scale.pick(100, 30) {
        let mut word = random_word(&mut rng, &pool, 4);
        // append trailing y_1 letters so the regularization degree is positive
        let extra = rng.random_range(0..=2);
        word = word.concat(&Word::y_one_power(extra));
        let lc = LinComb::word(word.clone());
        for mode in [RegMode::Stuffle, RegMode::Shuffle] {
            let ok = decompose(&lc, mode).and_then(|d| recompose(&d, mode)).map(|r| r == lc);
            if ok != Ok(true) {
                bad += 1;
                m.note(|| format!("{} round trip failed for {word}", mode.as_str()));
            }
        }
    }
    m.part("failures", bad as f64, 1.0);
    m
}

fn constants(_ctx: &Ctx) -> Measure {
    let mut m = Measure::default();
    let pi = std::f64::consts::PI;
    let z2 = zeta_const(2).map_or(f64::INFINITY, |v| (v - pi * pi / 6.0).abs());
    let z4 = zeta_const(4).map_or(f64::INFINITY, |v| (v - pi.powi(4) / 90.0).abs());
    m.part("zeta(2), zeta(4)", z2.max(z4), 1e-15);
    let z = c(-0.7, 1.9);
    let b1 = cal_b(1, z, BranchSign::Plus)
        .ok()
        .zip(principal_log(-z).ok())
        .map_or(f64::INFINITY, |(a, b)| (a - b).norm());
    m.part("B_1(z) vs log(-z)", b1, 1e-14);
    let b2 = cal_b(2, c(-1.0, 0.0), BranchSign::Plus).map_or(f64::INFINITY, |v| (v - c(pi * pi / 6.0, 0.0)).norm());
    m.part("B_2(-1)", b2, 1e-13);
    m
}

/// Items of the selftest for the given module filter.
pub fn selftest_items(only: Option<&str>) -> Vec<&'static Item> {
    CRITERIA
        .iter()
        .chain(EXTRAS.iter())
        .filter(|i| only.is_none_or(|m| m == i.module))
        .collect()
}
