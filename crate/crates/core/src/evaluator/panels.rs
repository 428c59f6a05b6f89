//! Iterated integrals `∫_{0<t_1<⋯<t_n<1} Π dt_j/(t_j − a_j)` along `[0, 1]`.
//!
//! The vector of partial integrals `I_j(t)`, with `I_j' = I_{j−1}/(t − a_j)`
//! and `I_0 = 1`, is carried from panel to panel by truncated Taylor series.
//! At the endpoints the expansion switches to `Σ c[p][m] s^m ln^p s`, which
//! absorbs the logarithmic behaviour produced by letters sitting exactly at
//! the endpoint.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::mathf;
use crate::numcore::EvalConfig;

/// Letters within this distance of 1 are treated as exactly 1.
pub(crate) const ONE_SNAP: f64 = 1e-13;
const REAL_TOL: f64 = 1e-14;
const EPS: f64 = f64::EPSILON;

#[derive(Debug, Clone, Copy)]
pub(crate) struct PathIntegral {
    pub value: Complex64,
    pub est_error: f64,
    pub panels: usize,
}

fn snap(a: Complex64) -> Complex64 {
    if (a - 1.0).norm() <= ONE_SNAP {
        Complex64::new(1.0, 0.0)
    } else {
        a
    }
}

fn is_one(a: Complex64) -> bool {
    a.re == 1.0 && a.im == 0.0
}

/// Log-Taylor coefficients `c[p][m]` of one partial integral.
type LogSeries = Vec<Vec<Complex64>>;

struct Endpoint {
    e: f64,
    sigma: f64,
}

impl Endpoint {
    /// Coefficients of `J` with `dJ/ds = f/(s − β)` and zero constant term.
    fn integrate(&self, f: &LogSeries, a: Complex64, order: usize) -> LogSeries {
        let pmax = f.len() - 1;
        let mut c = vec![vec![Complex64::zero(); order + 1]; pmax + 1];
        let beta = (a - self.e) * self.sigma;
        if beta.is_zero() {
            for p in 0..pmax {
                c[p + 1][0] = f[p][0] / (p as f64 + 1.0);
            }
            for m in 1..=order {
                for p in (0..=pmax).rev() {
                    let higher = if p < pmax {
                        c[p + 1][m] * (p as f64 + 1.0)
                    } else {
                        Complex64::zero()
                    };
                    c[p][m] = (f[p][m] - higher) / m as f64;
                }
            }
        } else {
            for p in (0..=pmax).rev() {
                for m in 0..order {
                    let mut rhs = c[p][m] * m as f64 - f[p][m];
                    if p < pmax {
                        let k = p as f64 + 1.0;
                        rhs += c[p + 1][m] * k - beta * k * c[p + 1][m + 1];
                    }
                    c[p][m + 1] = rhs / (beta * (m as f64 + 1.0));
                }
            }
        }
        c
    }
}

/// Value, truncation estimate and absolute term sum of a log series at `s`.
fn eval_log_series(c: &LogSeries, s: f64, ratio: f64) -> (Complex64, f64, f64) {
    let l = mathf::ln(s);
    let mut value = Complex64::zero();
    let mut abs_sum = 0.0;
    let mut trunc = 0.0;
    let mut lp = 1.0;
    for row in c {
        let mut acc = Complex64::zero();
        let mut row_abs = 0.0;
        let mut sm = 1.0;
        for (m, coef) in row.iter().enumerate() {
            let term = coef * sm;
            acc += term;
            row_abs += term.norm();
            if m + 1 == row.len() {
                trunc += term.norm() * mathf::abs(lp) * ratio / (1.0 - ratio);
            }
            sm *= s;
        }
        value += acc * lp;
        abs_sum += row_abs * mathf::abs(lp);
        lp *= l;
    }
    (value, trunc, abs_sum)
}

fn validate(a: &[Complex64]) -> Result<()> {
    if a[0].is_zero() {
        return Err(Error::NotInH1);
    }
    if is_one(a[a.len() - 1]) {
        return Err(Error::Divergent);
    }
    for &x in a {
        let on_axis = mathf::abs(x.im) <= REAL_TOL * x.norm().max(1.0);
        if on_axis && x.re > 0.0 && x.re < 1.0 && !is_one(x) {
            return Err(Error::SingularityOnPath { re: x.re, im: x.im });
        }
        if !x.re.is_finite() || !x.im.is_finite() {
            return Err(Error::ZeroArgument);
        }
    }
    Ok(())
}

/// `∫_{0<t_1<⋯<t_n<1} Π dt_j/(t_j − a_j)` with `a_1` innermost.
pub(crate) fn iterated_integral(a: &[Complex64], cfg: &EvalConfig) -> Result<PathIntegral> {
    if a.is_empty() {
        return Ok(PathIntegral {
            value: Complex64::new(1.0, 0.0),
            est_error: 0.0,
            panels: 0,
        });
    }
    let a: Vec<Complex64> = a.iter().map(|&x| snap(x)).collect();
    validate(&a)?;
    let n = a.len();
    let order = cfg.panel_order;
    let safety = cfg.panel_safety;

    let sing: Vec<Complex64> = a.iter().copied().filter(|x| !x.is_zero()).collect();
    let has_one = sing.iter().any(|&x| is_one(x));
    let dist = |t: f64| sing.iter().map(|&x| (x - t).norm()).fold(f64::INFINITY, f64::min);
    // the Taylor recurrence divides by t − a_j, so x-letters make 0 a
    // stability limit for interior panels even though no I_j is singular there
    let has_x = a.iter().any(|x| x.is_zero());
    let interior_dist = |t: f64| if has_x { dist(t).min(t) } else { dist(t) };
    // radius of the log expansion at t = 1; the point 0 limits the individual
    // log-power series even though the full functions are regular there
    let r_one = a
        .iter()
        .filter(|&&x| !is_one(x))
        .map(|&x| (x - 1.0).norm())
        .fold(f64::INFINITY, f64::min);
    let log_powers_at = |e: f64| a.iter().filter(|&&x| x == Complex64::new(e, 0.0)).count();

    let mut est = 0.0;

    // start panel at t = 0; every I_j is analytic there
    let r0 = dist(0.0);
    let h0 = (safety * r0).min(1.0);
    let start = Endpoint { e: 0.0, sigma: 1.0 };
    let p0 = log_powers_at(0.0);
    let mut f: LogSeries = vec![vec![Complex64::zero(); order + 1]; p0 + 1];
    f[0][0] = Complex64::new(1.0, 0.0);
    let mut state = vec![Complex64::zero(); n + 1];
    state[0] = Complex64::new(1.0, 0.0);
    for j in 1..=n {
        let c = start.integrate(&f, a[j - 1], order);
        let (v, trunc, abs_sum) = eval_log_series(&c, h0, h0 / r0);
        state[j] = v;
        est += trunc + EPS * abs_sum;
        f = c;
    }
    let mut t = h0;
    let mut panels = 1usize;

    let mut cur = vec![Complex64::zero(); order + 1];
    let mut prev = vec![Complex64::zero(); order + 1];
    loop {
        if t >= 1.0 {
            return Ok(PathIntegral {
                value: state[n],
                est_error: est + EPS * state[n].norm(),
                panels,
            });
        }
        if has_one && 1.0 - t <= safety * r_one {
            break;
        }
        if panels >= cfg.max_panels {
            return Err(Error::PanelBudget(cfg.max_panels));
        }
        let r = interior_dist(t);
        let remaining = 1.0 - t;
        let h = (safety * r).min(remaining);
        let q = h / r;
        prev.iter_mut().for_each(|x| *x = Complex64::zero());
        prev[0] = Complex64::new(1.0, 0.0);
        for j in 1..=n {
            let b = t - a[j - 1];
            cur[0] = state[j];
            for m in 0..order {
                cur[m + 1] = (prev[m] - cur[m] * m as f64) / (b * (m as f64 + 1.0));
            }
            let mut acc = Complex64::zero();
            let mut abs_sum = 0.0;
            for coef in cur.iter().rev() {
                acc = acc * h + coef;
            }
            let mut hm = 1.0;
            for coef in cur.iter() {
                abs_sum += coef.norm() * hm;
                hm *= h;
            }
            let last = cur[order].norm() * mathf::powi(h, order as i32);
            est += last * q / (1.0 - q) + EPS * abs_sum;
            state[j] = acc;
            core::mem::swap(&mut prev, &mut cur);
        }
        panels += 1;
        t = if h >= remaining { 1.0 } else { t + h };
    }

    // final panel at t = 1 with log-enhanced expansion in s = 1 − t
    let s0 = 1.0 - t;
    let end = Endpoint { e: 1.0, sigma: -1.0 };
    let p1 = log_powers_at(1.0);
    let mut f: LogSeries = vec![vec![Complex64::zero(); order + 1]; p1 + 1];
    f[0][0] = Complex64::new(1.0, 0.0);
    let ratio = s0 / r_one;
    for j in 1..=n {
        let mut c = end.integrate(&f, a[j - 1], order);
        let (v, trunc, abs_sum) = eval_log_series(&c, s0, ratio);
        c[0][0] = state[j] - v;
        est += trunc + EPS * (abs_sum + state[j].norm());
        f = c;
    }
    let value = f[0][0];
    Ok(PathIntegral {
        value,
        est_error: est + EPS * value.norm(),
        panels: panels + 1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn single_log() {
        // ∫_0^1 dt/(t − a) = log((1 − a)/(−a))
        let cfg = EvalConfig::default();
        for a in [c(-2.0, 0.0), c(0.3, 0.8), c(3.0, -1.0), c(1.5, 0.0)] {
            let r = iterated_integral(&[a], &cfg).unwrap();
            let want = ((c(1.0, 0.0) - a) / (-a)).ln();
            assert!((r.value - want).norm() < 1e-14, "{a}: {} vs {want}", r.value);
        }
    }

    #[test]
    fn log_endpoint_matches_zeta_two() {
        // ∫ dt1/(t1 − 1) dt2/t2 = −ζ(2)... with a_1 = 1 innermost and a_2 = 0
        let cfg = EvalConfig::default();
        let r = iterated_integral(&[c(1.0, 0.0), c(0.0, 0.0)], &cfg).unwrap();
        let z2 = mathf::PI * mathf::PI / 6.0;
        assert!((r.value + z2).norm() < 1e-14, "{}", r.value);
    }

    #[test]
    fn rejects_bad_words() {
        let cfg = EvalConfig::default();
        assert_eq!(
            iterated_integral(&[c(0.0, 0.0)], &cfg).unwrap_err(),
            Error::NotInH1
        );
        assert_eq!(
            iterated_integral(&[c(-1.0, 0.0), c(1.0, 0.0)], &cfg).unwrap_err(),
            Error::Divergent
        );
        assert!(matches!(
            iterated_integral(&[c(0.5, 0.0)], &cfg),
            Err(Error::SingularityOnPath { .. })
        ));
    }
}
