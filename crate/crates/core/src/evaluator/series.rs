use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
use num_traits::Zero;

use super::{EvalResult, Method};
use crate::error::{Error, Result};
use crate::mathf;
use crate::numcore::EvalConfig;
use crate::wordalg::{ArgVector, Index};

/// Largest tail-product modulus accepted by the series path.
pub const SERIES_MAX_RADIUS: f64 = 0.95;
const EPS: f64 = f64::EPSILON;

/// Bound on `Σ_{m>n} C(m−1, d−1) r^m / m^{k_d}`.
fn tail_bound(n: usize, d: usize, r: f64, kd: u32) -> f64 {
    let m = (n + 1) as f64;
    let mut ln_binom = 0.0;
    for i in 0..d.saturating_sub(1) {
        ln_binom += mathf::ln((n - i) as f64) - mathf::ln((i + 1) as f64);
    }
    let first = mathf::exp(ln_binom + m * mathf::ln(r) - kd as f64 * mathf::ln(m));
    let ratio = r * m / (m + 1.0 - d as f64).max(1.0);
    if ratio >= 1.0 {
        f64::INFINITY
    } else {
        first / (1.0 - ratio)
    }
}

/// Truncated nested sum over `0 < m_1 < ⋯ < m_d`.
///
/// Uses the tail products `w_i = z_{i,d}`: with `S_j(m)` the partial sum whose
/// innermost index is `m`, `U_j(m+1) = w_j (U_j(m) + S_{j−1}(m))` and
/// `S_j(m) = U_j(m)/m^{k_j}`. All intermediate quantities stay bounded by the
/// geometric weight `r^m`.
pub fn li_series(k: &Index, z: &ArgVector, cfg: &EvalConfig) -> Result<EvalResult> {
    let d = k.depth();
    if d != z.len() {
        return Err(Error::DepthMismatch {
            index: d,
            args: z.len(),
        });
    }
    if d == 0 {
        return Ok(EvalResult::exact(Complex64::new(1.0, 0.0), Method::Series));
    }
    if z.values().iter().any(|v| v.is_zero()) {
        return Ok(EvalResult::exact(Complex64::zero(), Method::Series));
    }
    let w: Vec<Complex64> = z.tail_products().iter().map(|s| s.value()).collect();
    let r = w.iter().map(|x| x.norm()).fold(0.0, f64::max);
    if r > SERIES_MAX_RADIUS || r.is_nan() {
        return Err(Error::OutsideSeriesRegion { radius: r });
    }
    let kk = k.parts();
    let kd = kk[d - 1];
    let mut u = vec![Complex64::zero(); d];
    let mut s_prev = vec![Complex64::zero(); d + 1];
    s_prev[0] = Complex64::new(1.0, 0.0);
    let mut sum = Complex64::zero();
    let mut abs_sum = 0.0;
    let mut bound = f64::INFINITY;
    let mut m = 0usize;
    while m < cfg.series_truncation {
        m += 1;
        let mf = m as f64;
        let mut s_cur = vec![Complex64::zero(); d + 1];
        for j in 1..=d {
            u[j - 1] = w[j - 1] * (u[j - 1] + s_prev[j - 1]);
            s_cur[j] = u[j - 1] / mathf::powi(mf, kk[j - 1] as i32);
        }
        sum += s_cur[d];
        abs_sum += s_cur[d].norm();
        s_prev = s_cur;
        if m >= d && m.is_multiple_of(8) {
            bound = tail_bound(m, d, r, kd);
            if bound <= EPS * abs_sum.max(f64::MIN_POSITIVE) || bound == 0.0 {
                break;
            }
        }
    }
    if m >= cfg.series_truncation {
        bound = tail_bound(m, d, r, kd);
        if bound > cfg.target_tol * sum.norm().max(1.0) {
            return Err(Error::SeriesTruncation { terms: m });
        }
    }
    Ok(EvalResult {
        value: sum,
        est_error: bound + EPS * abs_sum * (d as f64 + 2.0),
        method: Method::Series,
        terms_or_panels: m,
    })
}
