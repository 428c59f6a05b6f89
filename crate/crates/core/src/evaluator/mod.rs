//! Numeric evaluation of multiple polylogarithms.
//!
//! Inside the polydisk the nested series is summed directly; everywhere else
//! on the admissible domain the iterated-integral representation is
//! propagated along `[0, 1]` panel by panel.

mod panels;
mod series;
mod variants;

use alloc::vec::Vec;

use num_complex::Complex64;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::mathf;
use crate::numcore::EvalConfig;
use crate::wordalg::{ArgVector, Index, Letter, LinComb, Word};

pub use series::{li_series, SERIES_MAX_RADIUS};
pub use variants::{
    enum_compositions, enum_contractions, li_a, li_star, li_tilde_a, shifted_with, star_with,
    tilde_with, weak_compositions, BaseEval, Plain,
};

/// Tail-product modulus below which [`li`] prefers the series.
pub const DISPATCH_RADIUS: f64 = 0.9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Method {
    Series,
    Panels,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Series => "series",
            Method::Panels => "panels",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalResult {
    pub value: Complex64,
    pub est_error: f64,
    pub method: Method,
    /// Summation terms for the series, panel count for panels.
    pub terms_or_panels: usize,
}

impl EvalResult {
    fn exact(value: Complex64, method: Method) -> Self {
        Self {
            value,
            est_error: 0.0,
            method,
            terms_or_panels: 0,
        }
    }
}

fn check_depth(k: &Index, z: &ArgVector) -> Result<()> {
    if k.depth() != z.len() {
        return Err(Error::DepthMismatch {
            index: k.depth(),
            args: z.len(),
        });
    }
    Ok(())
}

fn is_divergent(k: &Index, z: &ArgVector) -> bool {
    let d = k.depth();
    d > 0 && k.parts()[d - 1] == 1 && {
        let zd = z.get(d - 1);
        zd.is_one() || (zd.value() - 1.0).norm() <= panels::ONE_SNAP
    }
}

/// Iterated-integral evaluation of `Li_k(z)`.
pub fn li_panels(k: &Index, z: &ArgVector, cfg: &EvalConfig) -> Result<EvalResult> {
    check_depth(k, z)?;
    let d = k.depth();
    if d == 0 {
        return Ok(EvalResult::exact(Complex64::new(1.0, 0.0), Method::Panels));
    }
    if z.values().iter().any(|v| v.is_zero()) {
        return Err(Error::ZeroArgument);
    }
    if is_divergent(k, z) {
        return Err(Error::Divergent);
    }
    let mut a = Vec::with_capacity(k.weight() as usize);
    for (tail, &ki) in z.tail_products().iter().zip(k.parts()) {
        a.push(tail.reciprocal().value());
        a.extend(core::iter::repeat_n(Complex64::zero(), ki as usize - 1));
    }
    let r = panels::iterated_integral(&a, cfg)?;
    Ok(EvalResult {
        value: r.value * mathf::sign(d),
        est_error: r.est_error,
        method: Method::Panels,
        terms_or_panels: r.panels,
    })
}

/// `Li_k(z)`: the series when every `|z_{i,d}| ≤ 0.9`, panels otherwise.
pub fn li(k: &Index, z: &ArgVector, cfg: &EvalConfig) -> Result<EvalResult> {
    check_depth(k, z)?;
    if k.depth() == 0 {
        return Ok(EvalResult::exact(Complex64::new(1.0, 0.0), Method::Series));
    }
    if z.values().iter().any(|v| v.is_zero()) {
        return Ok(EvalResult::exact(Complex64::zero(), Method::Series));
    }
    if is_divergent(k, z) {
        return Err(Error::Divergent);
    }
    if z.max_tail_modulus() <= DISPATCH_RADIUS {
        li_series(k, z, cfg)
    } else {
        li_panels(k, z, cfg)
    }
}

/// Linear extension of `y_{c_1} x^{n_1} ⋯ ↦ (−1)^{#y} ∫ ω_{1/c_1} ω_0^{n_1} ⋯`.
pub fn li_word(w: &LinComb, cfg: &EvalConfig) -> Result<Complex64> {
    let mut total = Complex64::zero();
    for (word, coef) in w.iter() {
        let v = word_value(word, cfg)?;
        total += v * mathf::ratio_to_f64(*coef);
    }
    Ok(total)
}

fn word_value(w: &Word, cfg: &EvalConfig) -> Result<Complex64> {
    if !w.is_h1() {
        return Err(Error::NotInH1);
    }
    if !w.is_h0() {
        return Err(Error::NotInH0);
    }
    let mut a = Vec::with_capacity(w.len());
    for l in w.letters() {
        match l {
            Letter::X => a.push(Complex64::zero()),
            Letter::Y(s) => {
                if s.value().is_zero() {
                    return Ok(Complex64::zero());
                }
                a.push(s.reciprocal().value());
            }
        }
    }
    let r = panels::iterated_integral(&a, cfg)?;
    Ok(r.value * mathf::sign(w.depth()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wordalg::{word_from_index, ArgSymbol};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn idx(k: &[u32]) -> Index {
        Index::from_slice(k).unwrap()
    }

    #[test]
    fn dispatch_routes() {
        let cfg = EvalConfig::default();
        let inner = ArgVector::from_values(&[c(0.3, 0.0), c(0.4, 0.0)]);
        assert_eq!(li(&idx(&[1, 1]), &inner, &cfg).unwrap().method, Method::Series);
        let outer = ArgVector::from_values(&[c(0.0, 2.0), c(0.0, 3.0)]);
        assert_eq!(li(&idx(&[1, 1]), &outer, &cfg).unwrap().method, Method::Panels);
    }

    #[test]
    fn classical_panel_values() {
        let cfg = EvalConfig::default();
        let m1 = ArgVector::from_values(&[c(-1.0, 0.0)]);
        let v = li_panels(&idx(&[2]), &m1, &cfg).unwrap().value;
        assert!((v.re + mathf::PI * mathf::PI / 12.0).abs() < 1e-14, "{v}");
        let m3 = ArgVector::from_values(&[c(-3.0, 0.0)]);
        let v = li_panels(&idx(&[1]), &m3, &cfg).unwrap().value;
        assert!((v.re + mathf::ln(4.0)).abs() < 1e-14 && v.im.abs() < 1e-15);
    }

    #[test]
    fn divergent_and_zero() {
        let cfg = EvalConfig::default();
        let ones = ArgVector::ones(1);
        assert_eq!(li(&idx(&[1]), &ones, &cfg).unwrap_err(), Error::Divergent);
        let zero = ArgVector::from_values(&[c(0.0, 0.0)]);
        assert_eq!(li(&idx(&[1]), &zero, &cfg).unwrap().value, Complex64::zero());
        assert_eq!(li(&Index::empty(), &ArgVector::empty(), &cfg).unwrap().value, c(1.0, 0.0));
    }

    #[test]
    fn word_values() {
        let cfg = EvalConfig::default();
        let z2 = word_from_index(&idx(&[2]), &ArgVector::ones(1)).unwrap();
        let v = li_word(&LinComb::word(z2), &cfg).unwrap();
        assert!((v.re - mathf::PI * mathf::PI / 6.0).abs() < 1e-14);
        let ya = Word::new(alloc::vec![Letter::Y(ArgSymbol::slot(0, c(-2.0, 0.0)))]);
        let v = li_word(&LinComb::word(ya), &cfg).unwrap();
        assert!((v.re + mathf::ln(3.0)).abs() < 1e-14);
        assert_eq!(li_word(&LinComb::one(), &cfg).unwrap(), c(1.0, 0.0));
        let y1 = LinComb::word(Word::y_one_power(1));
        assert_eq!(li_word(&y1, &cfg).unwrap_err(), Error::NotInH0);
    }

    #[test]
    fn series_and_panels_agree() {
        let cfg = EvalConfig::default();
        let cases: [(&[u32], &[Complex64]); 4] = [
            (&[1, 1], &[c(0.3, 0.0), c(0.4, 0.0)]),
            (&[2, 1], &[c(0.2, 0.5), c(0.6, -0.1)]),
            (&[1, 3], &[c(-1.1, 0.3), c(-0.5, 0.2)]),
            (&[1, 2, 1], &[c(0.7, 0.7), c(0.5, -0.4), c(-0.3, 0.6)]),
        ];
        for (k, z) in cases {
            let (k, z) = (idx(k), ArgVector::from_values(z));
            let s = li_series(&k, &z, &cfg).unwrap();
            let p = li_panels(&k, &z, &cfg).unwrap();
            assert!((s.value - p.value).norm() < 1e-13, "{k} {z}: {} vs {}", s.value, p.value);
        }
    }

    #[test]
    fn zeta_three_through_log_endpoint() {
        let cfg = EvalConfig::default();
        let v = li_panels(&idx(&[1, 2]), &ArgVector::ones(2), &cfg).unwrap().value;
        assert!((v.re - 1.2020569031595942).abs() < 1e-14, "{v}");
    }
}
