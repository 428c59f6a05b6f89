use alloc::vec::Vec;

use num_complex::Complex64;
use num_traits::Zero;

use super::{decompose_shuffle, decompose_stuffle, RhoMap, TPoly};
use crate::error::{Error, Result};
use crate::evaluator::{li, li_word, BaseEval};
use crate::mathf;
use crate::numcore::{domain_check, CutSet, DomainFamily, EvalConfig};
use crate::wordalg::{iota, word_from_index, ArgVector, Index, LinComb};

/// Regularization flavour.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum RegMode {
    Stuffle,
    Shuffle,
}

impl RegMode {
    pub fn as_str(self) -> &'static str {
        match self {
            RegMode::Stuffle => "stuffle",
            RegMode::Shuffle => "shuffle",
        }
    }
}

/// Number `h` of trailing pairs `(k_i, z_i) = (1, 1)`.
pub fn trailing_ones(k: &Index, z: &ArgVector) -> usize {
    k.parts()
        .iter()
        .zip(z.symbols())
        .rev()
        .take_while(|(&ki, zi)| ki == 1 && zi.is_one())
        .count()
}

fn prepare(k: &Index, z: &ArgVector) -> Result<Option<TPoly>> {
    if k.depth() != z.len() {
        return Err(Error::DepthMismatch {
            index: k.depth(),
            args: z.len(),
        });
    }
    if k.is_empty() {
        return Ok(Some(TPoly::constant(Complex64::new(1.0, 0.0))));
    }
    if z.values().iter().any(|v| v.is_zero()) {
        return Ok(Some(TPoly::constant(Complex64::zero())));
    }
    let report = domain_check(z, DomainFamily::Tail, CutSet::RealAboveOne);
    if let Some((i, j)) = report.first() {
        return Err(Error::Domain { i, j });
    }
    Ok(None)
}

fn shuffle_poly(k: &Index, z: &ArgVector, cfg: &EvalConfig) -> Result<TPoly> {
    let w = iota(&word_from_index(k, z)?)?;
    let dec = decompose_shuffle(&w)?;
    let coeffs = dec
        .parts
        .iter()
        .map(|p| li_word(p, cfg))
        .collect::<Result<Vec<_>>>()?;
    Ok(TPoly::new(coeffs))
}

/// Regularized polynomial `𝓛^•_{k;z}(T)`.
///
/// Shuffle: the closed-form decomposition of `ι(w_{k;z})` evaluated as
/// iterated integrals. Stuffle: `ρ⁻¹` of the shuffle polynomial.
pub fn reg_poly(k: &Index, z: &ArgVector, mode: RegMode, cfg: &EvalConfig) -> Result<TPoly> {
    if let Some(p) = prepare(k, z)? {
        return Ok(p);
    }
    if trailing_ones(k, z) == 0 {
        return Ok(TPoly::constant(li(k, z, cfg)?.value));
    }
    let sh = shuffle_poly(k, z, cfg)?;
    match mode {
        RegMode::Shuffle => Ok(sh),
        RegMode::Stuffle => RhoMap::global().apply_inverse(&sh),
    }
}

fn lincomb_series_value(lc: &LinComb, cfg: &EvalConfig) -> Result<Complex64> {
    let mut total = Complex64::zero();
    for (w, c) in lc.iter() {
        let (kw, zw) = w.to_index_args()?;
        total += li(&kw, &zw, cfg)?.value * mathf::ratio_to_f64(*c);
    }
    Ok(total)
}

/// Stuffle polynomial through the direct stuffle decomposition of `w_{k;z}`,
/// each part evaluated as a sum of `Li_{k'}(z')`.
pub fn reg_poly_stuffle_direct(k: &Index, z: &ArgVector, cfg: &EvalConfig) -> Result<TPoly> {
    if let Some(p) = prepare(k, z)? {
        return Ok(p);
    }
    let dec = decompose_stuffle(&word_from_index(k, z)?)?;
    let coeffs = dec
        .parts
        .iter()
        .map(|p| lincomb_series_value(p, cfg))
        .collect::<Result<Vec<_>>>()?;
    Ok(TPoly::new(coeffs))
}

/// Regularized value `Li^•_k(z) = 𝓛^•_{k;z}(0)`.
pub fn reg_value(k: &Index, z: &ArgVector, mode: RegMode, cfg: &EvalConfig) -> Result<Complex64> {
    Ok(reg_poly(k, z, mode, cfg)?.coeff(0))
}

/// Regularized base values for the star / shifted / tilde assemblers.
#[derive(Debug, Clone, Copy)]
pub struct Regularized<'a> {
    pub cfg: &'a EvalConfig,
    pub mode: RegMode,
}

impl BaseEval for Regularized<'_> {
    fn base(&self, k: &Index, z: &ArgVector) -> Result<Complex64> {
        reg_value(k, z, self.mode, self.cfg)
    }
}
