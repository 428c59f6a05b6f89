//! Numerical probe of the `z_1 → 0` limit that fixes the integration
//! constant of the parity identity.

use alloc::vec::Vec;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::evaluator::{li, shifted_with, Plain};
use crate::mathf;
use crate::numcore::{cal_b, EvalConfig};
use crate::wordalg::{ArgSymbol, ArgVector, Index};

/// `Li_k(1/z) + Σ_{b+l=k_1} (−1)^{k_1+b} ℬ_l(z_{1,d}) Li^b_{k_{2,d}}(1/z_{2,d})`
/// at `z = (t e^{iθ}, z_tail)` for each `t`; the values tend to 0 as `t → 0`.
pub fn small_z1_limit_probe(
    k: &Index,
    z_tail: &ArgVector,
    theta: f64,
    t_values: &[f64],
    cfg: &EvalConfig,
) -> Result<Vec<Complex64>> {
    let d = k.depth();
    if d == 0 || z_tail.len() + 1 != d {
        return Err(Error::DepthMismatch {
            index: d,
            args: z_tail.len() + 1,
        });
    }
    let k1 = k.parts()[0];
    let kt = k.slice(1, d);
    let tail_inv = z_tail.reciprocal();
    let base = Plain(cfg);
    let mut shifted = Vec::with_capacity(k1 as usize + 1);
    for b in 0..=k1 {
        shifted.push(shifted_with(&base, b, &kt, &tail_inv)?);
    }
    let tail_prod = z_tail.range_product(0, d - 1).value();
    let mut out = Vec::with_capacity(t_values.len());
    for &t in t_values {
        let z1 = mathf::cis(theta) * t;
        let mut entries = Vec::with_capacity(d);
        entries.push(ArgSymbol::slot(u32::MAX, z1));
        entries.extend_from_slice(z_tail.symbols());
        let z = ArgVector::new(entries);
        let mut e = li(k, &z.reciprocal(), cfg)?.value;
        let zb = z1 * tail_prod;
        for b in 0..=k1 {
            let l = (k1 - b) as usize;
            e += cal_b(l, zb, cfg.branch_at_one)? * shifted[b as usize] * mathf::sign((k1 + b) as usize);
        }
        out.push(e);
    }
    Ok(out)
}
