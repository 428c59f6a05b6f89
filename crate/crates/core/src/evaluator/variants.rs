//! Star, weight-shifted and tilde variants, generic over the base evaluator.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
use num_traits::Zero;

use super::li;
use crate::error::{Error, Result};
use crate::mathf;
use crate::numcore::EvalConfig;
use crate::wordalg::{ArgVector, Index};

/// Source of the base values `Li^•_k(z)` the variants are assembled from.
pub trait BaseEval {
    fn base(&self, k: &Index, z: &ArgVector) -> Result<Complex64>;
}

/// Plain (convergent) values through [`li`].
#[derive(Debug, Clone, Copy)]
pub struct Plain<'a>(pub &'a EvalConfig);

impl BaseEval for Plain<'_> {
    fn base(&self, k: &Index, z: &ArgVector) -> Result<Complex64> {
        li(k, z, self.0).map(|r| r.value)
    }
}

/// All `2^{d−1}` contractions `(k'; z') ⪯ (k; z)`.
///
/// Bit `i` of the enumeration mask merges positions `i` and `i + 1`; mask 0
/// (no merges) comes first.
pub fn enum_contractions(k: &Index, z: &ArgVector) -> Result<Vec<(Index, ArgVector)>> {
    let d = k.depth();
    if d != z.len() {
        return Err(Error::DepthMismatch {
            index: d,
            args: z.len(),
        });
    }
    if d == 0 {
        return Ok(vec![(Index::empty(), ArgVector::empty())]);
    }
    let mut out = Vec::with_capacity(1 << (d - 1));
    for mask in 0u32..(1 << (d - 1)) {
        let mut parts = Vec::with_capacity(d);
        let mut syms = Vec::with_capacity(d);
        parts.push(k.parts()[0]);
        syms.push(z.get(0).clone());
        for i in 1..d {
            if mask & (1 << (i - 1)) != 0 {
                *parts.last_mut().unwrap() += k.parts()[i];
                let merged = syms.last().unwrap().product(z.get(i));
                *syms.last_mut().unwrap() = merged;
            } else {
                parts.push(k.parts()[i]);
                syms.push(z.get(i).clone());
            }
        }
        out.push((Index::new(parts)?, ArgVector::new(syms)));
    }
    Ok(out)
}

/// All `2^{d−1}` splittings of `d` positions into contiguous nonempty blocks,
/// as block lengths. Bit `i` of the mask cuts after position `i`.
pub fn enum_compositions(d: usize) -> Vec<Vec<usize>> {
    if d == 0 {
        return vec![Vec::new()];
    }
    (0u32..(1 << (d - 1)))
        .map(|mask| {
            let mut blocks = Vec::new();
            let mut len = 1;
            for i in 0..d - 1 {
                if mask & (1 << i) != 0 {
                    blocks.push(len);
                    len = 1;
                } else {
                    len += 1;
                }
            }
            blocks.push(len);
            blocks
        })
        .collect()
}

/// All `l ∈ ℤ_{≥0}^d` with `|l| = a`, in lexicographic order.
pub fn weak_compositions(a: u32, d: usize) -> Vec<Vec<u32>> {
    fn rec(a: u32, d: usize, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if d == 1 {
            prefix.push(a);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for first in 0..=a {
            prefix.push(first);
            rec(a - first, d - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if d == 0 {
        if a == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(a, d, &mut Vec::with_capacity(d), &mut out);
    out
}

fn shift_weight(k: &Index, l: &[u32]) -> f64 {
    k.parts()
        .iter()
        .zip(l)
        .map(|(&ki, &li)| mathf::binomial(ki + li - 1, li))
        .product()
}

/// `Li^{⋆,•}_k(z)`; the empty index gives 1.
pub fn star_with<B: BaseEval + ?Sized>(base: &B, k: &Index, z: &ArgVector) -> Result<Complex64> {
    let mut total = Complex64::zero();
    for (kc, zc) in enum_contractions(k, z)? {
        total += base.base(&kc, &zc)?;
    }
    Ok(total)
}

/// `Li^{a,•}_k(z)`; the empty index gives `[a = 0]`.
pub fn shifted_with<B: BaseEval + ?Sized>(
    base: &B,
    a: u32,
    k: &Index,
    z: &ArgVector,
) -> Result<Complex64> {
    if k.depth() != z.len() {
        return Err(Error::DepthMismatch {
            index: k.depth(),
            args: z.len(),
        });
    }
    if k.is_empty() {
        return Ok(if a == 0 { Complex64::new(1.0, 0.0) } else { Complex64::zero() });
    }
    let mut total = Complex64::zero();
    for l in weak_compositions(a, k.depth()) {
        let coef = shift_weight(k, &l);
        total += base.base(&k.shifted(&l), z)? * coef;
    }
    Ok(total * mathf::sign(a as usize))
}

/// `L̃i^{a,•}_k(z)`; zero for `a < 0`, `[a = 0]` for the empty index.
pub fn tilde_with<B: BaseEval + ?Sized>(
    base: &B,
    a: i64,
    k: &Index,
    z: &ArgVector,
) -> Result<Complex64> {
    if k.depth() != z.len() {
        return Err(Error::DepthMismatch {
            index: k.depth(),
            args: z.len(),
        });
    }
    if a < 0 {
        return Ok(Complex64::zero());
    }
    let a = a as u32;
    let d = k.depth();
    if d == 0 {
        return Ok(if a == 0 { Complex64::new(1.0, 0.0) } else { Complex64::zero() });
    }
    let blocks = enum_compositions(d);
    let mut total = Complex64::zero();
    for l in weak_compositions(a, d) {
        let coef = shift_weight(k, &l);
        let kl = k.shifted(&l);
        let mut inner = Complex64::zero();
        for lens in &blocks {
            let mut prod = Complex64::new(1.0, 0.0);
            let mut lo = 0;
            for &len in lens {
                prod *= star_with(base, &kl.slice(lo, lo + len), &z.slice(lo, lo + len))?;
                lo += len;
            }
            inner += prod * mathf::sign(d + lens.len());
        }
        total += inner * coef;
    }
    Ok(total * mathf::sign(a as usize))
}

/// Plain `Li^⋆_k(z)`.
pub fn li_star(k: &Index, z: &ArgVector, cfg: &EvalConfig) -> Result<Complex64> {
    star_with(&Plain(cfg), k, z)
}

/// Plain `Li^a_k(z)`.
pub fn li_a(a: u32, k: &Index, z: &ArgVector, cfg: &EvalConfig) -> Result<Complex64> {
    shifted_with(&Plain(cfg), a, k, z)
}

/// Plain `L̃i^a_k(z)`.
pub fn li_tilde_a(a: i64, k: &Index, z: &ArgVector, cfg: &EvalConfig) -> Result<Complex64> {
    tilde_with(&Plain(cfg), a, k, z)
}
