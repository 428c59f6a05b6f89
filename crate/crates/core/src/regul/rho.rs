use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Sub};

use num_complex::Complex64;
use num_traits::Zero;
use once_cell::race::OnceBox;

use crate::error::{Error, Result};
use crate::numcore::{ComplexDd, Dd, ZetaTable, MAX_ZETA};

/// Highest polynomial degree `ρ` is tabulated for.
pub const MAX_REG_DEGREE: usize = MAX_ZETA;

/// Polynomial in `T`, lowest degree first, with double-double complex
/// coefficients so that `ρ` and `ρ⁻¹` compose to the identity well beyond
/// `f64` precision.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct TPoly {
    coeffs: Vec<ComplexDd>,
}

impl TPoly {
    pub fn new(coeffs: Vec<Complex64>) -> Self {
        Self {
            coeffs: coeffs.into_iter().map(ComplexDd::from).collect(),
        }
    }

    pub fn from_dd(coeffs: Vec<ComplexDd>) -> Self {
        Self { coeffs }
    }

    pub fn constant(c: Complex64) -> Self {
        Self::new(vec![c])
    }

    /// `T^n`.
    pub fn monomial(n: usize) -> Self {
        let mut coeffs = vec![Complex64::zero(); n + 1];
        coeffs[n] = Complex64::new(1.0, 0.0);
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> Vec<Complex64> {
        self.coeffs.iter().map(|c| c.to_c64()).collect()
    }

    pub fn coeff(&self, n: usize) -> Complex64 {
        self.coeff_dd(n).to_c64()
    }

    pub fn coeff_dd(&self, n: usize) -> ComplexDd {
        self.coeffs.get(n).copied().unwrap_or(ComplexDd::ZERO)
    }

    /// Index of the highest stored coefficient (0 for the empty polynomial).
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn eval(&self, t: Complex64) -> Complex64 {
        self.coeffs()
            .iter()
            .rev()
            .fold(Complex64::zero(), |acc, c| acc * t + c)
    }

    /// `P(T + s)`.
    pub fn shifted(&self, s: Complex64) -> TPoly {
        let n = self.coeffs.len();
        let s = ComplexDd::from(s);
        let mut out = vec![ComplexDd::ZERO; n];
        // Horner in the polynomial ring: out ← out·(T + s) + c
        for &c in self.coeffs.iter().rev() {
            let mut next = vec![ComplexDd::ZERO; n];
            for (i, &o) in out.iter().enumerate() {
                next[i] = next[i] + o * s;
                if i + 1 < n {
                    next[i + 1] = next[i + 1] + o;
                }
            }
            next[0] = next[0] + c;
            out = next;
        }
        TPoly { coeffs: out }
    }

    /// Largest coefficientwise modulus of `self − other`.
    pub fn max_abs_diff(&self, other: &TPoly) -> f64 {
        let n = self.coeffs.len().max(other.coeffs.len());
        (0..n)
            .map(|i| (self.coeff_dd(i) - other.coeff_dd(i)).norm())
            .fold(0.0, f64::max)
    }
}

impl Add for &TPoly {
    type Output = TPoly;

    fn add(self, rhs: &TPoly) -> TPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        TPoly {
            coeffs: (0..n).map(|i| self.coeff_dd(i) + rhs.coeff_dd(i)).collect(),
        }
    }
}

impl Sub for &TPoly {
    type Output = TPoly;

    fn sub(self, rhs: &TPoly) -> TPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        TPoly {
            coeffs: (0..n).map(|i| self.coeff_dd(i) - rhs.coeff_dd(i)).collect(),
        }
    }
}

impl Mul<Complex64> for &TPoly {
    type Output = TPoly;

    fn mul(self, rhs: Complex64) -> TPoly {
        let rhs = ComplexDd::from(rhs);
        TPoly {
            coeffs: self.coeffs.iter().map(|&c| c * rhs).collect(),
        }
    }
}

/// The linear map `ρ(e^{Tu}) = Γ(1+u) e^{(T+γ)u}` and its inverse.
///
/// `Γ(1+u)e^{γu} = exp(Σ_{k≥2} ζ(k)(−u)^k/k)`; the inverse uses the negated
/// exponent.
#[derive(Debug, Clone, PartialEq)]
pub struct RhoMap {
    forward: Vec<Dd>,
    inverse: Vec<Dd>,
}

/// Coefficients of `exp(sign · Σ_{k≥2} ζ(k)(−u)^k/k)` up to `u^MAX_REG_DEGREE`.
fn exp_series(table: &ZetaTable, sign: f64) -> Vec<Dd> {
    let n = MAX_REG_DEGREE;
    let mut s = vec![Dd::ZERO; n + 1];
    for (k, sk) in s.iter_mut().enumerate().skip(2) {
        let z = table.zeta_dd(k as u32).unwrap_or(Dd::from(f64::NAN));
        let alt = if k % 2 == 0 { sign } else { -sign };
        *sk = z * Dd::from(alt) / Dd::from(k as f64);
    }
    // n·A_n = Σ_k k·s_k·A_{n−k}
    let mut a = vec![Dd::ZERO; n + 1];
    a[0] = Dd::ONE;
    for m in 1..=n {
        let mut acc = Dd::ZERO;
        for k in 1..=m {
            acc = acc + Dd::from(k as f64) * s[k] * a[m - k];
        }
        a[m] = acc / Dd::from(m as f64);
    }
    a
}

fn apply_series(p: &TPoly, a: &[Dd]) -> Result<TPoly> {
    let deg = p.degree();
    if deg > MAX_REG_DEGREE {
        return Err(Error::DegreeTooHigh(deg));
    }
    let mut out = vec![ComplexDd::ZERO; deg + 1];
    for n in 0..=deg {
        let c = p.coeff_dd(n);
        if c.is_zero() {
            continue;
        }
        // ρ(T^n) = Σ_j n!/(n−j)! A_j T^{n−j}
        let mut falling = Dd::ONE;
        for j in 0..=n {
            out[n - j] = out[n - j] + c.scale(falling * a[j]);
            falling = falling * Dd::from((n - j) as f64);
        }
    }
    Ok(TPoly::from_dd(out))
}

impl RhoMap {
    pub fn new(table: &ZetaTable) -> Self {
        Self::with_tables(table, table)
    }

    /// Forward and inverse built from separate tables. With equal tables the
    /// two maps are mutually inverse; the split exists for negative controls.
    pub fn with_tables(forward: &ZetaTable, inverse: &ZetaTable) -> Self {
        Self {
            forward: exp_series(forward, 1.0),
            inverse: exp_series(inverse, -1.0),
        }
    }

    pub fn global() -> &'static RhoMap {
        static CELL: OnceBox<RhoMap> = OnceBox::new();
        CELL.get_or_init(|| alloc::boxed::Box::new(RhoMap::new(ZetaTable::global())))
    }

    /// Coefficients `A_j` of `Γ(1+u)e^{γu}`.
    pub fn forward_series(&self) -> Vec<f64> {
        self.forward.iter().map(|a| a.to_f64()).collect()
    }

    pub fn apply(&self, p: &TPoly) -> Result<TPoly> {
        apply_series(p, &self.forward)
    }

    pub fn apply_inverse(&self, p: &TPoly) -> Result<TPoly> {
        apply_series(p, &self.inverse)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numcore::zeta_const;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn low_degree_images() {
        let rho = RhoMap::global();
        let z2 = zeta_const(2).unwrap();
        let z3 = zeta_const(3).unwrap();
        assert!(rho.apply(&TPoly::monomial(1)).unwrap().max_abs_diff(&TPoly::monomial(1)) < 1e-16);
        let want2 = TPoly::new(vec![c(z2), c(0.0), c(1.0)]);
        assert!(rho.apply(&TPoly::monomial(2)).unwrap().max_abs_diff(&want2) < 1e-15);
        let want3 = TPoly::new(vec![c(-2.0 * z3), c(3.0 * z2), c(0.0), c(1.0)]);
        assert!(rho.apply(&TPoly::monomial(3)).unwrap().max_abs_diff(&want3) < 1e-14);
    }

    #[test]
    fn series_matches_gamma_value() {
        // Γ(5/4) = 0.9064024770554771
        let a = RhoMap::global().forward_series();
        let u: f64 = 0.25;
        let sum: f64 = a.iter().rev().fold(0.0, |acc, aj| acc * u + aj);
        let want = 0.906_402_477_055_477 * crate::mathf::exp(crate::numcore::euler_gamma() * u);
        assert!((sum - want).abs() < 1e-9, "{sum} vs {want}");
    }

    #[test]
    fn round_trip() {
        let rho = RhoMap::global();
        for n in 0..=8 {
            let p = TPoly::monomial(n);
            let back = rho.apply_inverse(&rho.apply(&p).unwrap()).unwrap();
            assert!(back.max_abs_diff(&p) < 1e-12);
            let fwd = rho.apply(&rho.apply_inverse(&p).unwrap()).unwrap();
            assert!(fwd.max_abs_diff(&p) < 1e-12);
        }
    }

    #[test]
    fn shift_and_eval() {
        let p = TPoly::new(vec![c(1.0), c(2.0), c(3.0)]);
        let s = c(0.5);
        let q = p.shifted(s);
        let t = Complex64::new(0.3, -0.2);
        assert!((q.eval(t) - p.eval(t + s)).norm() < 1e-15);
    }
}
