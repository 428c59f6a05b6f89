use alloc::boxed::Box;

use once_cell::race::OnceBox;

use super::{bernoulli_number, Dd};
use crate::{Error, Rational, Result};

/// Largest `k` for which `ζ(k)` is tabulated.
pub const MAX_ZETA: usize = 16;

/// Euler–Maclaurin cut-off: the first `N - 1` terms are summed directly.
/// A power of two keeps `ln N` exact in terms of `ln 2`.
const EM_CUTOFF_LOG2: u32 = 5;
const EM_CUTOFF: u32 = 1 << EM_CUTOFF_LOG2;
/// Number of Bernoulli correction terms (uses `B_2..=B_16`).
const EM_TERMS: usize = 8;

/// `ζ(2..=16)` and Euler's constant in double-double precision.
#[derive(Debug, Clone, PartialEq)]
pub struct ZetaTable {
    zeta: [Dd; MAX_ZETA + 1],
    gamma: Dd,
}

static GLOBAL: OnceBox<ZetaTable> = OnceBox::new();

impl ZetaTable {
    /// Computes every entry by Euler–Maclaurin summation.
    pub fn compute() -> Self {
        let mut zeta = [Dd::ZERO; MAX_ZETA + 1];
        for (k, slot) in zeta.iter_mut().enumerate().skip(2) {
            *slot = zeta_euler_maclaurin(k as u32);
        }
        Self {
            zeta,
            gamma: gamma_euler_maclaurin(),
        }
    }

    /// Process-wide table, computed on first use.
    pub fn global() -> &'static ZetaTable {
        GLOBAL.get_or_init(|| Box::new(ZetaTable::compute()))
    }

    pub fn zeta_dd(&self, k: u32) -> Result<Dd> {
        if !(2..=MAX_ZETA as u32).contains(&k) {
            return Err(Error::ZetaOutOfRange(k));
        }
        Ok(self.zeta[k as usize])
    }

    pub fn zeta(&self, k: u32) -> Result<f64> {
        self.zeta_dd(k).map(Dd::to_f64)
    }

    pub fn gamma_dd(&self) -> Dd {
        self.gamma
    }

    pub fn gamma(&self) -> f64 {
        self.gamma.to_f64()
    }

    /// Copy with one entry replaced; used to build negative controls.
    pub fn with_zeta(&self, k: u32, value: f64) -> Result<Self> {
        self.zeta(k)?;
        let mut out = self.clone();
        out.zeta[k as usize] = Dd::from(value);
        Ok(out)
    }
}

/// `ζ(k)` for `2 <= k <= 16` from the cached table.
pub fn zeta_const(k: u32) -> Result<f64> {
    ZetaTable::global().zeta(k)
}

pub fn euler_gamma() -> f64 {
    ZetaTable::global().gamma()
}

fn bern(j: usize) -> Rational {
    bernoulli_number(j).expect("Bernoulli table covers the Euler-Maclaurin terms")
}

fn zeta_euler_maclaurin(s: u32) -> Dd {
    let n = Dd::from(EM_CUTOFF as f64);
    // smallest terms first
    let mut head = Dd::ZERO;
    for m in (1..EM_CUTOFF).rev() {
        head = head + Dd::from(m as f64).powi(s).recip();
    }
    let n_pow = |e: u32| n.powi(e).recip();
    let mut tail = n_pow(s - 1) / Dd::from((s - 1) as f64) + n_pow(s) * Dd::from(0.5);
    // B_{2j}/(2j)! · s(s+1)…(s+2j-2) · N^{-s-2j+1}
    let mut coef = Rational::from_integer(s as i128) / 2;
    for j in 1..=EM_TERMS {
        let jj = j as i128;
        tail = tail + Dd::from_rational(bern(2 * j) * coef) * n_pow(s + 2 * j as u32 - 1);
        coef = coef * (s as i128 + 2 * jj - 1) * (s as i128 + 2 * jj) / ((2 * jj + 1) * (2 * jj + 2));
    }
    tail + head
}

fn gamma_euler_maclaurin() -> Dd {
    let n = Dd::from(EM_CUTOFF as f64);
    let mut harmonic = Dd::ZERO;
    for m in (1..=EM_CUTOFF).rev() {
        harmonic = harmonic + Dd::from(m as f64).recip();
    }
    let mut corr = Dd::ZERO;
    for j in (1..=EM_TERMS).rev() {
        let c = bern(2 * j) / (2 * j as i128);
        corr = corr + Dd::from_rational(c) * n.powi(2 * j as u32).recip();
    }
    let ln_n = Dd::ln2() * Dd::from(EM_CUTOFF_LOG2 as f64);
    harmonic - ln_n - n.recip() * Dd::from(0.5) + corr
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mathf::PI;

    #[test]
    fn even_zeta_matches_pi_powers() {
        let z2 = zeta_const(2).unwrap();
        let z4 = zeta_const(4).unwrap();
        assert!((z2 * 6.0 / (PI * PI) - 1.0).abs() < 1e-15);
        assert!((z4 * 90.0 / (PI * PI * PI * PI) - 1.0).abs() < 1e-15);
        assert!((z2 - 1.644934066848226).abs() < 1e-15);
        assert!((z4 - 1.082323233711138).abs() < 1e-15);
    }

    #[test]
    fn odd_zeta_and_gamma() {
        assert!((zeta_const(3).unwrap() - 1.2020569031595942).abs() < 1e-15);
        assert!((euler_gamma() - 0.5772156649015329).abs() < 1e-15);
    }

    #[test]
    fn zeta_decreases_to_one() {
        let t = ZetaTable::global();
        for k in 2..16 {
            assert!(t.zeta(k).unwrap() > t.zeta(k + 1).unwrap());
        }
        assert!((t.zeta(16).unwrap() - 1.0000152822594086).abs() < 1e-15);
    }

    #[test]
    fn twenty_digit_values() {
        let t = ZetaTable::global();
        // γ = 0.57721566490153286060651209…, ζ(3) = 1.20205690315959428539973816…
        let g = t.gamma_dd() - Dd::new(0.5772156649015329, -4.942915152430645e-18);
        assert!(g.to_f64().abs() < 1e-22, "{g:?}");
        let z3 = t.zeta_dd(3).unwrap() - Dd::new(1.2020569031595942, 4.875891010379532e-17);
        assert!(z3.to_f64().abs() < 1e-22, "{z3:?}");
        // ζ(4)/ζ(2)^2 = 2/5 and ζ(6)/ζ(2)^3 = 8/35
        let z2 = t.zeta_dd(2).unwrap();
        let r4 = t.zeta_dd(4).unwrap() / (z2 * z2) - Dd::from(2.0) / Dd::from(5.0);
        assert!(r4.to_f64().abs() < 1e-22);
        let r6 = t.zeta_dd(6).unwrap() / (z2 * z2 * z2) - Dd::from(8.0) / Dd::from(35.0);
        assert!(r6.to_f64().abs() < 1e-22);
    }

    #[test]
    fn out_of_range() {
        assert_eq!(zeta_const(1), Err(Error::ZetaOutOfRange(1)));
        assert_eq!(zeta_const(17), Err(Error::ZetaOutOfRange(17)));
    }

    #[test]
    fn override_leaves_global_untouched() {
        let t = ZetaTable::global().with_zeta(2, 1.5).unwrap();
        assert_eq!(t.zeta(2).unwrap(), 1.5);
        assert!((zeta_const(2).unwrap() - 1.5).abs() > 0.1);
    }
}
