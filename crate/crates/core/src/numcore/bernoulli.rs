use alloc::vec::Vec;

use num_complex::Complex64;
use num_traits::Zero;
use once_cell::race::OnceBox;

use super::{log_minus, BranchSign};
use crate::mathf::{self, TAU};
use crate::{Rational, Result};

/// Largest Bernoulli index kept as an exact rational.
pub const MAX_BERNOULLI: usize = 16;

static TABLE: OnceBox<Vec<Rational>> = OnceBox::new();

/// Bernoulli numbers `B_0..=B_n` (with `B_1 = -1/2`) from
/// `Σ_{j=0}^{n} C(n+1, j) B_j = 0`.
pub fn bernoulli_numbers(n: usize) -> Vec<Rational> {
    let mut b: Vec<Rational> = Vec::with_capacity(n + 1);
    b.push(Rational::from_integer(1));
    for m in 1..=n {
        // C(m+1, j) built incrementally
        let mut binom: i128 = 1;
        let mut acc = Rational::zero();
        for (j, bj) in b.iter().enumerate() {
            acc += *bj * Rational::from_integer(binom);
            binom = binom * (m as i128 + 1 - j as i128) / (j as i128 + 1);
        }
        // binom is now C(m+1, m) = m + 1
        b.push(-acc / Rational::from_integer(binom));
    }
    b
}

fn table() -> &'static [Rational] {
    TABLE.get_or_init(|| alloc::boxed::Box::new(bernoulli_numbers(MAX_BERNOULLI)))
}

/// Exact `B_l` for `l <= MAX_BERNOULLI`.
pub fn bernoulli_number(l: usize) -> Option<Rational> {
    table().get(l).copied()
}

/// Bernoulli polynomial `B_l(x) = Σ_j C(l, j) B_j x^{l-j}` by Horner's rule.
///
/// Panics if `l > MAX_BERNOULLI`.
pub fn bernoulli_poly(l: usize, x: Complex64) -> Complex64 {
    assert!(l <= MAX_BERNOULLI, "Bernoulli polynomial order {l} out of range");
    let b = table();
    // coefficient of x^{l-j} is C(l, j) B_j; Horner runs from x^l down
    let mut acc = Complex64::zero();
    let mut binom: i128 = 1;
    for (j, bj) in b.iter().enumerate().take(l + 1) {
        let coeff = mathf::ratio_to_f64(*bj * Rational::from_integer(binom));
        acc = acc * x + coeff;
        binom = binom * (l as i128 - j as i128) / (j as i128 + 1);
    }
    acc
}

/// `ℬ_l(z) = (2πi)^l / l! · B_l(1/2 + log(-z) / (2πi))`.
pub fn cal_b(l: usize, z: Complex64, branch: BranchSign) -> Result<Complex64> {
    if l == 0 {
        if z.is_zero() {
            return Err(crate::Error::LogOfZero);
        }
        return Ok(Complex64::new(1.0, 0.0));
    }
    let two_pi_i = Complex64::new(0.0, TAU);
    let u = log_minus(z, branch)? / two_pi_i;
    let poly = bernoulli_poly(l, Complex64::new(0.5, 0.0) + u);
    Ok(mathf::cpowi(two_pi_i, l as u32) / mathf::factorial(l as u32) * poly)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mathf::PI;
    use crate::numcore::principal_log;

    fn r(n: i128, d: i128) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn known_bernoulli_numbers() {
        let b = bernoulli_numbers(16);
        assert_eq!(b[0], r(1, 1));
        assert_eq!(b[1], r(-1, 2));
        assert_eq!(b[2], r(1, 6));
        assert_eq!(b[3], r(0, 1));
        assert_eq!(b[4], r(-1, 30));
        assert_eq!(b[12], r(-691, 2730));
        assert_eq!(b[16], r(-3617, 510));
    }

    #[test]
    fn defining_recurrence_holds_exactly() {
        let b = bernoulli_numbers(16);
        for n in 1..=15usize {
            let mut binom: i128 = 1;
            let mut acc = Rational::zero();
            for (j, bj) in b.iter().enumerate().take(n + 1) {
                acc += *bj * Rational::from_integer(binom);
                binom = binom * (n as i128 + 1 - j as i128) / (j as i128 + 1);
            }
            assert!(acc.is_zero(), "n = {n}");
        }
    }

    #[test]
    fn polynomial_values() {
        let one = Complex64::new(1.0, 0.0);
        assert_eq!(bernoulli_poly(0, Complex64::new(3.7, -1.0)), one);
        assert!(bernoulli_poly(1, Complex64::new(0.5, 0.0)).norm() < 1e-16);
        let b2 = bernoulli_poly(2, Complex64::zero());
        assert!((b2.re - 1.0 / 6.0).abs() < 1e-16);
        // B_l(1 - x) = (-1)^l B_l(x)
        let x = Complex64::new(0.3, 0.7);
        for l in 0..=10 {
            let lhs = bernoulli_poly(l, one - x);
            let rhs = bernoulli_poly(l, x) * mathf::sign(l);
            assert!((lhs - rhs).norm() < 1e-12, "l = {l}");
        }
    }

    #[test]
    fn cal_b_low_orders() {
        let z = Complex64::new(-2.0, 1.5);
        let log = principal_log(-z).unwrap();
        assert_eq!(cal_b(0, z, BranchSign::Plus).unwrap(), Complex64::new(1.0, 0.0));
        assert!((cal_b(1, z, BranchSign::Plus).unwrap() - log).norm() < 1e-14);
        let b2 = log * log / 2.0 + PI * PI / 6.0;
        assert!((cal_b(2, z, BranchSign::Plus).unwrap() - b2).norm() < 1e-13);
        assert!(cal_b(1, Complex64::new(-1.0, 0.0), BranchSign::Plus).unwrap().norm() < 1e-16);
    }

    #[test]
    fn cal_b_at_one_uses_branch() {
        let one = Complex64::new(1.0, 0.0);
        let plus = cal_b(1, one, BranchSign::Plus).unwrap();
        let minus = cal_b(1, one, BranchSign::Minus).unwrap();
        assert!((plus - Complex64::new(0.0, PI)).norm() < 1e-15);
        assert!((minus - Complex64::new(0.0, -PI)).norm() < 1e-15);
    }

    #[test]
    fn cal_b_rejects_zero() {
        assert!(cal_b(2, Complex64::zero(), BranchSign::Plus).is_err());
        assert!(cal_b(0, Complex64::zero(), BranchSign::Plus).is_err());
    }
}
