use num_complex::Complex64;

use super::BranchSign;
use crate::mathf::{self, PI};
use crate::{Error, Result};

/// Values this close to 1 are treated as exactly 1 when choosing the branch.
const ONE_TOL: f64 = 1e-13;

/// Principal logarithm with the cut along `(-∞, 0]` and `Im ∈ (-π, π]`.
pub fn principal_log(z: Complex64) -> Result<Complex64> {
    if z.re == 0.0 && z.im == 0.0 {
        return Err(Error::LogOfZero);
    }
    let modulus = libm::hypot(z.re, z.im);
    let arg = if z.im == 0.0 && z.re < 0.0 {
        // atan2(-0.0, x<0) = -π would leave the half-open range
        PI
    } else {
        libm::atan2(z.im, z.re)
    };
    Ok(Complex64::new(mathf::ln(modulus), arg))
}

/// `log(-z)`, where `z = 1` yields `±πi` according to `branch`.
pub fn log_minus(z: Complex64, branch: BranchSign) -> Result<Complex64> {
    if (z - Complex64::new(1.0, 0.0)).norm() <= ONE_TOL {
        return Ok(Complex64::new(0.0, branch.sign() * PI));
    }
    principal_log(-z)
}
