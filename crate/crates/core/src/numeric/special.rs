//! Standard normal distribution function, its inverse, and the chi-square(1)
//! survival function.

use statrs::function::erf;

use crate::error::{domain, Result};

const FRAC_1_SQRT_2PI: f64 = 0.398_942_280_401_432_7;

/// Standard normal density.
pub fn std_normal_pdf(x: f64) -> f64 {
    FRAC_1_SQRT_2PI * (-0.5 * x * x).exp()
}

/// Standard normal distribution function Φ(x), computed through erfc so that
/// both tails keep full relative precision.
pub fn std_normal_cdf(x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(domain("std_normal_cdf requires a finite argument", x));
    }
    Ok(0.5 * libm::erfc(-x * std::f64::consts::FRAC_1_SQRT_2))
}

/// Inverse of the standard normal distribution function.
///
/// The erfc-inverse starting value is polished with Newton steps on Φ.
pub fn std_normal_quantile(p: f64) -> Result<f64> {
    if !(p > 0.0 && p < 1.0) {
        return Err(domain("std_normal_quantile requires 0 < p < 1", p));
    }
    if p == 0.5 {
        return Ok(0.0);
    }
    let mut x = -std::f64::consts::SQRT_2 * erf::erfc_inv(2.0 * p);
    for _ in 0..2 {
        let density = std_normal_pdf(x);
        if density <= f64::MIN_POSITIVE {
            break;
        }
        // Work in the tail nearest to x to avoid cancellation in Φ(x) - p.
        let resid = if x <= 0.0 {
            std_normal_cdf(x)? - p
        } else {
            (1.0 - p) - std_normal_cdf(-x)?
        };
        let step = resid / density;
        if !step.is_finite() {
            break;
        }
        x -= step;
        if step.abs() <= 1e-16 * x.abs().max(1.0) {
            break;
        }
    }
    Ok(x)
}

/// Pr(χ²₁ > x) = 2(1 − Φ(√x)) = erfc(√(x/2)).
pub fn chisq1_sf(x: f64) -> Result<f64> {
    if x.is_nan() || x < 0.0 {
        return Err(domain("chisq1_sf requires x >= 0", x));
    }
    if x.is_infinite() {
        return Ok(0.0);
    }
    Ok(libm::erfc((0.5 * x).sqrt()))
}

/// Upper-γ quantile of χ²₁, i.e. the x with Pr(χ²₁ > x) = γ.
pub fn chisq1_upper_quantile(gamma: f64) -> Result<f64> {
    if !(gamma > 0.0 && gamma < 1.0) {
        return Err(domain("chi-square level must lie in (0, 1)", gamma));
    }
    let z = std_normal_quantile(1.0 - 0.5 * gamma)?;
    Ok(z * z)
}

/// Quantile of χ²₁ at cumulative probability `p`.
pub fn chisq1_quantile(p: f64) -> Result<f64> {
    if !(p > 0.0 && p < 1.0) {
        return Err(domain("chi-square probability must lie in (0, 1)", p));
    }
    chisq1_upper_quantile(1.0 - p)
}
