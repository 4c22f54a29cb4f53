//! Log-likelihood, scores, observed information and maximum-likelihood
//! estimation for (α, β).
//!
//! With s the arithmetic and r the harmonic mean of the data,
//!
//! ℓ(α, β) = −n log(2√(2π)) − n log α − (n/2) log β − (3/2) Σ log tᵢ
//!           + Σ log(β + tᵢ) − (n / 2α²)(s/β + β/r − 2).

use serde::{Deserialize, Serialize};

use crate::dist::BsParams;
use crate::error::{domain, Error, Result};
use crate::numeric::{find_root_bracketed, maximize_quasi_newton, Tolerance};
use crate::sample::Sample;

/// log(2√(2π)).
pub(crate) const LN_2_SQRT_2PI: f64 = 1.612_085_713_764_618;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScoreVector {
    pub d_alpha: f64,
    pub d_beta: f64,
}

impl ScoreVector {
    pub fn norm(&self) -> f64 {
        self.d_alpha.hypot(self.d_beta)
    }
}

/// A point estimate together with the objective it maximizes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FitResult {
    pub estimator: String,
    pub params: BsParams,
    /// Value of the maximized objective (the log-likelihood for the MLE).
    pub objective: f64,
    pub converged: bool,
    pub iterations: usize,
    pub gradient_norm: f64,
}

/// s/β + β/r − 2 = n⁻¹ Σ(tᵢ/β + β/tᵢ − 2), clamped at zero against rounding.
pub(crate) fn quad_form(sample: &Sample, beta: f64) -> f64 {
    (sample.mean() / beta + beta / sample.harmonic_mean() - 2.0).max(0.0)
}

pub fn loglik(sample: &Sample, p: &BsParams) -> Result<f64> {
    p.validate()?;
    let n = sample.len() as f64;
    let (a, b) = (p.alpha, p.beta);
    let ln_sum: f64 = sample.values().iter().map(|t| (b + t).ln()).sum();
    Ok(-n * (LN_2_SQRT_2PI + a.ln() + 0.5 * b.ln()) - 1.5 * sample.sum_ln() + ln_sum
        - n * quad_form(sample, b) / (2.0 * a * a))
}

pub fn score(sample: &Sample, p: &BsParams) -> Result<ScoreVector> {
    p.validate()?;
    let n = sample.len() as f64;
    let (a, b) = (p.alpha, p.beta);
    let (s, r) = (sample.mean(), sample.harmonic_mean());
    let inv_sum: f64 = sample.values().iter().map(|t| (b + t).recip()).sum();
    Ok(ScoreVector {
        d_alpha: -n / a + n * quad_form(sample, b) / (a * a * a),
        d_beta: -n / (2.0 * b) + inv_sum + n * (s / (b * b) - 1.0 / r) / (2.0 * a * a),
    })
}

/// Contribution of a single observation to the score.
pub fn per_obs_score(t: f64, p: &BsParams) -> Result<ScoreVector> {
    p.validate()?;
    if !(t.is_finite() && t > 0.0) {
        return Err(domain("failure time must be finite and > 0", t));
    }
    let (a, b) = (p.alpha, p.beta);
    Ok(ScoreVector {
        d_alpha: -1.0 / a + (t / b + b / t - 2.0) / (a * a * a),
        d_beta: -0.5 / b + 1.0 / (b + t) + (t / (b * b) - 1.0 / t) / (2.0 * a * a),
    })
}

fn check_beta(beta: f64) -> Result<()> {
    if !(beta.is_finite() && beta > 0.0) {
        return Err(domain("beta must be finite and > 0", beta));
    }
    Ok(())
}

/// K(β): harmonic mean of β + tᵢ.
pub fn k_fun(sample: &Sample, beta: f64) -> Result<f64> {
    check_beta(beta)?;
    let n = sample.len() as f64;
    Ok(n / sample.values().iter().map(|t| (beta + t).recip()).sum::<f64>())
}

/// K′(β) = n Σ(β + tᵢ)⁻² / [Σ(β + tᵢ)⁻¹]².
pub fn k_prime(sample: &Sample, beta: f64) -> Result<f64> {
    check_beta(beta)?;
    let n = sample.len() as f64;
    let (s1, s2) = sample.values().iter().fold((0.0, 0.0), |(s1, s2), t| {
        let w = (beta + t).recip();
        (s1 + w, s2 + w * w)
    });
    Ok(n * s2 / (s1 * s1))
}

/// g(β) = β² − β[2r + K(β)] + r[s + K(β)], whose roots are the stationary
/// points of the β-profile.
fn beta_equation(sample: &Sample, beta: f64) -> f64 {
    let (s, r) = (sample.mean(), sample.harmonic_mean());
    let n = sample.len() as f64;
    let k = n / sample.values().iter().map(|t| (beta + t).recip()).sum::<f64>();
    beta * beta - beta * (2.0 * r + k) + r * (s + k)
}

const BETA_SCAN_POINTS: usize = 64;

/// Root of the β estimating equation that maximizes ℓ(α, ·).
///
/// The equation does not involve α, so the result is the joint-MLE β̂ for
/// every α; `alpha` only ranks competing roots.
pub fn restricted_beta_mle(sample: &Sample, alpha: f64) -> Result<f64> {
    if !(alpha.is_finite() && alpha > 0.0) {
        return Err(domain("alpha must be finite and > 0", alpha));
    }
    sample.require_len(2)?;
    if sample.is_constant() {
        return Ok(sample.values()[0]);
    }
    let tol = Tolerance::default();
    let (mut lo, mut hi) = (sample.min(), sample.max());
    for _ in 0..60 {
        let roots = scan_roots(sample, lo, hi, &tol)?;
        if !roots.is_empty() {
            let mut best = (f64::NEG_INFINITY, roots[0]);
            for &root in &roots {
                let value = loglik(sample, &BsParams { alpha, beta: root })?;
                if value > best.0 {
                    best = (value, root);
                }
            }
            return Ok(best.1);
        }
        lo *= 0.5;
        hi *= 2.0;
    }
    Err(Error::Convergence {
        iterations: 60,
        best: vec![lo, hi],
    })
}

/// All sign changes of g on a grid over [lo, hi], each refined by Brent.
fn scan_roots(sample: &Sample, lo: f64, hi: f64, tol: &Tolerance) -> Result<Vec<f64>> {
    let (s, r) = (sample.mean(), sample.harmonic_mean());
    let mut grid: Vec<f64> = (0..=BETA_SCAN_POINTS)
        .map(|i| lo + (hi - lo) * i as f64 / BETA_SCAN_POINTS as f64)
        .collect();
    // g(r) ≥ 0 > g(s) for non-constant samples, so including r and s as
    // nodes guarantees a detected sign change.
    grid.extend([r, s].iter().filter(|v| (lo..=hi).contains(*v)));
    grid.sort_by(f64::total_cmp);
    grid.dedup();

    let g = |beta: f64| beta_equation(sample, beta);
    let mut roots = Vec::new();
    let mut prev = (grid[0], g(grid[0]));
    if prev.1 == 0.0 {
        roots.push(prev.0);
    }
    for &x in &grid[1..] {
        let gx = g(x);
        if gx == 0.0 {
            roots.push(x);
        } else if prev.1 != 0.0 && prev.1.signum() != gx.signum() {
            let scale = x.abs().max(1.0);
            let rtol = Tolerance {
                abs_x: tol.abs_x * scale,
                ..*tol
            };
            roots.push(find_root_bracketed(g, prev.0, x, &rtol)?);
        }
        prev = (x, gx);
    }
    Ok(roots)
}

/// α̂_β = √(s/β + β/r − 2). Zero only for a constant sample at β = c,
/// which is a boundary estimate.
pub fn restricted_alpha_mle(sample: &Sample, beta: f64) -> Result<f64> {
    check_beta(beta)?;
    Ok(quad_form(sample, beta).sqrt())
}

fn require_nondegenerate(sample: &Sample) -> Result<()> {
    sample.require_len(2)?;
    if sample.is_constant() {
        return Err(Error::DegenerateSample(
            "constant sample: the shape estimate lies on the boundary alpha = 0",
        ));
    }
    Ok(())
}

/// Joint MLE from the profile construction: β̂ from the α-free estimating
/// equation, then α̂ = α̂_β̂.
pub fn full_mle(sample: &Sample) -> Result<FitResult> {
    require_nondegenerate(sample)?;
    let beta = restricted_beta_mle(sample, 1.0)?;
    let alpha = restricted_alpha_mle(sample, beta)?;
    let params = BsParams::new(alpha, beta)?;
    Ok(FitResult {
        estimator: "MLE".into(),
        params,
        objective: loglik(sample, &params)?,
        converged: true,
        iterations: 0,
        gradient_norm: score(sample, &params)?.norm(),
    })
}

/// Joint MLE by BFGS with analytic gradient, started from the
/// modified-moment estimates and run in (log α, log β).
pub fn full_mle_quasi_newton(sample: &Sample, tol: &Tolerance) -> Result<FitResult> {
    require_nondegenerate(sample)?;
    let start = crate::estimators::mme(sample)?;
    let x0 = [start.alpha.ln(), start.beta.ln()];
    let f = |x: &[f64]| {
        loglik(sample, &BsParams { alpha: x[0].exp(), beta: x[1].exp() }).unwrap_or(f64::NAN)
    };
    let grad = |x: &[f64]| {
        let p = BsParams { alpha: x[0].exp(), beta: x[1].exp() };
        match score(sample, &p) {
            Ok(g) => vec![p.alpha * g.d_alpha, p.beta * g.d_beta],
            Err(_) => vec![f64::NAN; 2],
        }
    };
    let r = maximize_quasi_newton(f, grad, &x0, tol)?;
    let params = BsParams::new(r.argmax[0].exp(), r.argmax[1].exp())?;
    Ok(FitResult {
        estimator: "MLE (BFGS)".into(),
        params,
        objective: r.value,
        converged: r.converged,
        iterations: r.iterations,
        gradient_norm: score(sample, &params)?.norm(),
    })
}

/// Observed information for β at (α, β): −∂²ℓ/∂β²
/// = −n/(2β²) + Σ(β + tᵢ)⁻² + n s / (α² β³).
///
/// Σ(β + tᵢ)⁻² is the n K′(β)/K(β)² term of the closed form.
pub fn obs_info_beta(sample: &Sample, alpha: f64, beta: f64) -> Result<f64> {
    BsParams::new(alpha, beta)?;
    let n = sample.len() as f64;
    let s2: f64 = sample.values().iter().map(|t| (beta + t).powi(-2)).sum();
    Ok(-0.5 * n / (beta * beta) + s2 + n * sample.mean() / (alpha * alpha * beta.powi(3)))
}

/// The closed form as typeset, with the harmonic mean r in the last term
/// instead of s. Kept to measure its discrepancy from the curvature of ℓ.
pub fn obs_info_beta_printed(sample: &Sample, alpha: f64, beta: f64) -> Result<f64> {
    BsParams::new(alpha, beta)?;
    let n = sample.len() as f64;
    let k = k_fun(sample, beta)?;
    let kp = k_prime(sample, beta)?;
    Ok(-n / (beta * beta)
        + 0.5 * n * (1.0 / (beta * beta) + 2.0 * kp / (k * k))
        + n / (alpha * alpha) * sample.harmonic_mean() / beta.powi(3))
}

/// Observed information for α at its restricted MLE: 2n / α̂_β².
pub fn obs_info_alpha(sample: &Sample, alpha_hat_beta: f64, beta: f64) -> Result<f64> {
    check_beta(beta)?;
    if alpha_hat_beta == 0.0 {
        return Err(Error::Boundary("restricted shape estimate is zero"));
    }
    if !(alpha_hat_beta.is_finite() && alpha_hat_beta > 0.0) {
        return Err(domain("alpha must be finite and > 0", alpha_hat_beta));
    }
    Ok(2.0 * sample.len() as f64 / (alpha_hat_beta * alpha_hat_beta))
}
