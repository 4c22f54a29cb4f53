//! Birnbaum–Saunders density, distribution function, quantile, moments and
//! a reproducible sampler.

use rand_chacha::ChaCha20Rng;
use rand_core::{RngCore, SeedableRng};
use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::numeric::{std_normal_cdf, std_normal_quantile};
use crate::sample::Sample;

/// Shape `alpha` and scale `beta` (the median).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BsParams {
    pub alpha: f64,
    pub beta: f64,
}

impl BsParams {
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        let p = BsParams { alpha, beta };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.alpha.is_finite() && self.alpha > 0.0) {
            return Err(domain("alpha must be finite and > 0", self.alpha));
        }
        if !(self.beta.is_finite() && self.beta > 0.0) {
            return Err(domain("beta must be finite and > 0", self.beta));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Moments {
    pub mean: f64,
    pub variance: f64,
    pub mean_reciprocal: f64,
    pub variance_reciprocal: f64,
}

/// Independent, reproducible random stream keyed by `(seed, stream_id)`.
///
/// Backed by ChaCha20, whose 64-bit stream selector gives 2⁶⁴ disjoint
/// streams per seed. Cloning copies the position; a single instance must not
/// be shared between threads while drawing.
#[derive(Debug, Clone)]
pub struct RngStream {
    seed: u64,
    stream_id: u64,
    rng: ChaCha20Rng,
}

impl RngStream {
    pub fn new(seed: u64, stream_id: u64) -> Self {
        let mut rng = ChaCha20Rng::seed_from_u64(seed);
        rng.set_stream(stream_id);
        RngStream {
            seed,
            stream_id,
            rng,
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn stream_id(&self) -> u64 {
        self.stream_id
    }

    pub fn next_u64(&mut self) -> u64 {
        self.rng.next_u64()
    }

    /// Uniform on the open interval (0, 1) with 53 bits of resolution.
    pub fn next_open01(&mut self) -> f64 {
        ((self.next_u64() >> 11) as f64 + 0.5) * (1.0 / (1u64 << 53) as f64)
    }

    pub fn next_std_normal(&mut self) -> f64 {
        std_normal_quantile(self.next_open01()).expect("open-interval uniform")
    }
}

fn check_time(t: f64) -> Result<()> {
    if !(t.is_finite() && t > 0.0) {
        return Err(domain("failure time must be finite and > 0", t));
    }
    Ok(())
}

/// Log-density with the full normalizing constant.
pub fn log_pdf(t: f64, p: &BsParams) -> Result<f64> {
    p.validate()?;
    check_time(t)?;
    let ratio = p.beta / t;
    let bracket = ratio.sqrt() * (1.0 + ratio);
    let q = t / p.beta + ratio - 2.0;
    Ok(-(2.0 * (2.0 * std::f64::consts::PI).sqrt() * p.alpha * p.beta).ln() + bracket.ln()
        - q / (2.0 * p.alpha * p.alpha))
}

pub fn pdf(t: f64, p: &BsParams) -> Result<f64> {
    log_pdf(t, p).map(f64::exp)
}

/// (1/α)[(t/β)^{1/2} − (β/t)^{1/2}], the standard-normal argument of the cdf.
fn standardize(t: f64, p: &BsParams) -> f64 {
    let ratio = (t / p.beta).sqrt();
    (ratio - ratio.recip()) / p.alpha
}

pub fn cdf(t: f64, p: &BsParams) -> Result<f64> {
    p.validate()?;
    check_time(t)?;
    std_normal_cdf(standardize(t, p))
}

/// Maps a standard-normal deviate through β·[αz/2 + √((αz/2)² + 1)]².
fn from_normal(z: f64, p: &BsParams) -> f64 {
    let w = 0.5 * p.alpha * z;
    let root = (w * w + 1.0).sqrt();
    // w + √(w²+1) loses precision for large negative w; use its reciprocal form.
    let base = if w >= 0.0 { w + root } else { (root - w).recip() };
    p.beta * base * base
}

pub fn quantile(prob: f64, p: &BsParams) -> Result<f64> {
    p.validate()?;
    if !(prob > 0.0 && prob < 1.0) {
        return Err(domain("quantile probability must lie in (0, 1)", prob));
    }
    Ok(from_normal(std_normal_quantile(prob)?, p))
}

pub fn moments(p: &BsParams) -> Result<Moments> {
    p.validate()?;
    let a2 = p.alpha * p.alpha;
    Ok(Moments {
        mean: p.beta * (1.0 + 0.5 * a2),
        variance: a2 * p.beta * p.beta * (1.0 + 1.25 * a2),
        mean_reciprocal: (1.0 + 0.5 * a2) / p.beta,
        variance_reciprocal: a2 / (p.beta * p.beta) * (1.0 + 1.25 * a2),
    })
}

/// Draws `n` observations by inverse transform, one uniform per draw.
pub fn sample(n: usize, p: &BsParams, rng: &mut RngStream) -> Result<Sample> {
    p.validate()?;
    if n == 0 {
        return Err(crate::error::Error::Config("sample size must be >= 1".into()));
    }
    let values = (0..n)
        .map(|_| from_normal(rng.next_std_normal(), p))
        .collect();
    Sample::new(values)
}
